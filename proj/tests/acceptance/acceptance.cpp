#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "oracle.hpp"
#include "symalg/catalog.hpp"
#include "symalg/report.hpp"

namespace symalg::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using Seq = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  template <class A, class B>
  void equal(const std::string& what, const A& got, const B& want) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << show(got) << ", expected " << show(want);
    fail(os.str());
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    r_.passed = false;
    if (r_.notes.size() < 12) r_.notes.push_back(what);
  }

 private:
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else {
      std::ostringstream os;
      os << "(";
      bool first = true;
      for (const auto& x : v) {
        os << (first ? "" : ", ") << show(x);
        first = false;
      }
      os << ")";
      return os.str();
    }
  }
  CriterionResult& r_;
};

// Largest prefix on which the two sequences agree; none when lambda = 1.
std::optional<std::int64_t> prefix_threshold(const Seq& socz, const Seq& c) {
  if (c.size() < 2) return std::nullopt;
  std::int64_t m = 0;
  while (static_cast<std::size_t>(m) < c.size() && socz[m] == c[m]) ++m;
  return m;
}

void compare_block(Recorder& rec, const std::string& tag, const BlockReport& b, const oracle::Invariants& want) {
  rec.equal(tag + " cartan", b.cartan.matrix, want.cartan);
  rec.equal(tag + " c_seq", b.profile.c_seq, want.c_seq);
  rec.equal(tag + " socz_seq", b.profile.socz_seq, want.socz_seq);
  rec.equal(tag + " lambda", b.profile.lambda, static_cast<std::int64_t>(want.lambda));
  rec.equal(tag + " k", b.profile.k, static_cast<std::int64_t>(want.center_dim));
  rec.equal(tag + " l", b.profile.l, static_cast<std::int64_t>(want.cartan.size()));
  rec.expect(b.profile.m == prefix_threshold(want.socz_seq, want.c_seq), tag + " m differs from the oracle threshold");
  rec.expect(b.checks.all_passed(), tag + " has failing checks");
}

oracle::Table cyclic_table(std::size_t n) {
  oracle::Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

// Augmentation ideal: span of g - 1.
std::vector<oracle::Row> augmentation(const oracle::GroupRing& r) {
  std::vector<oracle::Row> out;
  for (std::size_t g = 1; g < r.dim(); ++g) out.push_back(r.sub(r.element(g), r.one()));
  return out;
}

oracle::Row power(const oracle::GroupRing& r, const oracle::Row& x, std::size_t n) {
  oracle::Row y = r.one();
  for (std::size_t i = 0; i < n; ++i) y = r.mul(y, x);
  return y;
}

bool zero(const oracle::Row& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

void cyclic_oracle(CriterionResult& res) {
  Recorder rec(res);
  for (std::int64_t p : {2, 3, 5}) {
    const std::string tag = "C" + std::to_string(p) + " p=" + std::to_string(p);
    const oracle::GroupRing ring(cyclic_table(static_cast<std::size_t>(p)), p);
    // FC_p = F[x]/(x^p) with x = g - 1.
    const oracle::Row x = ring.sub(ring.element(1), ring.one());
    rec.expect(!zero(power(ring, x, p - 1)) && zero(power(ring, x, p)), tag + ": x^p = 0 != x^(p-1) fails");
    const auto want = compute(ring, {ring.one()}, augmentation(ring));
    Seq ramp;
    for (std::int64_t n = 1; n <= p; ++n) ramp.push_back(n);
    rec.equal(tag + " oracle c_seq", want.c_seq, ramp);
    rec.equal(tag + " oracle socz_seq", want.socz_seq, ramp);
    rec.equal(tag + " oracle cartan", want.cartan, IntMatrix{{p}});

    const auto got = analyze_group(make_catalog_group("cyclic:" + std::to_string(p)), static_cast<std::uint32_t>(p),
                                   std::nullopt);
    rec.equal(tag + " block count", got.reports.size(), std::size_t{1});
    if (got.reports.size() != 1) continue;
    compare_block(rec, tag, got.reports[0], want);
    rec.expect(got.reports[0].profile.m == p, tag + ": m != p");
  }
}

void klein_oracle(CriterionResult& res) {
  Recorder rec(res);
  oracle::Table t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  const oracle::GroupRing ring(t, 2);
  // FV4 = F[x, y]/(x^2, y^2) with x = a - 1, y = b - 1.
  const oracle::Row x = ring.sub(ring.element(1), ring.one());
  const oracle::Row y = ring.sub(ring.element(2), ring.one());
  rec.expect(zero(ring.mul(x, x)) && zero(ring.mul(y, y)) && !zero(ring.mul(x, y)), "x^2 = y^2 = 0 != xy fails");
  const auto want = compute(ring, {ring.one()}, {x, y, ring.mul(x, y)});
  rec.equal("oracle dim J^n", want.radical_power_dims, std::vector<std::size_t>{3, 1});
  rec.equal("oracle c_seq", want.c_seq, Seq{1, 3, 4});
  rec.equal("oracle socz_seq", want.socz_seq, Seq{1, 3, 4});

  const auto got = analyze_group(make_catalog_group("elem_abelian:2:2"), 2, std::nullopt);
  rec.equal("block count", got.reports.size(), std::size_t{1});
  if (got.reports.size() != 1) return;
  const auto& b = got.reports[0];
  compare_block(rec, "V4", b, want);
  rec.equal("radical dim", got.radical_dim, std::size_t{3});
  rec.expect(b.profile.m == 3, "m != 3");
  rec.equal("tr C", b.cartan.trace, std::int64_t{4});
}

void s3_modular_oracle(CriterionResult& res) {
  Recorder rec(res);
  // b = (0 1) at index 1, c = (0 1 2) at index 2.
  const auto table = oracle::permutation_table({{1, 0, 2}, {1, 2, 0}});
  const oracle::GroupRing ring(table, 3);
  const oracle::Row b = ring.element(1), c = ring.element(2);
  rec.expect(zero(ring.sub(ring.mul(b, b), ring.one())), "b is not an involution");
  const oracle::Row e_plus = ring.combo({{2, 0}, {2, 1}});
  const oracle::Row e_minus = ring.combo({{2, 0}, {-2, 1}});
  rec.expect(ring.mul(e_plus, e_plus) == e_plus && ring.mul(e_minus, e_minus) == e_minus &&
                 zero(ring.mul(e_plus, e_minus)),
             "hand-built idempotents are not orthogonal idempotents");
  // J = FG (c - 1): the radical is generated by the normal Sylow 3-subgroup.
  std::vector<oracle::Row> rad;
  for (std::size_t g = 0; g < ring.dim(); ++g) rad.push_back(ring.mul(ring.element(g), ring.sub(c, ring.one())));
  const auto want = compute(ring, {e_plus, e_minus}, rad);
  rec.equal("oracle dim J^n", want.radical_power_dims, std::vector<std::size_t>{4, 2});
  rec.equal("oracle cartan", want.cartan, IntMatrix{{2, 1}, {1, 2}});
  rec.equal("oracle c_seq", want.c_seq, Seq{2, 2, 4});
  rec.equal("oracle socz_seq", want.socz_seq, Seq{2, 2, 3});
  rec.equal("oracle center", want.center_dim, std::size_t{3});

  const auto got = analyze_group(make_catalog_group("sym:3"), 3, std::nullopt);
  rec.equal("field degree", got.field_degree, 1u);
  rec.equal("block count", got.reports.size(), std::size_t{1});
  if (got.reports.size() != 1) return;
  const auto& blk = got.reports[0];
  compare_block(rec, "S3 p=3", blk, want);
  rec.expect(blk.profile.m == 2, "m != 2");
  rec.expect(blk.profile.k <= blk.cartan.trace, "k > tr C");
}

void s3_semisimple_oracle(CriterionResult& res) {
  Recorder rec(res);
  const auto table = oracle::permutation_table({{1, 0, 2}, {1, 2, 0}});
  // Maschke: 5 does not divide 6, so J = 0. Ordinary degrees 1, 1, 2.
  const std::vector<std::size_t> degrees{1, 1, 2};
  std::size_t sum_sq = 0;
  for (auto d : degrees) sum_sq += d * d;
  rec.expect(table.size() % 5 != 0, "5 divides |S3|");
  rec.equal("sum of squared degrees", sum_sq, table.size());
  rec.equal("class count", oracle::class_count(table), degrees.size());

  const auto got = analyze_group(make_catalog_group("sym:3"), 5, std::nullopt);
  rec.equal("field degree", got.field_degree, 2u);
  rec.equal("radical dim", got.radical_dim, std::size_t{0});
  std::vector<std::size_t> dims;
  for (const auto& b : got.reports) dims.push_back(b.block_dim);
  std::sort(dims.begin(), dims.end());
  rec.equal("block dims", dims, std::vector<std::size_t>{1, 1, 4});
  for (const auto& b : got.reports) {
    const std::string tag = "block " + std::to_string(b.block_index);
    rec.equal(tag + " lambda", b.profile.lambda, std::int64_t{1});
    rec.equal(tag + " cartan", b.cartan.matrix, IntMatrix{{1}});
    rec.equal(tag + " k", b.profile.k, std::int64_t{1});
    rec.equal(tag + " l", b.profile.l, std::int64_t{1});
    rec.expect(!b.profile.m.has_value(), tag + ": m should be undefined");
    rec.expect(b.checks.all_passed(), tag + " has failing checks");
  }
  const auto json = to_json(got);
  for (const auto& b : json["reports"]) rec.expect(b["m"] == "undefined (semisimple)", "m not reported as undefined");
}

struct SweepRun {
  std::string group;
  std::uint32_t p;
  Group g;
  AnalysisResult result;
};

// p^e > the largest supported field order
bool field_too_large(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) return true;
  }
  return false;
}

std::vector<SweepRun> run_sweep(Recorder& rec, std::vector<std::string>& skipped) {
  std::vector<SweepRun> runs;
  for (const auto& name : sweep_groups()) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      Group g = make_catalog_group(name);
      if (field_too_large(p, splitting_degree(g, p))) {
        skipped.push_back(name + " p=" + std::to_string(p));
        continue;
      }
      try {
        AnalysisResult r = analyze_group(g, p, std::nullopt);
        runs.push_back(SweepRun{name, p, std::move(g), std::move(r)});
      } catch (const std::exception& e) {
        rec.fail(name + " p=" + std::to_string(p) + ": exception " + e.what());
      }
    }
  }
  return runs;
}

std::string where(const SweepRun& run) { return run.group + " p=" + std::to_string(run.p); }

void battery(CriterionResult& res, const std::vector<SweepRun>& runs) {
  Recorder rec(res);
  std::size_t checks = 0;
  for (const auto& run : runs) {
    for (const auto& c : run.result.algebra_checks.checks) {
      ++checks;
      rec.expect(c.passed, where(run) + " algebra: " + c.name + " " + c.witness.dump());
    }
    for (const auto& b : run.result.reports) {
      for (const auto& c : b.checks.checks) {
        ++checks;
        rec.expect(c.passed, where(run) + " block " + std::to_string(b.block_index) + ": " + c.name + " " +
                                 c.witness.dump());
      }
      if (b.profile.lambda >= 2) {
        rec.expect(b.profile.m && *b.profile.m >= 2 && *b.profile.m <= b.profile.lambda, where(run) + ": m out of range");
      }
    }
  }
  res.notes.insert(res.notes.begin(), std::to_string(runs.size()) + " analyses, " + std::to_string(checks) + " checks");
}

void cross_paths(CriterionResult& res, const std::vector<SweepRun>& runs) {
  Recorder rec(res);
  for (const auto& run : runs) {
    const std::size_t n = run.g.order();
    if (n % run.p != 0) rec.expect(run.result.radical_dim == 0, where(run) + ": J != 0 although p does not divide |G|");
    std::size_t m = n;
    while (m % run.p == 0) m /= run.p;
    if (m == 1 && n > 1) rec.expect(run.result.radical_dim == n - 1, where(run) + ": p-group radical is not of codim 1");
    const auto* oracle_check = run.result.algebra_checks.find("radical_oracle");
    rec.expect(oracle_check && oracle_check->passed, where(run) + ": radical oracle check failed");
    for (const auto& b : run.result.reports) {
      const auto* c = b.checks.find("socle_paths_agree");
      rec.expect(c && c->passed, where(run) + " block " + std::to_string(b.block_index) + ": socle paths disagree");
    }
  }
}

void accounting(CriterionResult& res, const std::vector<SweepRun>& runs) {
  Recorder rec(res);
  for (const auto& run : runs) {
    std::size_t dims = 0;
    for (const auto& b : run.result.reports) {
      dims += b.block_dim;
      const auto* c = b.checks.find("basic_dimension_is_cartan_sum");
      rec.expect(c && c->passed, where(run) + ": dim eBe != sum c_ij");
      const auto* q = b.checks.find("semisimple_quotient_accounting");
      rec.expect(q && q->passed, where(run) + ": block dim B/J != sum n_i^2");
    }
    rec.equal(where(run) + " sum of block dims", dims, run.g.order());
    rec.equal(where(run) + " class count", run.result.class_count, oracle::class_count(run.g.table()));
    for (const char* name : {"center_dimension_is_class_count", "semisimple_quotient_accounting"}) {
      const auto* c = run.result.algebra_checks.find(name);
      rec.expect(c && c->passed, where(run) + ": " + name);
    }
  }
}

void determinism(CriterionResult& res) {
  Recorder rec(res);
  const std::vector<std::pair<std::string, std::uint32_t>> cases{{"sym:3", 3}, {"sym:3", 5}, {"dihedral:8", 2}};
  for (const auto& [name, p] : cases) {
    AnalysisRequest req;
    req.group = name;
    req.prime = p;
    const std::string a = to_json(analyze(req)).dump(2);
    const std::string b = to_json(analyze(req)).dump(2);
    rec.expect(a == b, name + " p=" + std::to_string(p) + ": JSON differs between runs");
  }
}

template <class F>
CriterionResult timed(int id, std::string title, double budget, F&& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.passed = true;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.notes.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget > 0 && r.seconds > budget) {
    r.passed = false;
    r.notes.push_back("over the runtime budget of " + std::to_string(budget) + " s");
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_criteria() {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "C_p over GF(p), p = 2, 3, 5, against F[x]/(x^p)", 1.0, cyclic_oracle));
  out.push_back(timed(2, "V4 over GF(2) against F[x,y]/(x^2, y^2)", 1.0, klein_oracle));
  out.push_back(timed(3, "S3 at p = 3 against hand-built idempotents", 1.0, s3_modular_oracle));
  out.push_back(timed(4, "S3 at p = 5 semisimple, Maschke and degrees 1, 1, 2", 1.0, s3_semisimple_oracle));

  std::vector<SweepRun> runs;
  CriterionResult sweep = timed(5, "check battery over every catalog group of order <= 48 at p = 2, 3, 5", 60.0, [&](CriterionResult& r) {
    Recorder rec(r);
    std::vector<std::string> skipped;
    runs = run_sweep(rec, skipped);
    battery(r, runs);
    if (!skipped.empty()) {
      std::string line = "skipped, splitting field over 2^20:";
      for (const auto& s : skipped) line += " " + s + ",";
      line.pop_back();
      r.notes.push_back(line);
    }
  });
  out.push_back(std::move(sweep));
  out.push_back(timed(6, "socle-center paths agree; radical oracles", 0, [&](CriterionResult& r) { cross_paths(r, runs); }));
  out.push_back(timed(7, "structural accounting", 0, [&](CriterionResult& r) { accounting(r, runs); }));
  out.push_back(timed(8, "byte-identical JSON across runs", 0, determinism));
  return out;
}

int run_all(std::ostream& out) {
  const auto results = run_criteria();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.title << "  (" << std::fixed
        << std::setprecision(2) << r.seconds << " s)\n";
    for (const auto& n : r.notes) out << "      " << n << "\n";
  }
  out << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return ok ? 0 : 2;
}

}  // namespace symalg::acceptance
