#include "symalg/invariants.hpp"

#include <algorithm>
#include <random>

#include "symalg/errors.hpp"

namespace symalg {

using nlohmann::ordered_json;

namespace {

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

// e J^n e for an idempotent e.
Subspace corner_of(const Algebra& a, std::span<const FieldElement> e, const Subspace& u) {
  return image(a.field(), sandwich_matrix(a, e, e), u);
}

}  // namespace

CartanData cartan_matrix(const Algebra& b, const IdempotentDecomposition& dec) {
  CartanData out;
  out.l = dec.class_count();
  out.matrix.assign(out.l, std::vector<std::int64_t>(out.l, 0));
  for (std::size_t i = 0; i < out.l; ++i) {
    for (std::size_t j = 0; j < out.l; ++j) {
      out.matrix[i][j] = as_int(corner(b, dec.representative(i), dec.representative(j)).dim());
    }
    out.trace += out.matrix[i][i];
  }
  return out;
}

std::int64_t c_value(const Algebra& b, const IdempotentDecomposition& dec, const RadicalData& rad, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < dec.class_count(); ++i) {
    const Vector& e = dec.representative(i);
    total += as_int(corner(b, e, e).dim()) - as_int(corner_of(b, e, rad.power(n)).dim());
  }
  return total;
}

Sequence c_sequence(const Algebra& b, const IdempotentDecomposition& dec, const RadicalData& rad) {
  Sequence out;
  for (std::size_t n = 1; n <= rad.loewy_length; ++n) out.push_back(c_value(b, dec, rad, n));
  return out;
}

SocleCenterPaths socle_center_paths(const Algebra& b, const SymmetrizingForm& form, const RadicalData& rad,
                                    std::size_t count) {
  const Field& f = b.field();
  const Subspace z = center(b);
  SocleCenterPaths out;
  for (std::size_t n = 1; n <= count; ++n) {
    const Subspace& jn = rad.power(n);
    out.via_annihilator.push_back(as_int(subspace_intersect(f, annihilator(b, jn), z).dim()));
    out.via_perp.push_back(as_int(subspace_intersect(f, perp(b, form, jn), z).dim()));
  }
  return out;
}

Sequence socle_center_dims(const Algebra& b, const SymmetrizingForm& form, const RadicalData& rad) {
  auto paths = socle_center_paths(b, form, rad, rad.loewy_length);
  if (paths.via_annihilator != paths.via_perp) {
    throw ValidationError("socle_center_dims: annihilator and perp routes disagree");
  }
  return paths.via_annihilator;
}

BasicContext make_basic_context(const CornerAlgebra& basic, const IdempotentDecomposition& dec) {
  BasicContext ctx;
  ctx.basic = &basic;
  for (std::size_t i = 0; i < dec.class_count(); ++i) ctx.reps.push_back(basic.to_corner(dec.representative(i)));
  ctx.rad = radical(basic.algebra());
  return ctx;
}

Subspace b_subspace(const BasicContext& ctx, std::size_t n, std::optional<std::int64_t> expected_c) {
  const Algebra& a = ctx.algebra();
  const Field& f = a.field();
  Subspace acc = Subspace::zero(a.dim());
  for (std::size_t i = 0; i < ctx.reps.size(); ++i) {
    acc = subspace_sum(f, acc, corner_of(a, ctx.reps[i], ctx.rad.power(n)));
    for (std::size_t j = 0; j < ctx.reps.size(); ++j) {
      if (i != j) acc = subspace_sum(f, acc, corner(a, ctx.reps[i], ctx.reps[j]));
    }
  }
  if (expected_c) {
    const auto perp_dim = as_int(perp(a, ctx.basic->form(), acc).dim());
    if (perp_dim != *expected_c) {
      throw ValidationError("b_subspace: dim B(n)^perp = " + std::to_string(perp_dim) + " but c(B, n) = " +
                            std::to_string(*expected_c));
    }
  }
  return acc;
}

bool commutator_criterion(const BasicContext& ctx, std::size_t n) {
  const Algebra& a = ctx.algebra();
  const Field& f = a.field();
  const Subspace& jn = ctx.rad.power(n);
  std::vector<Subspace> diag;
  for (const auto& e : ctx.reps) diag.push_back(corner_of(a, e, jn));
  for (std::size_t i = 0; i < ctx.reps.size(); ++i) {
    for (std::size_t j = i; j < ctx.reps.size(); ++j) {
      const Subspace comm = commutator_subspace(a, corner(a, ctx.reps[i], ctx.reps[j]),
                                                corner(a, ctx.reps[j], ctx.reps[i]));
      if (!is_subspace(f, comm, subspace_sum(f, diag[i], diag[j]))) return false;
    }
  }
  return true;
}

Sequence ext_diagonal(const BasicContext& ctx) {
  const Algebra& a = ctx.algebra();
  Sequence out;
  for (const auto& e : ctx.reps) {
    out.push_back(as_int(corner_of(a, e, ctx.rad.power(1)).dim()) - as_int(corner_of(a, e, ctx.rad.power(2)).dim()));
  }
  return out;
}

std::optional<std::int64_t> threshold_m(const InvariantProfile& profile) {
  if (profile.lambda < 2) return std::nullopt;
  std::int64_t m = 0;
  while (m < profile.lambda && profile.socz_seq[static_cast<std::size_t>(m)] ==
                                   profile.c_seq[static_cast<std::size_t>(m)]) {
    ++m;
  }
  return m;
}

bool CheckReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void CheckReport::add(std::string name, bool passed, ordered_json witness) {
  checks.push_back(CheckResult{std::move(name), passed, std::move(witness)});
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng,
                         const Subspace* shared = nullptr, std::size_t shared_count = 0) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.order() - 1);
  std::vector<Vector> vecs;
  if (shared != nullptr) {
    for (std::size_t i = 0; i < std::min(shared_count, shared->dim()); ++i) vecs.push_back(shared->basis_vector(i));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(n);
    for (auto& x : v) x = FieldElement{coeff(rng)};
    vecs.push_back(std::move(v));
  }
  return Subspace(f, n, vecs);
}

// Records a pass, or the first failing trial as witness.
class TrialCheck {
 public:
  explicit TrialCheck(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, std::size_t trial, const char* identity, ordered_json dims) {
    ++evaluated_;
    if (ok || failed_) return;
    failed_ = true;
    witness_ = ordered_json{{"trial", trial}, {"identity", identity}, {"dims", std::move(dims)}};
  }
  void record(CheckReport& report) {
    if (!failed_) witness_ = ordered_json{{"evaluations", evaluated_}};
    report.add(name_, !failed_, std::move(witness_));
  }

 private:
  std::string name_;
  bool failed_ = false;
  std::size_t evaluated_ = 0;
  ordered_json witness_;
};

}  // namespace

void check_subspace_calculus(const Algebra& a, const SymmetrizingForm& form, const BatteryOptions& options,
                             CheckReport& report) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> any_dim(0, n);
  std::uniform_int_distribution<std::size_t> small_dim(0, std::min<std::size_t>(n, 3));

  TrialCheck perp_check("perp_calculus");
  TrialCheck comm_check("commutator_additivity");
  for (std::size_t t = 0; t < options.random_trials; ++t) {
    const Subspace u = random_subspace(f, n, any_dim(rng), rng);
    const std::size_t shared = std::uniform_int_distribution<std::size_t>(0, u.dim())(rng);
    const Subspace v = random_subspace(f, n, any_dim(rng) / 2, rng, &u, shared);
    const Subspace up = perp(a, form, u), vp = perp(a, form, v);
    const Subspace sum = subspace_sum(f, u, v), meet = subspace_intersect(f, u, v);
    const ordered_json dims{{"U", u.dim()}, {"V", v.dim()}, {"U+V", sum.dim()}, {"U∩V", meet.dim()}};
    perp_check.expect(perp(a, form, up) == u, t, "(U^perp)^perp = U", dims);
    perp_check.expect(perp(a, form, sum) == subspace_intersect(f, up, vp), t, "(U+V)^perp = U^perp ∩ V^perp", dims);
    perp_check.expect(perp(a, form, meet) == subspace_sum(f, up, vp), t, "(U∩V)^perp = U^perp + V^perp", dims);
    perp_check.expect(is_subspace(f, up, perp(a, form, meet)), t, "W ⊆ U implies U^perp ⊆ W^perp", dims);
    perp_check.expect(up.dim() + u.dim() == n, t, "dim U^perp = dim A - dim U", dims);

    const Subspace x = random_subspace(f, n, small_dim(rng), rng);
    const Subspace y = random_subspace(f, n, small_dim(rng), rng);
    const Subspace w = random_subspace(f, n, small_dim(rng), rng);
    const ordered_json cdims{{"U", x.dim()}, {"V", y.dim()}, {"W", w.dim()}};
    comm_check.expect(commutator_subspace(a, subspace_sum(f, x, y), w) ==
                          subspace_sum(f, commutator_subspace(a, x, w), commutator_subspace(a, y, w)),
                      t, "[U+V, W] = [U, W] + [V, W]", cdims);
    comm_check.expect(commutator_subspace(a, x, subspace_sum(f, y, w)) ==
                          subspace_sum(f, commutator_subspace(a, x, y), commutator_subspace(a, x, w)),
                      t, "[U, V+W] = [U, V] + [U, W]", cdims);
  }
  perp_check.record(report);
  comm_check.record(report);

  // Ann(I) = I^perp for ideals generated by random elements.
  TrialCheck ideal_check("annihilator_equals_perp_random_ideals");
  const std::size_t ideal_trials = std::max<std::size_t>(1, options.random_trials / 10);
  for (std::size_t t = 0; t < ideal_trials; ++t) {
    const Subspace gen = random_subspace(f, n, 1, rng);
    const Subspace ideal = ideal_generated(a, gen);
    ideal_check.expect(annihilator(a, ideal) == perp(a, form, ideal), t, "Ann(I) = I^perp",
                       ordered_json{{"I", ideal.dim()}});
  }
  ideal_check.record(report);

  const Subspace comm = commutator_subspace(a, Subspace::full(n), Subspace::full(n));
  const Subspace z = center(a);
  report.add("commutator_perp_is_center", perp(a, form, comm) == z,
             ordered_json{{"dim_commutator", comm.dim()}, {"dim_perp", perp(a, form, comm).dim()},
                          {"dim_center", z.dim()}});
}

namespace {

template <class T>
ordered_json seq_json(const std::vector<T>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(x);
  return j;
}

void verify_battery(const CornerAlgebra& block, BlockAnalysis& out, const BasicContext& ctx,
                    const SocleCenterPaths& paths, const BatteryOptions& options) {
  const Algebra& b = block.algebra();
  const SymmetrizingForm& form = block.form();
  const Field& f = b.field();
  const CornerAlgebra& basic = *out.basic;
  const Algebra& ebe = basic.algebra();
  const InvariantProfile& pr = out.profile;
  const std::size_t lambda = out.rad.loewy_length;
  const std::size_t l = out.dec.class_count();
  CheckReport& rep = out.checks;

  rep.add("symmetrizing_form_valid", true,
          ordered_json{{"note", "restricted form validated at construction"}, {"dim", b.dim()}});

  {
    // Idempotent family: orthogonal, complete, primitive modulo J.
    const QuotientAlgebra q(b, out.rad.radical);
    bool ok = true;
    ordered_json w = ordered_json::object();
    Vector total = b.zero();
    for (std::size_t i = 0; i < out.dec.idempotents.size(); ++i) {
      const Vector& e = out.dec.idempotents[i];
      total = add(f, total, e);
      if (!is_idempotent(b, e)) {
        ok = false;
        w["not_idempotent"] = i;
      }
      const Vector ebar = q.project(e);
      const auto dim_corner = corner(q.algebra(), ebar, ebar).dim();
      if (dim_corner != 1) {
        ok = false;
        w["not_primitive"] = i;
        w["corner_dim"] = dim_corner;
      }
      for (std::size_t j = 0; j < out.dec.idempotents.size(); ++j) {
        if (i != j && !is_zero(b.multiply(e, out.dec.idempotents[j]))) {
          ok = false;
          w["not_orthogonal"] = {i, j};
        }
      }
    }
    if (total != b.unit()) {
      ok = false;
      w["sum_is_not_one"] = true;
    }
    w["count"] = out.dec.idempotents.size();
    rep.add("idempotent_family", ok, std::move(w));
  }

  {
    std::int64_t sum_sq = 0;
    for (auto n : out.dec.simple_dims) sum_sq += as_int(n * n);
    const auto quotient_dim = as_int(b.dim() - out.rad.radical.dim());
    rep.add("semisimple_quotient_accounting", quotient_dim == sum_sq,
            ordered_json{{"dim_B_mod_J", quotient_dim}, {"sum_n_i_squared", sum_sq},
                         {"simple_dims", seq_json(out.dec.simple_dims)}});
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < l; ++i) {
      if (out.cartan.matrix[i][i] < 1) ok = false;
      for (std::size_t j = 0; j < l; ++j) {
        if (out.cartan.matrix[i][j] < 0 || out.cartan.matrix[i][j] != out.cartan.matrix[j][i]) ok = false;
      }
    }
    rep.add("cartan_shape", ok, ordered_json{{"cartan", out.cartan.matrix}});
  }

  check_subspace_calculus(b, form, options, rep);
  {
    CheckReport basic_rep;
    BatteryOptions basic_opts = options;
    basic_opts.random_trials = 0;
    check_subspace_calculus(ebe, basic.form(), basic_opts, basic_rep);
    const CheckResult* c = basic_rep.find("commutator_perp_is_center");
    rep.add("commutator_perp_is_center_basic", c->passed, c->witness);
  }

  {
    bool ok = true;
    ordered_json w = ordered_json::array();
    for (std::size_t n = 1; n <= lambda; ++n) {
      const Subspace& jn = out.rad.power(n);
      const bool eq = annihilator(b, jn) == perp(b, form, jn);
      ok = ok && eq;
      w.push_back({{"n", n}, {"dim_J^n", jn.dim()}, {"equal", eq}});
    }
    rep.add("annihilator_equals_perp_radical_powers", ok, ordered_json{{"per_n", std::move(w)}});
  }

  rep.add("socle_paths_agree", paths.via_annihilator == paths.via_perp,
          ordered_json{{"via_annihilator", paths.via_annihilator}, {"via_perp", paths.via_perp}});

  {
    const Subspace transported = basic.transport_in(out.rad.radical);
    rep.add("basic_radical_is_corner_of_radical", transported == ctx.rad.radical,
            ordered_json{{"dim_eJe", transported.dim()}, {"dim_J_eBe", ctx.rad.radical.dim()}});
  }

  {
    // dim Ann_B(J^n) ∩ Z(B) = dim Ann_eBe(eJ^ne) ∩ Z(eBe)
    const Subspace zb = center(b), ze = center(ebe);
    bool ok = true;
    ordered_json w = ordered_json::array();
    for (std::size_t n = 1; n <= lambda; ++n) {
      const Subspace& jn = out.rad.power(n);
      const auto lhs = subspace_intersect(f, annihilator(b, jn), zb).dim();
      const auto rhs = subspace_intersect(f, annihilator(ebe, basic.transport_in(jn)), ze).dim();
      ok = ok && lhs == rhs;
      w.push_back({{"n", n}, {"B", lhs}, {"eBe", rhs}});
    }
    rep.add("corner_transfer_socle_center", ok, ordered_json{{"per_n", std::move(w)}});
  }

  {
    std::int64_t sum = 0;
    for (const auto& row : out.cartan.matrix) {
      for (auto c : row) sum += c;
    }
    rep.add("basic_dimension_is_cartan_sum", as_int(ebe.dim()) == sum,
            ordered_json{{"dim_eBe", ebe.dim()}, {"sum_c_ij", sum}});
  }

  {
    bool ok = true;
    ordered_json w = ordered_json::array();
    for (std::size_t n = 1; n <= lambda; ++n) {
      const Subspace bn = b_subspace(ctx, n);
      const auto perp_dim = as_int(perp(ebe, basic.form(), bn).dim());
      const auto c = pr.c_seq[n - 1];
      ok = ok && perp_dim == c;
      w.push_back({{"n", n}, {"dim_B(n)", bn.dim()}, {"dim_perp", perp_dim}, {"c", c}});
    }
    rep.add("b_subspace_perp_is_c", ok, ordered_json{{"per_n", std::move(w)}});
  }

  const Subspace full = Subspace::full(ebe.dim());
  const Subspace comm = commutator_subspace(ebe, full, full);
  {
    bool ok = true;
    ordered_json w = ordered_json::object();
    Subspace rhs = Subspace::zero(ebe.dim());
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) {
        const Subspace cij = corner(ebe, ctx.reps[i], ctx.reps[j]);
        if (i != j) {
          if (!is_subspace(f, cij, comm)) {
            ok = false;
            w["offending_pair"] = {i, j};
          }
          rhs = subspace_sum(f, rhs, cij);
        }
        rhs = subspace_sum(f, rhs, commutator_subspace(ebe, cij, corner(ebe, ctx.reps[j], ctx.reps[i])));
      }
    }
    w["dim_commutator"] = comm.dim();
    rep.add("offdiagonal_corners_in_commutator", ok, w);
    rep.add("commutator_decomposition", is_subspace(f, comm, rhs),
            ordered_json{{"dim_commutator", comm.dim()}, {"dim_bound", rhs.dim()}});
  }

  {
    bool ok = true;
    ordered_json w = ordered_json::array();
    for (std::size_t n = 0; n < lambda; ++n) {
      const bool le = pr.socz_seq[n] <= pr.c_seq[n];
      ok = ok && le;
      if (!le) w.push_back({{"n", n + 1}, {"socz", pr.socz_seq[n]}, {"c", pr.c_seq[n]}});
    }
    rep.add("socle_center_bound", ok, ok ? ordered_json{{"n_checked", lambda}} : ordered_json{{"per_n", w}});
  }

  {
    if (!pr.m) {
      rep.add("equality_prefix_threshold", true, ordered_json{{"m", "undefined (semisimple)"}, {"lambda", lambda}});
    } else {
      const auto m = *pr.m;
      bool ok = m >= 2;
      for (std::int64_t n = m; n < pr.lambda; ++n) {
        if (pr.socz_seq[static_cast<std::size_t>(n)] >= pr.c_seq[static_cast<std::size_t>(n)]) ok = false;
      }
      rep.add("equality_prefix_threshold", ok, ordered_json{{"m", m}, {"lambda", lambda}});
    }
  }

  {
    bool ok = true;
    ordered_json w = ordered_json::array();
    for (std::size_t n = 1; n <= lambda; ++n) {
      const bool lhs = pr.socz_seq[n - 1] == pr.c_seq[n - 1];
      const bool rhs = commutator_criterion(ctx, n);
      ok = ok && lhs == rhs;
      w.push_back({{"n", n}, {"equality", lhs}, {"commutator_criterion", rhs}});
    }
    rep.add("commutator_criterion_equivalence", ok, ordered_json{{"per_n", std::move(w)}});
  }

  {
    std::int64_t ext = 0;
    for (auto x : pr.ext_diag) ext += x;
    const auto socz2 = paths.via_annihilator.at(1);
    rep.add("second_socle_identity", socz2 == pr.l + ext,
            ordered_json{{"socz_2", socz2}, {"l", pr.l}, {"sum_ext_diag", ext}});
  }

  rep.add("socle_center_equals_l", pr.socz_seq.front() == pr.l,
          ordered_json{{"socz_1", pr.socz_seq.front()}, {"l", pr.l}});

  rep.add("center_bounded_by_cartan_trace",
          pr.k <= out.cartan.trace && pr.k == pr.socz_seq.back() && pr.k == as_int(center(b).dim()),
          ordered_json{{"k", pr.k}, {"trace", out.cartan.trace}, {"socz_lambda", pr.socz_seq.back()}});

  {
    bool ok = pr.c_seq.front() == pr.l && pr.c_seq.back() == out.cartan.trace && pr.socz_seq.back() == pr.k;
    for (std::size_t n = 1; n < pr.c_seq.size(); ++n) {
      ok = ok && pr.c_seq[n - 1] <= pr.c_seq[n] && pr.socz_seq[n - 1] <= pr.socz_seq[n];
    }
    rep.add("sequence_shape", ok, ordered_json{{"c_seq", pr.c_seq}, {"socz_seq", pr.socz_seq}});
  }

  if (b.is_commutative()) {
    const bool ok = !pr.m || *pr.m == pr.lambda;
    rep.add("commutative_block_threshold", ok,
            ordered_json{{"m", pr.m ? ordered_json(*pr.m) : ordered_json("undefined")}, {"lambda", lambda}});
  } else {
    rep.add("commutative_block_threshold", true, ordered_json{{"note", "block is not commutative"}});
  }
}

}  // namespace

BlockAnalysis analyze_block(const CornerAlgebra& block, const BatteryOptions& options) {
  const Algebra& b = block.algebra();
  BlockAnalysis out;
  out.dim = b.dim();
  out.rad = radical(b);
  out.dec = primitive_decomposition(b, out.rad, options.seed);
  out.basic.emplace(basic_algebra(b, block.form(), out.dec));
  const BasicContext ctx = make_basic_context(*out.basic, out.dec);
  out.cartan = cartan_matrix(b, out.dec);

  InvariantProfile& pr = out.profile;
  const std::size_t lambda = out.rad.loewy_length;
  pr.k = as_int(center(b).dim());
  pr.l = as_int(out.dec.class_count());
  pr.lambda = as_int(lambda);
  pr.c_seq = c_sequence(b, out.dec, out.rad);
  // The second-socle identity needs n = 2 even when lambda = 1.
  const SocleCenterPaths paths = socle_center_paths(b, block.form(), out.rad, std::max<std::size_t>(lambda, 2));
  pr.socz_seq.assign(paths.via_annihilator.begin(), paths.via_annihilator.begin() + static_cast<std::ptrdiff_t>(lambda));
  pr.ext_diag = ext_diagonal(ctx);
  pr.m = threshold_m(pr);

  verify_battery(block, out, ctx, paths, options);
  return out;
}

}  // namespace symalg
