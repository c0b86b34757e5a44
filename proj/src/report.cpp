#include "symalg/report.hpp"

#include <fstream>
#include <sstream>

#include "symalg/catalog.hpp"
#include "symalg/errors.hpp"
#include "symalg/wedderburn.hpp"

namespace symalg {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_document(const std::string& text, const std::string& origin) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw InputError(origin + ": top-level value must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

std::size_t index_at(const json& v, const std::string& origin, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InputError(origin + ": " + where + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::vector<std::size_t>> index_rows(const json& doc, const char* key, const std::string& origin) {
  if (!doc.contains(key) || !doc[key].is_array()) throw InputError(origin + ": missing array \"" + key + "\"");
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    const json& row = doc[key][i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw InputError(origin + ": " + where + " must be an array");
    std::vector<std::size_t> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(index_at(row[j], origin, where + "[" + std::to_string(j) + "]"));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string name_of(const json& doc, const std::string& origin) {
  if (!doc.contains("name")) return origin;
  if (!doc["name"].is_string()) throw InputError(origin + ": \"name\" must be a string");
  return doc["name"].get<std::string>();
}

template <class F>
Group with_origin(const std::string& origin, F&& build) {
  try {
    return build();
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

}  // namespace

Group parse_cayley_json(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  auto table = index_rows(doc, "table", origin);
  if (doc.contains("order") && index_at(doc["order"], origin, "order") != table.size()) {
    throw InputError(origin + ": \"order\" is " + doc["order"].dump() + " but the table has " +
                     std::to_string(table.size()) + " rows");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      if (table[i][j] >= table.size()) {
        throw InputError(origin + ": table[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                         std::to_string(table[i][j]) + " is not below the order " + std::to_string(table.size()));
      }
    }
  }
  if (table.size() > Group::kDefaultOrderCap) {
    throw InputError(origin + ": order exceeds " + std::to_string(Group::kDefaultOrderCap));
  }
  const std::string name = name_of(doc, origin);
  return with_origin(origin, [&] { return group_from_cayley(std::move(table), name); });
}

Group parse_perms_json(const std::string& text, const std::string& origin) {
  const json doc = parse_document(text, origin);
  if (!doc.contains("degree")) throw InputError(origin + ": missing \"degree\"");
  const std::size_t degree = index_at(doc["degree"], origin, "degree");
  if (degree == 0) throw InputError(origin + ": \"degree\" must be positive");
  const auto gens = index_rows(doc, "generators", origin);
  const std::string name = name_of(doc, origin);
  return with_origin(origin, [&] { return group_from_permutations(degree, gens, name); });
}

Group load_group(const AnalysisRequest& request) {
  switch (request.source) {
    case GroupSource::catalog:
      return make_catalog_group(request.group);
    case GroupSource::cayley:
      return parse_cayley_json(read_file(request.group), request.group);
    case GroupSource::perms:
      return parse_perms_json(read_file(request.group), request.group);
  }
  throw InputError("unknown group source");
}

bool AnalysisResult::all_passed() const {
  if (!algebra_checks.all_passed()) return false;
  for (const auto& r : reports) {
    if (!r.checks.all_passed()) return false;
  }
  return true;
}

namespace {

bool is_power_of(std::size_t n, std::uint32_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

AnalysisResult run_pipeline(const Group& g, std::uint32_t p, unsigned e, std::uint64_t seed) {
  auto field = std::make_shared<const Field>(p, e);
  const GroupAlgebra ga = group_algebra(g, field);
  const Algebra& a = ga.algebra;
  const Field& f = *field;

  AnalysisResult result;
  result.group_name = g.name();
  result.group_order = g.order();
  result.field_degree = e;
  result.field = f.name();
  result.class_count = conjugacy_classes(g).count();

  const Subspace rad = radical_subspace(a);
  result.radical_dim = rad.dim();
  const BlockDecomposition bd = block_decomposition(a, ga.form, seed);

  BatteryOptions options;
  options.seed = seed;
  std::size_t dim_sum = 0;
  std::size_t simple_sum = 0;
  Subspace block_radicals = Subspace::zero(a.dim());
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const CornerAlgebra& block = bd.blocks[i];
    BlockAnalysis ba = analyze_block(block, options);
    dim_sum += ba.dim;
    for (auto n : ba.dec.simple_dims) simple_sum += n * n;
    block_radicals = subspace_sum(f, block_radicals, block.transport_out(ba.rad.radical));

    BlockReport br;
    br.group = g.name();
    br.p = p;
    br.field_degree = e;
    br.block_index = i;
    br.block_dim = ba.dim;
    br.cartan = std::move(ba.cartan);
    br.profile = std::move(ba.profile);
    br.checks = std::move(ba.checks);
    result.reports.push_back(std::move(br));
  }

  CheckReport& checks = result.algebra_checks;
  checks.add("block_dimensions_sum", dim_sum == g.order(),
             ordered_json{{"sum_block_dims", dim_sum}, {"group_order", g.order()}});
  {
    const Vector& one = a.unit();
    Vector total = a.zero();
    bool ok = true;
    for (std::size_t i = 0; i < bd.central_idempotents.size(); ++i) {
      const Vector& c = bd.central_idempotents[i];
      total = add(f, total, c);
      ok = ok && is_idempotent(a, c) && center(a).contains(f, c);
      for (std::size_t j = i + 1; j < bd.central_idempotents.size(); ++j) {
        ok = ok && is_zero(a.multiply(c, bd.central_idempotents[j]));
      }
    }
    checks.add("central_idempotents_valid", ok && total == one,
               ordered_json{{"count", bd.central_idempotents.size()}, {"sum_is_one", total == one}});
  }
  const std::size_t center_dim = center(a).dim();
  checks.add("center_dimension_is_class_count", center_dim == result.class_count,
             ordered_json{{"dim_center", center_dim}, {"class_count", result.class_count}});
  if (g.order() % p != 0) {
    checks.add("radical_oracle", rad.is_zero(),
               ordered_json{{"case", "p does not divide |G|, expect J = 0"}, {"dim_J", rad.dim()}});
  } else if (is_power_of(g.order(), p)) {
    checks.add("radical_oracle", rad == augmentation_ideal(g, f),
               ordered_json{{"case", "p-group, expect J = augmentation ideal"}, {"dim_J", rad.dim()}});
  } else {
    checks.add("radical_oracle", true, ordered_json{{"case", "no closed form"}, {"dim_J", rad.dim()}});
  }
  checks.add("block_radicals_consistent", block_radicals == rad,
             ordered_json{{"dim_sum_of_block_radicals", block_radicals.dim()}, {"dim_J", rad.dim()}});
  checks.add("semisimple_quotient_accounting", g.order() - rad.dim() == simple_sum,
             ordered_json{{"dim_A_mod_J", g.order() - rad.dim()}, {"sum_n_i_squared", simple_sum}});
  check_subspace_calculus(a, ga.form, options, checks);
  return result;
}

}  // namespace

AnalysisResult analyze_group(const Group& g, std::uint32_t p, std::optional<unsigned> field_degree,
                             std::uint64_t seed) {
  if (!is_prime(p)) throw InputError("prime " + std::to_string(p) + " is not prime");
  if (field_degree && *field_degree == 0) throw InputError("field degree must be positive");
  const unsigned computed = splitting_degree(g, p);
  unsigned e = field_degree.value_or(computed);
  while (true) {
    try {
      AnalysisResult result = run_pipeline(g, p, e, seed);
      result.splitting_degree = computed;
      return result;
    } catch (const SplitnessError& err) {
      if (field_degree) {
        throw InputError("GF(" + std::to_string(p) + "^" + std::to_string(e) + ") does not split the group algebra: " +
                         err.what());
      }
      e *= 2;
    }
  }
}

AnalysisResult analyze(const AnalysisRequest& request) {
  const Group g = load_group(request);
  AnalysisResult result = analyze_group(g, request.prime, request.field_degree, request.seed);
  result.request = request;
  return result;
}

namespace {

const char* source_name(GroupSource s) {
  switch (s) {
    case GroupSource::catalog:
      return "catalog";
    case GroupSource::cayley:
      return "cayley";
    case GroupSource::perms:
      return "perms";
  }
  return "";
}

ordered_json checks_json(const CheckReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& c : report.checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return out;
}

}  // namespace

ordered_json to_json(const AnalysisResult& r) {
  ordered_json out;
  out["tool_version"] = kToolVersion;
  out["request"] = {
      {"source", source_name(r.request.source)},
      {"group", r.request.group},
      {"prime", r.request.prime},
      {"field_degree", r.request.field_degree ? ordered_json(*r.request.field_degree) : ordered_json(nullptr)},
      {"seed", r.request.seed},
  };
  out["algebra"] = {
      {"group", r.group_name},
      {"order", r.group_order},
      {"p", r.request.prime},
      {"field", r.field},
      {"field_degree", r.field_degree},
      {"splitting_degree", r.splitting_degree},
      {"class_count", r.class_count},
      {"radical_dim", r.radical_dim},
      {"block_count", r.reports.size()},
      {"checks", checks_json(r.algebra_checks)},
  };
  ordered_json reports = ordered_json::array();
  for (const auto& b : r.reports) {
    reports.push_back({
        {"group", b.group},
        {"p", b.p},
        {"field_degree", b.field_degree},
        {"block_index", b.block_index},
        {"block_dim", b.block_dim},
        {"k", b.profile.k},
        {"l", b.profile.l},
        {"lambda", b.profile.lambda},
        {"cartan", b.cartan.matrix},
        {"c_seq", b.profile.c_seq},
        {"socz_seq", b.profile.socz_seq},
        {"ext_diag", b.profile.ext_diag},
        {"m", b.profile.m ? ordered_json(*b.profile.m) : ordered_json("undefined (semisimple)")},
        {"checks", checks_json(b.checks)},
    });
  }
  out["reports"] = std::move(reports);
  return out;
}

namespace {

std::string seq(const ordered_json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].dump();
  return s + ")";
}

void checks_md(std::ostringstream& os, const ordered_json& checks) {
  os << "| check | result | witness |\n|---|---|---|\n";
  for (const auto& c : checks) {
    os << "| " << c["name"].get<std::string>() << " | " << (c["passed"].get<bool>() ? "pass" : "FAIL") << " | `"
       << c["witness"].dump() << "` |\n";
  }
}

}  // namespace

std::string to_markdown(const ordered_json& report) {
  std::ostringstream os;
  const auto& alg = report["algebra"];
  os << "# " << alg["group"].get<std::string>() << " over " << alg["field"].get<std::string>() << "\n\n";
  os << "tool version " << report["tool_version"].get<std::string>() << ", seed " << report["request"]["seed"].dump()
     << "\n\n";
  os << "| order | p | field degree | splitting degree | classes | dim J | blocks |\n"
     << "|---|---|---|---|---|---|---|\n";
  os << "| " << alg["order"].dump() << " | " << alg["p"].dump() << " | " << alg["field_degree"].dump() << " | "
     << alg["splitting_degree"].dump() << " | " << alg["class_count"].dump() << " | " << alg["radical_dim"].dump()
     << " | " << alg["block_count"].dump() << " |\n\n";
  os << "## Group algebra checks\n\n";
  checks_md(os, alg["checks"]);
  for (const auto& b : report["reports"]) {
    os << "\n## Block " << b["block_index"].dump() << "\n\n";
    os << "| dim | k | l | lambda | m | c_seq | socz_seq | ext_diag |\n|---|---|---|---|---|---|---|---|\n";
    os << "| " << b["block_dim"].dump() << " | " << b["k"].dump() << " | " << b["l"].dump() << " | "
       << b["lambda"].dump() << " | " << (b["m"].is_string() ? b["m"].get<std::string>() : b["m"].dump()) << " | "
       << seq(b["c_seq"]) << " | " << seq(b["socz_seq"]) << " | " << seq(b["ext_diag"]) << " |\n\n";
    os << "Cartan matrix:\n\n```\n";
    for (const auto& row : b["cartan"]) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].dump();
      os << "\n";
    }
    os << "```\n\n";
    checks_md(os, b["checks"]);
  }
  return os.str();
}

std::string render(const AnalysisResult& result, OutputFormat format) {
  const ordered_json j = to_json(result);
  if (format == OutputFormat::markdown) return to_markdown(j);
  return j.dump(2) + "\n";
}

int exit_code(const AnalysisResult& result) { return result.all_passed() ? 0 : 2; }

}  // namespace symalg
