// symalg: invariants of symmetric algebras of finite groups.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "symalg/catalog.hpp"
#include "symalg/errors.hpp"
#include "symalg/report.hpp"

namespace {

constexpr int kInputError = 1;

int run_analyze(const symalg::AnalysisRequest& request) {
  const symalg::AnalysisResult result = symalg::analyze(request);
  const std::string text = symalg::render(result, request.format);
  if (request.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(request.out, std::ios::binary);
    if (!out) throw symalg::InputError(request.out + ": cannot open for writing");
    out << text;
  }
  return symalg::exit_code(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Socle and center invariants of blocks of finite group algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", symalg::kToolVersion);

  symalg::AnalysisRequest request;
  std::string catalog_name, cayley_file, perms_file, format = "json";
  unsigned field_degree = 0;

  auto* analyze = app.add_subcommand("analyze", "Analyze the group algebra FG over a splitting field of characteristic p");
  auto* src_group = analyze->add_option("--group", catalog_name, "Catalog group name, e.g. sym:3");
  auto* src_cayley = analyze->add_option("--cayley", cayley_file, "Cayley table JSON file");
  auto* src_perms = analyze->add_option("--perms", perms_file, "Permutation generators JSON file");
  src_group->excludes(src_cayley, src_perms);
  src_cayley->excludes(src_perms);
  analyze->add_option("--prime", request.prime, "Characteristic p")->required();
  auto* degree_opt = analyze->add_option("--field-degree", field_degree, "Override the field degree e (field GF(p^e))")
                         ->check(CLI::PositiveNumber);
  analyze->add_option("--seed", request.seed, "Seed for randomized splitting and checks")->capture_default_str();
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  analyze->add_option("--out", request.out, "Output path (default stdout)");

  app.add_subcommand("catalog", "List the built-in groups");
  app.add_subcommand("selftest", "Run the acceptance suite over the catalog at p = 2, 3, 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (app.got_subcommand("catalog")) {
      for (const auto& entry : symalg::catalog()) std::cout << entry.pattern << "\t" << entry.description << "\n";
      return 0;
    }
    if (app.got_subcommand("selftest")) return symalg::acceptance::run_all(std::cout);

    const int sources = int(src_group->count() > 0) + int(src_cayley->count() > 0) + int(src_perms->count() > 0);
    if (sources != 1) {
      std::cerr << "error: give exactly one of --group, --cayley, --perms\n";
      return kInputError;
    }
    if (src_group->count()) {
      request.source = symalg::GroupSource::catalog;
      request.group = catalog_name;
    } else if (src_cayley->count()) {
      request.source = symalg::GroupSource::cayley;
      request.group = cayley_file;
    } else {
      request.source = symalg::GroupSource::perms;
      request.group = perms_file;
    }
    if (degree_opt->count()) request.field_degree = field_degree;
    request.format = format == "md" ? symalg::OutputFormat::markdown : symalg::OutputFormat::json;
    return run_analyze(request);
  } catch (const symalg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
