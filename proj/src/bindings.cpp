#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symalg/catalog.hpp"
#include "symalg/errors.hpp"
#include "symalg/field.hpp"
#include "symalg/report.hpp"

namespace py = pybind11;

namespace {

std::string analyze_json(const symalg::Group& g, symalg::GroupSource source, const std::string& label,
                         std::uint32_t prime, std::optional<unsigned> field_degree,
                         std::uint64_t seed, const std::string& format) {
  if (format != "json" && format != "md") throw symalg::InputError("format must be \"json\" or \"md\"");
  symalg::AnalysisResult result;
  {
    py::gil_scoped_release release;
    result = symalg::analyze_group(g, prime, field_degree, seed);
  }
  result.request.source = source;
  result.request.group = label;
  result.request.prime = prime;
  result.request.field_degree = field_degree;
  result.request.seed = seed;
  return symalg::render(result, format == "md" ? symalg::OutputFormat::markdown : symalg::OutputFormat::json);
}

}  // namespace

PYBIND11_MODULE(_symalg, m) {
  m.doc() = "Socle and center invariants of blocks of finite group algebras";
  m.attr("__version__") = symalg::kToolVersion;
  m.attr("DEFAULT_SEED") = symalg::kDefaultSeed;

  py::register_exception<symalg::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<symalg::ValidationError>(m, "ValidationError", PyExc_RuntimeError);

  m.def("catalog", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : symalg::catalog()) out.emplace_back(e.pattern, e.description);
    return out;
  }, "Catalog patterns with descriptions.");
  m.def("sweep_groups", &symalg::sweep_groups, py::arg("max_order") = 48, "Catalog groups swept by the self test.");

  m.def("multiplicative_order", &symalg::multiplicative_order, py::arg("p"), py::arg("m"),
        "Order of p modulo m (m coprime to p).");
  m.def("field_name", [](std::uint32_t p, unsigned e) { return symalg::Field(p, e).name(); }, py::arg("p"),
        py::arg("e") = 1);

  m.def("group_order", [](const std::string& name) { return symalg::make_catalog_group(name).order(); },
        py::arg("name"));
  m.def("splitting_degree",
        [](const std::string& name, std::uint32_t p) {
          return symalg::splitting_degree(symalg::make_catalog_group(name), p);
        },
        py::arg("name"), py::arg("p"));

  m.def("analyze",
        [](const std::string& name, std::uint32_t prime, std::optional<unsigned> field_degree, std::uint64_t seed,
           const std::string& format) {
          return analyze_json(symalg::make_catalog_group(name), symalg::GroupSource::catalog, name, prime, field_degree,
                              seed, format);
        },
        py::arg("group"), py::arg("prime"), py::arg("field_degree") = py::none(),
        py::arg("seed") = symalg::kDefaultSeed, py::arg("format") = "json",
        "Analyze a catalog group; returns the report text.");
  m.def("analyze_cayley",
        [](std::vector<std::vector<std::size_t>> table, std::uint32_t prime, std::optional<unsigned> field_degree,
           std::uint64_t seed, const std::string& name) {
          return analyze_json(symalg::group_from_cayley(std::move(table), name), symalg::GroupSource::cayley, name,
                              prime, field_degree, seed, "json");
        },
        py::arg("table"), py::arg("prime"), py::arg("field_degree") = py::none(),
        py::arg("seed") = symalg::kDefaultSeed, py::arg("name") = "cayley");
  m.def("analyze_permutations",
        [](std::size_t degree, const std::vector<symalg::Permutation>& generators, std::uint32_t prime,
           std::optional<unsigned> field_degree, std::uint64_t seed, const std::string& name) {
          return analyze_json(symalg::group_from_permutations(degree, generators, name), symalg::GroupSource::perms,
                              name, prime, field_degree, seed, "json");
        },
        py::arg("degree"), py::arg("generators"), py::arg("prime"), py::arg("field_degree") = py::none(),
        py::arg("seed") = symalg::kDefaultSeed, py::arg("name") = "perms");
}
