#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symalg/group.hpp"
#include "symalg/invariants.hpp"

namespace symalg {

inline constexpr const char* kToolVersion = "0.1.0";

enum class GroupSource { catalog, cayley, perms };
enum class OutputFormat { json, markdown };

struct AnalysisRequest {
  GroupSource source = GroupSource::catalog;
  std::string group;  // catalog name or file path
  std::uint32_t prime = 0;
  std::optional<unsigned> field_degree;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::json;
  std::string out;  // empty: stdout
};

/// Cayley JSON: {"name", "order", "table"}; permutation JSON: {"name",
/// "degree", "generators"}. `origin` names the source in error messages.
Group parse_cayley_json(const std::string& text, const std::string& origin);
Group parse_perms_json(const std::string& text, const std::string& origin);
Group load_group(const AnalysisRequest& request);

struct BlockReport {
  std::string group;
  std::uint32_t p = 0;
  unsigned field_degree = 1;
  std::size_t block_index = 0;
  std::size_t block_dim = 0;
  CartanData cartan;
  InvariantProfile profile;
  CheckReport checks;
};

struct AnalysisResult {
  AnalysisRequest request;
  std::string group_name;
  std::size_t group_order = 0;
  unsigned field_degree = 1;
  std::string field;
  unsigned splitting_degree = 1;
  std::size_t class_count = 0;
  std::size_t radical_dim = 0;
  CheckReport algebra_checks;
  std::vector<BlockReport> reports;

  bool all_passed() const;
};

/// Full pipeline for one group and prime. When the computed field does not
/// split the algebra, the degree is doubled and the analysis retried; with an
/// explicit field degree that is an InputError instead.
AnalysisResult analyze_group(const Group& g, std::uint32_t p, std::optional<unsigned> field_degree,
                             std::uint64_t seed = kDefaultSeed);
AnalysisResult analyze(const AnalysisRequest& request);

nlohmann::ordered_json to_json(const AnalysisResult& result);
/// Markdown rendering of a report produced by to_json.
std::string to_markdown(const nlohmann::ordered_json& report);
std::string render(const AnalysisResult& result, OutputFormat format);

/// 0 when every check passed, 2 otherwise.
int exit_code(const AnalysisResult& result);

}  // namespace symalg
