#pragma once

#include <string>
#include <vector>

#include "symalg/group.hpp"

namespace symalg {

struct CatalogEntry {
  std::string pattern;      // e.g. "cyclic:<n>"
  std::string description;
};

/// Built-in group families and the names they accept.
std::vector<CatalogEntry> catalog();

/// Builds a catalog group by name, e.g. "cyclic:9", "dihedral:8", "sym:4".
/// Throws InputError for unknown names or out-of-range parameters.
Group make_catalog_group(const std::string& name);

/// Catalog names of every group of order <= max_order, swept by the self-test.
std::vector<std::string> sweep_groups(std::size_t max_order = 48);

}  // namespace symalg
