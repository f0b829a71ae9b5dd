#pragma once

#include <string>
#include <vector>

#include "wadefect/errors.hpp"
#include "wadefect/finite_groups.hpp"
#include "wadefect/scenario_io.hpp"

namespace wadefect {

// Small groups by name: "C1".."C64", "klein", "S3", "D4", "Q8", "A4".
// test_group_names() lists the ones of order at most 12.
std::vector<Permutation> named_group_generators(const std::string& name);
GroupPtr named_group(const std::string& name);
std::vector<std::string> test_group_names();

struct CatalogEntry {
  std::string name;
  std::string summary;
  Json document;
  FinAbInvariants expected;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();
// Throws LookupError listing the available names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace wadefect
