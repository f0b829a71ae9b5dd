#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wadefect/lattice.hpp"

namespace wadefect {

struct SelfcheckOptions {
  std::uint64_t seed = 1;
  std::size_t matrices = 200;
  std::size_t modules = 60;
  // replaces the shipped expectation of a catalog entry
  std::map<std::string, FinAbInvariants> expected_override;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Failed postconditions in a single check are reported in its detail
// rather than thrown.
std::vector<CheckOutcome> run_selfcheck(const SelfcheckOptions& options = {});

// Smith postconditions: U A V = D, U and V unimodular, U^-1 correct, diagonal chain.
// Returns an empty string on success, otherwise what failed.
std::string smith_postcondition_failure(const IntMatrix& a);

}  // namespace wadefect
