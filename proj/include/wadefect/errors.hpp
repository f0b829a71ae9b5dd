#pragma once

#include <stdexcept>
#include <string>

namespace wadefect {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shapes of matrices or vectors do not line up.
struct DimensionError : Error {
  using Error::Error;
};

// An operation was called outside its documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

// A lattice quotient that was required to be finite is not.
struct InfiniteQuotientError : Error {
  using Error::Error;
};

// Invalid multiplication table, permutation, subgroup or index.
struct GroupError : Error {
  using Error::Error;
};

// The action data does not define a module over the group.
struct ModuleError : Error {
  using Error::Error;
};

// Malformed scenario document.
struct SchemaError : Error {
  using Error::Error;
};

// Unknown catalog entry, group name or subgroup selector.
struct LookupError : Error {
  using Error::Error;
};

// Two independent H_1 computations disagreed.
struct OracleMismatch : Error {
  using Error::Error;
};

}  // namespace wadefect
