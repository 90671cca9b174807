#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace shlie {

/// Base class for all library errors that carry a mathematical or schema witness.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// complement_basis was called with inner not contained in outer.
struct ContainmentViolation : Error {
  using Error::Error;
};

/// Differential squares to a nonzero map, or matrix shapes are inconsistent.
struct NotAComplex : Error {
  using Error::Error;
};

/// Homology in some positive degree is nonzero; no contraction exists.
struct NotAcyclic : Error {
  int degree;
  NotAcyclic(int degree, const std::string& what) : Error(what), degree(degree) {}
};

/// A degree or basis index exceeds the ranges the packed-key encoding supports.
struct DegreeOverflow : Error {
  using Error::Error;
};

/// A pre-s sum failed its boundary-membership assertion during the inductive build.
struct BoundaryClaimViolated : Error {
  int arity;
  std::vector<int> multidegree;
  std::vector<int> witness_args;  // packed (degree<<16 | index) per slot
  BoundaryClaimViolated(int arity, std::vector<int> multidegree,
                        std::vector<int> witness_args, const std::string& what)
      : Error(what), arity(arity), multidegree(std::move(multidegree)),
        witness_args(std::move(witness_args)) {}
};

/// extend() was invoked on an instance whose degree-0 compatibility conditions fail.
struct ConditionsFailed : Error {
  using Error::Error;
};

/// Generator spec violates one of its invariants (Jacobi, ideal, value ranges).
struct SpecInvalid : Error {
  using Error::Error;
};

/// Malformed JSON input; `path` points at the offending element.
struct SchemaError : Error {
  std::string path;
  SchemaError(std::string path, const std::string& what)
      : Error(what + " (at " + path + ")"), path(std::move(path)) {}
};

/// A 1-form argument that must be closed is not.
struct NotClosed : Error {
  using Error::Error;
};

}  // namespace shlie
