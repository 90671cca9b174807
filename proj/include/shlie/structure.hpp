#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "shlie/complex.hpp"
#include "shlie/multilinear.hpp"

namespace shlie {

// A chain complex together with the degree-0 bracket that seeds the
// inductive construction of the higher structure maps.
struct Instance {
  ChainComplex cx;
  SkewGradedMap l2tilde;  // arity 2, degree 0, supported on (0,0) only

  // Shape and invariant checks; throws NotAComplex / SpecInvalid.
  void validate() const;
};

// The compatibility conditions on the seed bracket: (i) bracketing any
// basis vector with any boundary lands in the boundaries; (ii) the
// three-term double-bracket sum of any basis triple lands in the
// boundaries.  Failures carry the witness tuple and offending value.
struct ConditionsReport {
  struct PairWitness {
    int cycle_index = 0;     // basis index of the first argument
    int boundary_index = 0;  // row of the canonical boundary basis
    Vec value;
  };
  struct TripleWitness {
    std::array<int, 3> args{};
    Vec value;
  };
  std::vector<PairWitness> fails_i;
  std::vector<TripleWitness> fails_ii;
  // Basis triples whose double-bracket sum is nonzero yet a boundary —
  // exactly the interesting regime where the triple bracket will not vanish.
  std::vector<TripleWitness> nontrivial_jacobiator;
  int checked_pairs = 0;
  int checked_triples = 0;
  bool pass() const { return fails_i.empty() && fails_ii.empty(); }
};

ConditionsReport check_conditions(const Instance& inst, const HomologyData& h);

// The full family of structure maps on one complex: maps[1] is the
// differential, maps[k] the arity-k bracket of degree k-2.
struct ShLieStructure {
  ChainComplex cx;
  int max_arity = 1;
  std::vector<SkewGradedMap> maps;  // index = arity; [0] unused

  const SkewGradedMap& map(int arity) const {
    return maps.at(static_cast<size_t>(arity));
  }
  SkewGradedMap& mutable_map(int arity) {
    return maps.at(static_cast<size_t>(arity));
  }
  // Pointer family for the defect evaluator; index = arity, [0] null.
  std::vector<const SkewGradedMap*> family() const;
};

// One record per constructed degree tuple: before applying the splitting
// homotopy, the accumulated pre-image sum was verified to be a boundary.
struct BoundaryCheck {
  int arity = 0;
  std::vector<int> multidegree;
  bool pass = true;
};

struct ExtendResult {
  ShLieStructure structure;
  ConditionsReport conditions;
  std::vector<BoundaryCheck> boundary_checks;
};

// Runs the inductive construction up to max_arity: the arity-2 map is the
// seed in degree 0 and s-of-sum everywhere above; arity n > 2 likewise,
// ascending in arity and then in total input degree.  Before every
// application of s the summed term is asserted to be a boundary
// (BoundaryClaimViolated otherwise); tuples whose target degree is one
// past the top are still summed and asserted (their boundary space is
// zero, which is what closes the top-degree relations).  Throws
// ConditionsFailed when check_conditions rejects the seed.
ExtendResult extend(const Instance& inst, const ContractionData& k,
                    int max_arity);

// The vanishing pattern the construction promises, plus bookkeeping flags.
struct VanishingReport {
  bool l2_high = false;  // arity 2 vanishes on total input degree >= 2
  bool l3_pos = false;   // arity 3 supported on (0,0,0) only
  bool l4 = false;       // arity 4 identically zero
  bool l5 = false;       // arity 5 identically zero
  bool l3_nonzero_at_zero = false;  // informational: arity 3 nonzero at (0,0,0)
};

// Exhaustive structure-identity sweep: max |defect coefficient| per arity,
// with witnesses for nonzero defects and warnings for arities the
// structure was not built to cover.
struct DefectSweep {
  struct Witness {
    int arity = 0;
    std::vector<BasisArg> args;
    Elt defect;
  };
  std::map<int, Rat> max_by_arity;
  std::vector<Witness> witnesses;  // capped; first failures in canonical order
  std::vector<std::string> warnings;
};

struct VerifyReport {
  VanishingReport vanishing;
  DefectSweep defects;
  bool pass = false;
};

// Checks the vanishing claims on the stored maps and exhaustively runs the
// n-argument relation for every n <= max_arity on all canonical basis
// tuples (degree tuples where every term is forced zero by the maps'
// supports are skipped as exactly zero).
VerifyReport verify_structure(const ShLieStructure& S);

// Replaces everything above degree 1 by the kernel of the degree-1
// differential, included back into degree 1: the result is a three-term
// instance, exact in positive degrees, with the same seed bracket.
Instance truncate(const Instance& inst);

}  // namespace shlie
