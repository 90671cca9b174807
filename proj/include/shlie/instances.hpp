#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shlie/linalg.hpp"
#include "shlie/structure.hpp"

namespace shlie {

// One entry of a skew bilinear table on degree 0: value of (e_i, e_j), i < j.
struct BracketEntry {
  int i = 0;
  int j = 0;
  Vec value;
};

// Recipe for an instance whose seed-bracket conditions hold by algebra
// rather than by search: a Lie bracket, an ideal B that the degree-1 fiber
// surjects onto (so B is exactly the boundary space), and a skew
// perturbation valued inside B.  Bracketing anything with B stays in B
// because B is an ideal; the triple-bracket sum of the perturbed bracket
// stays in B because the unperturbed sum vanishes and every cross term
// contains a B-valued factor.
struct LieIdealSpec {
  int dim_g = 0;
  std::vector<BracketEntry> structure_constants;
  Subspace ideal;  // subspace of Q^dim_g closed under bracketing
  std::vector<BracketEntry> perturbation;  // values inside the ideal
  std::vector<int> fiber_dims;  // dimensions of degrees 1, 2, ...

  // Throws SpecInvalid naming the violated invariant: the Jacobi identity,
  // ideal closure, perturbation containment, index/shape ranges, or a fiber
  // dimension chain that cannot carry an exact complex.
  void validate() const;
};

// Named ready-made specs: "lie2" (two-dimensional nonabelian algebra) and
// "perturbed4" (abelian algebra with a perturbation that produces a nonzero
// triple bracket).  Throws SpecInvalid for unknown names.
LieIdealSpec preset_spec(const std::string& name);

// Deterministically realizes the spec: X_0 = the algebra, the degree-1
// differential maps the first fiber coordinates onto the ideal basis, and
// each higher differential maps onto the kernel below it, so the complex is
// exact in positive degrees by construction and check_conditions passes.
Instance gen_lie_ideal(const LieIdealSpec& spec);

struct GenSeed {
  uint64_t seed = 0;
  // Requested dimensions per degree.  Empty: drawn from the seed (at most 8
  // per degree, top degree at most 4).  Non-empty: honoured, except that a
  // degree is raised or one degree appended when the requested chain cannot
  // carry an exact complex.
  std::vector<int> dims;
  int height = 9;  // bound on drawn numerators and denominators
};

// Seeded random instance: random exact differentials (unimodular mixes of
// canonical kernel bases plus dependent extra columns), a bracket drawn
// from a fixed catalog of Jacobi tables, an ideal of the forced boundary
// rank, and a random ideal-valued perturbation.  Identical seeds and
// parameters give identical instances.
Instance gen_random_acyclic(const GenSeed& gs);

}  // namespace shlie
