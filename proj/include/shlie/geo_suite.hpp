#pragma once

// Randomized exact verification that the two geometric examples carry the
// homotopy bracket identities.  Elements of the three-step complexes are
// held in a tagged union; the n-ary bracket relations are evaluated
// literally — inner map on every block of an unshuffle, outer map on the
// rest, signs from the shared combinatorics — and every defect must vanish
// identically as a trigonometric polynomial.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shlie/courant.hpp"
#include "shlie/rng.hpp"
#include "shlie/symplectic.hpp"
#include "shlie/torus.hpp"

namespace shlie {

// One element of a geometric complex.  Exactly one payload is meaningful
// for a given degree and example; the others stay zero.
//   degree 2: scalar      (constants)
//   degree 1: fn          (functions)
//   degree 0: form        (closed one-forms; symplectic example)
//             sec         (generalized sections; algebroid example)
// Degrees outside the complex carry no payload at all.
struct GeoElt {
  int degree = 0;
  Rat scalar;
  TrigPoly fn;
  OneForm form;
  GSection sec;
  bool is_zero() const {
    return scalar.is_zero() && fn.is_zero() && form.is_zero() &&
           sec.is_zero();
  }
};

using GeoMap = std::function<GeoElt(const std::vector<GeoElt>&)>;

// The bracket family of one example: l[k] is the k-ary bracket, valid for
// arguments in any order (each map applies the graded sorting sign itself).
struct GeoMaps {
  int max_arity = 0;
  std::vector<GeoMap> l;  // index by arity; [0] unused
};

GeoMaps symplectic_maps();
GeoMaps courant_maps();

// Evaluates the n-ary relation sum(i+j=n+1) sign(i,j) l_j(l_i(block), rest)
// over all unshuffles on the given arguments.  The result sits in degree
// (total degree) + n - 3 and must be zero for a valid structure.
GeoElt geo_defect(const GeoMaps& maps, const std::vector<GeoElt>& args);

// Seeded drawing of sample data, bounded coefficients, frequencies up to
// max_freq in each slot.
TrigPoly random_trig(SplitMix64& rng, int max_freq);
OneForm random_closed_one_form(SplitMix64& rng, int max_freq);
GSection random_gsection(SplitMix64& rng, int max_freq);

struct GeoCheck {
  std::string name;
  int checked = 0;
  std::vector<int> failed;  // sample indices with a nonzero defect
  bool pass() const { return failed.empty(); }
};

struct GeoReport {
  std::string which;  // "symplectic" or "courant"
  int samples = 0;
  std::uint64_t seed = 0;
  int max_freq = 0;
  std::vector<GeoCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

// Runs the named example's full identity suite on `samples` random draws.
// which must be "symplectic" or "courant"; throws SchemaError otherwise.
GeoReport verify_example_structures(const std::string& which, int samples,
                                    std::uint64_t seed, int max_freq);

}  // namespace shlie
