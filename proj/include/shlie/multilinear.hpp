#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "shlie/complex.hpp"
#include "shlie/errors.hpp"
#include "shlie/rational.hpp"

namespace shlie {

// A homogeneous element: a coefficient vector in one degree.  Degrees whose
// space is zero-dimensional are represented with an empty coefficient
// vector, so "forced zero above the top degree" needs no special casing.
struct Elt {
  int degree = 0;
  Vec coeffs;
  bool is_zero() const { return shlie::is_zero(coeffs); }
};

Elt zero_elt(const std::vector<int>& dims, int degree);
Elt basis_elt(const std::vector<int>& dims, int degree, int index);
// acc += c * x; degrees must agree.
void add_scaled(Elt& acc, const Rat& c, const Elt& x);

// One graded basis vector, as (degree, index within that degree).
struct BasisArg {
  int degree = 0;
  int index = 0;
  friend bool operator==(const BasisArg& a, const BasisArg& b) {
    return a.degree == b.degree && a.index == b.index;
  }
};

// Sign of a permutation given in one-line notation (perm[k] = original
// position of the element now at position k).
int perm_parity(const std::vector<int>& perm);

// Graded correction sign: the product of (-1)^{deg_a * deg_b} over all
// inversions of the permutation, with degrees indexed by original position.
// This excludes the plain permutation parity.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

struct Unshuffle {
  std::vector<int> perm;
  int parity = 1;
};

// All permutations of {0..i+j-1} that increase inside the first i slots and
// inside the last j slots, in lexicographic order of the first block.
std::vector<Unshuffle> unshuffles(int i, int j);

// Packs (degree, index) into 16 bits; throws DegreeOverflow when the value
// does not fit (degree >= 64 or index >= 1024).
uint16_t pack_key(int degree, int index);

// A graded-antisymmetric multilinear map between the graded pieces of one
// complex, stored sparsely on canonical (sorted) basis tuples.  Tuples that
// repeat an even-degree basis vector are identically zero; tuples repeating
// an odd-degree one are genuine (such arguments commute with a plus sign).
class SkewGradedMap {
 public:
  int arity = 1;
  int map_degree = 0;
  std::vector<int> dims;  // dims[n] = dimension in degree n, zero elsewhere

  SkewGradedMap() = default;
  SkewGradedMap(int arity, int map_degree, std::vector<int> dims)
      : arity(arity), map_degree(map_degree), dims(std::move(dims)) {}

  int dim(int n) const {
    return (n >= 0 && n < static_cast<int>(dims.size()))
               ? dims[static_cast<size_t>(n)]
               : 0;
  }
  int out_degree(const std::vector<BasisArg>& args) const;

  // Adds `value` to the entry at the canonical form of `args` (the stored
  // value picks up the reordering sign).  value must live in the target
  // degree of the tuple.  Entries that cancel to zero are removed.
  void add_basis(const std::vector<BasisArg>& args, const Vec& value);

  Elt eval_basis(const std::vector<BasisArg>& args) const;
  // Full multilinear extension to homogeneous elements.
  Elt eval(const std::vector<Elt>& args) const;

  // Sorted degree tuples carrying at least one nonzero entry.
  const std::set<std::vector<int>>& support() const { return populated_; }
  bool is_zero() const { return values_.empty(); }
  const std::map<std::vector<uint16_t>, Vec>& table() const { return values_; }

 private:
  std::map<std::vector<uint16_t>, Vec> values_;
  std::set<std::vector<int>> populated_;
};

// The arity-1 layer of any structure on the complex: l1 = differential.
SkewGradedMap differential_map(const ChainComplex& cc);

// sum over (i, n-i)-unshuffles of
//   parity * koszul * outer(inner(args[first block]), args[rest]),
// with i = inner.arity.  The arity-split prefactor is NOT included here.
Elt compose_unshuffled(const SkewGradedMap& outer, const SkewGradedMap& inner,
                       const std::vector<Elt>& args);

// (-1)^{i(j-1)}: prefactor of the (inner arity i, outer arity j) term.
int relation_sign(int inner_arity, int outer_arity);

// The n-argument structure-identity defect
//   sum_{i+j=n+1} relation_sign(i,j) * compose_unshuffled(l_j, l_i, args)
// where maps_by_arity[a] points at l_a (null or absent entries are zero
// maps).  Identically zero iff the family satisfies the identity at args.
Elt linfty_defect(const std::vector<const SkewGradedMap*>& maps_by_arity,
                  const std::vector<Elt>& args);

}  // namespace shlie
