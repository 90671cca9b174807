#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shlie/errors.hpp"
#include "shlie/linalg.hpp"

namespace shlie {

// A non-negatively graded chain complex of finite-dimensional rational
// vector spaces.  Degrees outside [0, max_degree()] are zero-dimensional;
// every accessor honours that convention so callers never special-case the
// edges.
struct ChainComplex {
  // dims[n] is the dimension in degree n.
  std::vector<int> dims;
  // diff[n] maps degree n to degree n-1 (rows = dims[n-1], cols = dims[n]).
  // diff[0] is the zero map out of degree 0 and has shape 0 x dims[0].
  std::vector<Matrix> diff;

  int max_degree() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int n) const {
    return (n >= 0 && n <= max_degree()) ? dims[static_cast<size_t>(n)] : 0;
  }
  // Differential out of degree n, zero-shaped off the stored range (in
  // particular diff_at(max_degree()+1) has dims[max] rows and 0 columns).
  Matrix diff_at(int n) const;

  // Shape consistency and d.d = 0; throws NotAComplex otherwise.
  void validate() const;
};

struct HomologyData {
  std::vector<Subspace> cycles;      // ker(diff[n]) inside degree n
  std::vector<Subspace> boundaries;  // im(diff[n+1]) inside degree n
  std::vector<int> h_dim;            // dim cycles - dim boundaries

  bool acyclic_positive() const {
    for (size_t n = 1; n < h_dim.size(); ++n)
      if (h_dim[n] != 0) return false;
    return true;
  }
};

HomologyData homology(const ChainComplex& cc);

// A choice of splitting X_n = W_n + B_n + C_n (W a complement of the
// boundaries inside the cycles, C a complement of the cycles), together
// with the maps it induces:
//   eta[n]    : X_n -> H_n        (coordinates along the W basis)
//   lambda[n] : H_n -> X_n        (inclusion of the W basis)
//   s[n]      : X_n -> X_{n+1}    (the contracting homotopy; zero off B)
// They satisfy lambda.eta - 1 = diff.s + s.diff, eta.lambda = 1, s.s = 0,
// and s vanishes on W and C.
struct ContractionData {
  HomologyData h;
  std::vector<Subspace> W;
  std::vector<Subspace> C;
  std::vector<Matrix> eta;
  std::vector<Matrix> lambda;
  std::vector<Matrix> s;
};

// Builds the contraction.  Positive-degree homology throws NotAcyclic.
// With no seed the complements are the canonical (echelon-greedy) ones;
// with a seed they are deterministically perturbed, which exercises the
// freedom in the construction without breaking any identity.
ContractionData build_contraction(const ChainComplex& cc,
                                  const HomologyData& h,
                                  std::optional<uint64_t> seed = std::nullopt);

struct ContractionCheck {
  struct Defect {
    std::string kind;  // which identity failed
    int degree = 0;
    int basis_index = 0;
    Vec defect;  // the nonzero vector that should have been zero
  };
  bool pass = true;
  int checked = 0;  // number of individual identities evaluated
  std::vector<Defect> defects;
};

// Re-derives every identity listed on ContractionData from scratch.
ContractionCheck verify_contraction(const ChainComplex& cc,
                                    const ContractionData& k);

}  // namespace shlie
