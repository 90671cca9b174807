#include "shlie/instances.hpp"

#include <algorithm>
#include <string>

#include "shlie/errors.hpp"
#include "shlie/rng.hpp"

namespace shlie {

namespace {

Vec zeros(int n) { return Vec(static_cast<size_t>(n), Rat(0)); }

Vec unit(int n, int i) {
  Vec v = zeros(n);
  v[static_cast<size_t>(i)] = Rat(1);
  return v;
}

// Dense skew bilinear table on Q^n built from (i<j, value) entries.
struct BilinearTable {
  int n = 0;
  std::vector<Vec> t;  // t[i*n + j]

  BilinearTable(int n, const std::vector<BracketEntry>& entries,
                const std::string& label)
      : n(n), t(static_cast<size_t>(n) * n, zeros(n)) {
    for (const BracketEntry& e : entries) {
      if (e.i < 0 || e.j <= e.i || e.j >= n)
        throw SpecInvalid(label + " entry has indices (" +
                          std::to_string(e.i) + "," + std::to_string(e.j) +
                          ") outside 0 <= i < j < " + std::to_string(n));
      if (static_cast<int>(e.value.size()) != n)
        throw SpecInvalid(label + " value at (" + std::to_string(e.i) + "," +
                          std::to_string(e.j) + ") has length " +
                          std::to_string(e.value.size()) + ", expected " +
                          std::to_string(n));
      at(e.i, e.j) = at(e.i, e.j) + e.value;
      at(e.j, e.i) = at(e.j, e.i) - e.value;
    }
  }

  Vec& at(int i, int j) { return t[static_cast<size_t>(i) * n + j]; }
  const Vec& at(int i, int j) const {
    return t[static_cast<size_t>(i) * n + j];
  }

  // Bilinear extension applied to (vector, basis index).
  Vec of_vec_basis(const Vec& x, int j) const {
    Vec out = zeros(n);
    for (int i = 0; i < n; ++i)
      if (!x[static_cast<size_t>(i)].is_zero())
        out = out + x[static_cast<size_t>(i)] * at(i, j);
    return out;
  }
};

// Validates the fiber dimension chain and returns the rank of each
// differential (ranks[j-1] = rank of the map out of degree j).
std::vector<int> fiber_ranks(int boundary_rank,
                             const std::vector<int>& fiber_dims) {
  std::vector<int> ranks;
  int r = boundary_rank;
  for (size_t j = 0; j < fiber_dims.size(); ++j) {
    int nj = fiber_dims[j];
    if (nj < 0)
      throw SpecInvalid("fiber dimension at degree " + std::to_string(j + 1) +
                        " is negative");
    if (nj < r)
      throw SpecInvalid("degree " + std::to_string(j + 1) + " has dimension " +
                        std::to_string(nj) + ", too small to surject onto the " +
                        std::to_string(r) + "-dimensional space below it");
    ranks.push_back(r);
    r = nj - r;
  }
  if (r != 0)
    throw SpecInvalid("the top-degree kernel has dimension " +
                      std::to_string(r) +
                      "; the complex cannot be exact in positive degrees");
  return ranks;
}

struct Catalog {
  const char* name;
  int dim;
  std::vector<BracketEntry> brackets;          // on the catalog coordinates
  std::vector<std::vector<int>> ideal_chain;   // index sets, ascending size
};

const std::vector<Catalog>& catalogs() {
  static const std::vector<Catalog> cats = [] {
    std::vector<Catalog> v;
    v.push_back({"abelian", 0, {}, {}});
    v.push_back({"solvable2", 2, {{0, 1, unit(2, 1)}}, {{1}}});
    v.push_back({"nilpotent3", 3, {{0, 1, unit(3, 2)}}, {{2}, {1, 2}}});
    Vec h = unit(3, 0);
    v.push_back({"simple3",
                 3,
                 {{0, 1, Rat(2) * unit(3, 1)},
                  {0, 2, Rat(-2) * unit(3, 2)},
                  {1, 2, h}},
                 {{0, 1, 2}}});
    return v;
  }();
  return cats;
}

}  // namespace

void LieIdealSpec::validate() const {
  if (dim_g < 0) throw SpecInvalid("dim_g is negative");
  BilinearTable bracket(dim_g, structure_constants, "structure constant");

  // Jacobi identity on all basis triples, expanded bilinearly.
  for (int i = 0; i < dim_g; ++i)
    for (int j = i + 1; j < dim_g; ++j)
      for (int k = j + 1; k < dim_g; ++k) {
        Vec sum = bracket.of_vec_basis(bracket.at(i, j), k) +
                  bracket.of_vec_basis(bracket.at(j, k), i) +
                  bracket.of_vec_basis(bracket.at(k, i), j);
        if (!is_zero(sum))
          throw SpecInvalid(
              "structure constants fail the Jacobi identity on basis triple (" +
              std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")");
      }

  if (ideal.ambient != dim_g)
    throw SpecInvalid("ideal lives in dimension " +
                      std::to_string(ideal.ambient) + ", expected " +
                      std::to_string(dim_g));
  for (int r = 0; r < ideal.dim(); ++r)
    for (int t = 0; t < dim_g; ++t) {
      Vec v = Rat(-1) * bracket.of_vec_basis(ideal.basis.row(r), t);
      if (!ideal.contains(v))
        throw SpecInvalid("the subspace is not an ideal: bracketing basis "
                          "vector " +
                          std::to_string(t) + " with ideal row " +
                          std::to_string(r) + " leaves the subspace");
    }

  BilinearTable mu(dim_g, perturbation, "perturbation");  // index/shape checks
  (void)mu;
  for (const BracketEntry& e : perturbation)
    if (!ideal.contains(e.value))
      throw SpecInvalid("perturbation value at (" + std::to_string(e.i) + "," +
                        std::to_string(e.j) + ") is outside the ideal");

  fiber_ranks(ideal.dim(), fiber_dims);
}

LieIdealSpec preset_spec(const std::string& name) {
  LieIdealSpec spec;
  if (name == "lie2") {
    spec.dim_g = 2;
    spec.structure_constants = {{0, 1, unit(2, 1)}};
    Matrix row = Matrix::zero(1, 2);
    row.at(0, 1) = Rat(1);
    spec.ideal = Subspace::span_rows(row);
    spec.fiber_dims = {1};
    return spec;
  }
  if (name == "perturbed4") {
    spec.dim_g = 4;
    Matrix rows = Matrix::zero(2, 4);
    rows.at(0, 2) = Rat(1);
    rows.at(1, 3) = Rat(1);
    spec.ideal = Subspace::span_rows(rows);
    spec.perturbation = {{0, 1, unit(4, 2)},
                         {1, 2, unit(4, 3)},
                         {0, 3, unit(4, 3)}};
    spec.fiber_dims = {2};
    return spec;
  }
  throw SpecInvalid("unknown preset \"" + name + "\"");
}

Instance gen_lie_ideal(const LieIdealSpec& spec) {
  spec.validate();
  const int n0 = spec.dim_g;
  std::vector<int> ranks = fiber_ranks(spec.ideal.dim(), spec.fiber_dims);

  Instance inst;
  inst.cx.dims.push_back(n0);
  for (int d : spec.fiber_dims) inst.cx.dims.push_back(d);
  inst.cx.diff.push_back(Matrix::zero(0, n0));

  Subspace base = spec.ideal;
  for (size_t j = 1; j < inst.cx.dims.size(); ++j) {
    int r = ranks[j - 1];
    Matrix d = Matrix::zero(inst.cx.dims[j - 1], inst.cx.dims[j]);
    for (int c = 0; c < r; ++c) d.set_column(c, base.basis.row(c));
    inst.cx.diff.push_back(d);
    if (j + 1 < inst.cx.dims.size()) base = kernel_basis(d);
  }

  inst.l2tilde = SkewGradedMap(2, 0, inst.cx.dims);
  for (const BracketEntry& e : spec.structure_constants)
    inst.l2tilde.add_basis({{0, e.i}, {0, e.j}}, e.value);
  for (const BracketEntry& e : spec.perturbation)
    inst.l2tilde.add_basis({{0, e.i}, {0, e.j}}, e.value);

  inst.validate();
  return inst;
}

namespace {

// Draws dimensions and differential ranks from the seed: top degree <= 4,
// every dimension <= 8, and dims[j] = ranks[j-1] + ranks[j] so the chain is
// exact by construction.
void derive_shape(SplitMix64& rng, std::vector<int>& dims,
                  std::vector<int>& ranks) {
  int top = 1 + static_cast<int>(rng.below(4));
  int n0 = 1 + static_cast<int>(rng.below(8));
  dims = {n0};
  int r = static_cast<int>(
      rng.below(static_cast<uint64_t>(std::min(n0, 8)) + 1));
  for (int j = 1; j <= top; ++j) {
    int k = (j < top)
                ? static_cast<int>(rng.below(static_cast<uint64_t>(9 - r)))
                : 0;
    dims.push_back(r + k);
    ranks.push_back(r);
    r = k;
  }
  while (dims.size() > 1 && dims.back() == 0) {
    dims.pop_back();
    ranks.pop_back();
  }
}

// Honours requested dimensions, raising a degree or appending one when the
// chain cannot otherwise be exact.  The first differential always takes the
// largest possible rank.
void repair_shape(const std::vector<int>& requested, std::vector<int>& dims,
                  std::vector<int>& ranks) {
  dims = requested;
  for (int d : dims)
    if (d < 0) throw SpecInvalid("requested dimensions must be non-negative");
  if (dims.empty()) dims = {1};
  if (dims.size() == 1) return;
  int r = std::min(dims[0], dims[1]);
  for (size_t j = 1; j < dims.size(); ++j) {
    if (dims[j] < r) dims[j] = r;
    ranks.push_back(r);
    r = dims[j] - r;
  }
  if (r > 0) {
    dims.push_back(r);
    ranks.push_back(r);
  }
}

}  // namespace

Instance gen_random_acyclic(const GenSeed& gs) {
  SplitMix64 rng(gs.seed);
  const long height = std::max<long>(1, gs.height);

  std::vector<int> dims;
  std::vector<int> ranks;
  if (gs.dims.empty())
    derive_shape(rng, dims, ranks);
  else
    repair_shape(gs.dims, dims, ranks);

  const int n0 = dims[0];
  const int b = ranks.empty() ? 0 : ranks[0];

  // Pick a bracket catalog that fits: the ideal must consist of `b`
  // coordinates, taken from the catalog's ideal chain when the abelian
  // padding alone cannot supply them.
  std::vector<size_t> fits;
  for (size_t c = 0; c < catalogs().size(); ++c) {
    const Catalog& cat = catalogs()[c];
    if (cat.dim > n0) continue;
    int need = std::max(0, b - (n0 - cat.dim));
    if (need == 0) {
      fits.push_back(c);
      continue;
    }
    for (const auto& entry : cat.ideal_chain)
      if (static_cast<int>(entry.size()) == need) {
        fits.push_back(c);
        break;
      }
  }
  const Catalog& cat = catalogs()[fits[rng.below(fits.size())]];

  std::vector<int> bidx;
  int need = std::max(0, b - (n0 - cat.dim));
  if (need > 0)
    for (const auto& entry : cat.ideal_chain)
      if (static_cast<int>(entry.size()) == need) {
        bidx = entry;
        break;
      }
  for (int t = 0; t < b - need; ++t) bidx.push_back(n0 - 1 - t);
  std::sort(bidx.begin(), bidx.end());

  LieIdealSpec spec;
  spec.dim_g = n0;
  for (const BracketEntry& e : cat.brackets) {
    Vec v = zeros(n0);
    for (int t = 0; t < cat.dim; ++t) v[static_cast<size_t>(t)] = e.value[t];
    spec.structure_constants.push_back({e.i, e.j, v});
  }
  Matrix brows = Matrix::zero(b, n0);
  for (int t = 0; t < b; ++t) brows.at(t, bidx[static_cast<size_t>(t)]) = Rat(1);
  spec.ideal = Subspace::span_rows(brows);

  // Random skew perturbation valued in the ideal; coefficients are kept
  // small enough that the combined seed bracket stays within the height.
  const long pmax = std::min<long>(height - 2 > 0 ? height - 2 : 1, 7);
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      if (b == 0 || rng.below(2) != 0) continue;
      Vec v = zeros(n0);
      bool nonzero = false;
      for (int t = 0; t < b; ++t) {
        long p = rng.range(-pmax, pmax);
        if (p == 0) continue;
        long q = rng.below(4) == 0 ? 1 + static_cast<long>(rng.below(3)) : 1;
        v[static_cast<size_t>(bidx[static_cast<size_t>(t)])] = Rat(p, q);
        nonzero = true;
      }
      if (nonzero) spec.perturbation.push_back({i, j, v});
    }
  spec.fiber_dims.assign(dims.begin() + 1, dims.end());
  spec.validate();  // holds by construction; fail loudly if not

  // Random differentials with exact ranks: each block of leading columns is
  // a unimodular mix of the canonical basis of what it must hit, and every
  // extra column is a small combination of the leading ones.
  Instance inst;
  inst.cx.dims = dims;
  inst.cx.diff.push_back(Matrix::zero(0, n0));
  Subspace base = spec.ideal;
  for (size_t j = 1; j < dims.size(); ++j) {
    int r = ranks[j - 1];
    Matrix d = Matrix::zero(dims[j - 1], dims[j]);
    for (int c = 0; c < r; ++c) {
      Vec col = base.basis.row(c);
      for (int i = 0; i < c; ++i) {
        long u = rng.range(-2, 2);
        if (u != 0) col = col + Rat(u) * base.basis.row(i);
      }
      d.set_column(c, col);
    }
    for (int c = r; c < dims[j]; ++c) {
      Vec col = zeros(dims[j - 1]);
      int picks = static_cast<int>(rng.below(3));
      for (int p = 0; p < picks && r > 0; ++p) {
        int src = static_cast<int>(rng.below(static_cast<uint64_t>(r)));
        Rat sign(rng.below(2) == 0 ? 1 : -1);
        col = col + sign * d.column(src);
      }
      d.set_column(c, col);
    }
    inst.cx.diff.push_back(d);
    if (j + 1 < dims.size()) base = kernel_basis(d);
  }

  inst.l2tilde = SkewGradedMap(2, 0, dims);
  for (const BracketEntry& e : spec.structure_constants)
    inst.l2tilde.add_basis({{0, e.i}, {0, e.j}}, e.value);
  for (const BracketEntry& e : spec.perturbation)
    inst.l2tilde.add_basis({{0, e.i}, {0, e.j}}, e.value);

  inst.validate();
  return inst;
}

}  // namespace shlie
