#include "shlie/complex.hpp"

#include <cassert>

#include "shlie/rng.hpp"

namespace shlie {

Matrix ChainComplex::diff_at(int n) const {
  if (n >= 1 && n <= max_degree()) return diff[static_cast<size_t>(n)];
  return Matrix::zero(dim(n - 1), dim(n));
}

void ChainComplex::validate() const {
  if (dims.empty()) throw NotAComplex("no degrees given");
  if (diff.size() != dims.size())
    throw NotAComplex("wrong number of differentials");
  for (int n = 0; n <= max_degree(); ++n) {
    const Matrix& d = diff[static_cast<size_t>(n)];
    if (d.rows != dim(n - 1) || d.cols != dim(n))
      throw NotAComplex("differential out of degree " + std::to_string(n) +
                        " has the wrong shape");
  }
  for (int n = 2; n <= max_degree(); ++n) {
    if (!(diff_at(n - 1) * diff_at(n)).is_zero())
      throw NotAComplex("square of the differential is nonzero out of degree " +
                        std::to_string(n));
  }
}

HomologyData homology(const ChainComplex& cc) {
  HomologyData h;
  const int top = cc.max_degree();
  h.cycles.reserve(static_cast<size_t>(top) + 1);
  h.boundaries.reserve(static_cast<size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    // Degree 0 has no outgoing differential, so everything is a cycle.
    Subspace z = (n == 0) ? Subspace::full(cc.dim(0)) : kernel_basis(cc.diff_at(n));
    Subspace b = image_basis(cc.diff_at(n + 1));
    h.h_dim.push_back(z.dim() - b.dim());
    h.cycles.push_back(std::move(z));
    h.boundaries.push_back(std::move(b));
  }
  return h;
}

namespace {

// Rows of `basis` plus random rational combinations of rows of `mix`,
// yielding another valid complement basis (the change of basis is
// unitriangular, so spans of the enclosing decomposition are preserved).
Matrix perturb_rows(const Matrix& basis, const Matrix& mix, SplitMix64& rng) {
  Matrix out = basis;
  for (int r = 0; r < out.rows; ++r)
    for (int m = 0; m < mix.rows; ++m) {
      Rat c(rng.range(-3, 3));
      if (c.is_zero()) continue;
      for (int j = 0; j < out.cols; ++j) out.at(r, j) += c * mix.at(m, j);
    }
  return out;
}

}  // namespace

ContractionData build_contraction(const ChainComplex& cc,
                                  const HomologyData& h,
                                  std::optional<uint64_t> seed) {
  const int top = cc.max_degree();
  for (int n = 1; n <= top; ++n)
    if (h.h_dim[static_cast<size_t>(n)] != 0)
      throw NotAcyclic(n, "homology is nonzero in degree " + std::to_string(n));

  std::optional<SplitMix64> rng;
  if (seed) rng.emplace(*seed);

  ContractionData k;
  k.h = h;
  k.W.resize(static_cast<size_t>(top) + 1);
  k.C.resize(static_cast<size_t>(top) + 1);
  k.eta.resize(static_cast<size_t>(top) + 1);
  k.lambda.resize(static_cast<size_t>(top) + 1);
  k.s.resize(static_cast<size_t>(top) + 1);

  // Per degree: a basis adapted to X = W + B + C, stored as matrix rows.
  std::vector<Matrix> wrows(static_cast<size_t>(top) + 1);
  std::vector<Matrix> crows(static_cast<size_t>(top) + 1);
  // Rows (w..w+b) of the inverse change of basis: coordinates along B.
  std::vector<Matrix> proj_b(static_cast<size_t>(top) + 1);

  for (int n = 0; n <= top; ++n) {
    const size_t un = static_cast<size_t>(n);
    const int d = cc.dim(n);
    const Subspace& Z = h.cycles[un];
    const Subspace& B = h.boundaries[un];

    Matrix w = complement_basis(B, Z).basis;
    Matrix c = complement_basis(Z, Subspace::full(d)).basis;
    if (rng) {
      if (B.dim() > 0) w = perturb_rows(w, B.basis, *rng);
      if (Z.dim() > 0) c = perturb_rows(c, Z.basis, *rng);
    }

    Matrix p = Matrix::zero(d, d);
    for (int i = 0; i < w.rows; ++i) p.set_column(i, w.row(i));
    for (int i = 0; i < B.basis.rows; ++i)
      p.set_column(w.rows + i, B.basis.row(i));
    for (int i = 0; i < c.rows; ++i)
      p.set_column(w.rows + B.basis.rows + i, c.row(i));
    auto pinv = invert(p);
    if (!pinv)
      throw Error("internal: adapted basis is singular in degree " +
                  std::to_string(n));

    Matrix eta = Matrix::zero(w.rows, d);
    for (int i = 0; i < w.rows; ++i)
      for (int j = 0; j < d; ++j) eta.at(i, j) = pinv->at(i, j);
    Matrix bco = Matrix::zero(B.basis.rows, d);
    for (int i = 0; i < B.basis.rows; ++i)
      for (int j = 0; j < d; ++j) bco.at(i, j) = pinv->at(w.rows + i, j);

    Matrix lambda = Matrix::zero(d, w.rows);
    for (int i = 0; i < w.rows; ++i) lambda.set_column(i, w.row(i));

    k.W[un] = Subspace::span_rows(w);
    k.C[un] = Subspace::span_rows(c);
    k.eta[un] = std::move(eta);
    k.lambda[un] = std::move(lambda);
    wrows[un] = std::move(w);
    crows[un] = std::move(c);
    proj_b[un] = std::move(bco);
  }

  // s_n sends the boundary summand back up through the C summand of
  // degree n+1 (where the differential is injective) and kills W and C.
  for (int n = 0; n <= top; ++n) {
    const size_t un = static_cast<size_t>(n);
    const int d = cc.dim(n);
    const int dup = cc.dim(n + 1);
    Matrix s = Matrix::zero(dup, d);
    const Subspace& B = h.boundaries[un];
    if (B.dim() > 0 && dup > 0) {
      const Matrix& cu = crows[un + 1];  // rows span C_{n+1}
      Matrix ccols = Matrix::zero(dup, cu.rows);
      for (int i = 0; i < cu.rows; ++i) ccols.set_column(i, cu.row(i));
      Matrix dc = cc.diff_at(n + 1) * ccols;  // injective onto B_n
      for (int j = 0; j < d; ++j) {
        // Component of e_j along the boundaries, in the adapted basis.
        Vec bco = proj_b[un].column(j);
        Vec b(static_cast<size_t>(d), Rat());
        for (int i = 0; i < B.basis.rows; ++i)
          for (int t = 0; t < d; ++t) b[static_cast<size_t>(t)] += bco[static_cast<size_t>(i)] * B.basis.at(i, t);
        auto y = solve_preimage(dc, b);
        if (!y)
          throw Error("internal: boundary has no lift through the chosen "
                      "complement in degree " + std::to_string(n + 1));
        Vec lift = ccols.apply(*y);
        for (int t = 0; t < dup; ++t) s.at(t, j) = -lift[static_cast<size_t>(t)];
      }
    }
    k.s[un] = std::move(s);
  }
  return k;
}

ContractionCheck verify_contraction(const ChainComplex& cc,
                                    const ContractionData& k) {
  ContractionCheck rep;
  const int top = cc.max_degree();
  auto record = [&](const std::string& kind, int degree, const Matrix& m) {
    for (int j = 0; j < m.cols; ++j) {
      ++rep.checked;
      Vec col = m.column(j);
      if (!is_zero(col)) {
        rep.pass = false;
        rep.defects.push_back({kind, degree, j, std::move(col)});
      }
    }
  };

  for (int n = 0; n <= top; ++n) {
    const size_t un = static_cast<size_t>(n);
    const int d = cc.dim(n);
    // lambda.eta - 1 - diff.s - s.diff = 0 on all of X_n.
    Matrix e = k.lambda[un] * k.eta[un] - Matrix::identity(d) -
               cc.diff_at(n + 1) * k.s[un];
    if (n > 0) e = e - k.s[un - 1] * cc.diff_at(n);
    record("homotopy_identity", n, e);

    record("retraction", n, k.eta[un] * k.lambda[un] -
                                Matrix::identity(k.eta[un].rows));
    if (n < top) record("s_squared", n, k.s[un + 1] * k.s[un]);

    // s must kill the chosen complements W and C.
    if (k.W[un].dim() > 0) {
      Matrix wcols = Matrix::zero(d, k.W[un].dim());
      for (int i = 0; i < k.W[un].basis.rows; ++i)
        wcols.set_column(i, k.W[un].basis.row(i));
      record("s_kills_w", n, k.s[un] * wcols);
    }
    if (k.C[un].dim() > 0) {
      Matrix ccols = Matrix::zero(d, k.C[un].dim());
      for (int i = 0; i < k.C[un].basis.rows; ++i)
        ccols.set_column(i, k.C[un].basis.row(i));
      record("s_kills_c", n, k.s[un] * ccols);
    }
  }
  return rep;
}

}  // namespace shlie
