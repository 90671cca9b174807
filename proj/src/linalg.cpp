#include "shlie/linalg.hpp"

#include <cassert>

namespace shlie {

Matrix Matrix::identity(int n) {
  Matrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  assert(a.cols == b.cols);
  Matrix m = zero(a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), m.a.begin());
  std::copy(b.a.begin(), b.a.end(), m.a.begin() + a.a.size());
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m = zero(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    assert(static_cast<int>(cols[j].size()) == rows);
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(int r) const {
  return Vec(a.begin() + static_cast<size_t>(r) * cols,
             a.begin() + static_cast<size_t>(r + 1) * cols);
}

Vec Matrix::column(int c) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

void Matrix::set_column(int c, const Vec& v) {
  assert(static_cast<int>(v.size()) == rows);
  for (int i = 0; i < rows; ++i) at(i, c) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols == o.rows);
  Matrix m = zero(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows == o.rows && cols == o.cols);
  Matrix m = *this;
  for (size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows == o.rows && cols == o.cols);
  Matrix m = *this;
  for (size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m = zero(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  assert(static_cast<int>(v.size()) == cols);
  Vec r(rows, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int pr = 0;  // next pivot row
  for (int c = 0; c < m.cols && pr < m.rows; ++c) {
    int sel = -1;
    for (int r = pr; r < m.rows; ++r)
      if (!m.at(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    Rat inv = Rat(1) / m.at(pr, c);
    for (int j = c; j < m.cols; ++j) m.at(pr, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pr || m.at(r, c).is_zero()) continue;
      Rat f = m.at(r, c);
      for (int j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Matrix aug = Matrix::zero(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    return std::nullopt;
  Matrix inv = Matrix::zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix::zero(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span_rows(Matrix rows) {
  auto pivots = rref(rows);
  Subspace s;
  s.ambient = rows.cols;
  s.basis = Matrix::zero(static_cast<int>(pivots.size()), rows.cols);
  for (int r = 0; r < s.basis.rows; ++r)
    for (int c = 0; c < rows.cols; ++c) s.basis.at(r, c) = rows.at(r, c);
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  assert(static_cast<int>(v.size()) == ambient);
  Vec rem = v;
  Vec coeff(basis.rows, Rat(0));
  for (int r = 0; r < basis.rows; ++r) {
    int p = 0;
    while (p < ambient && basis.at(r, p).is_zero()) ++p;
    if (p == ambient) continue;
    if (!rem[p].is_zero()) {
      coeff[r] = rem[p];  // pivot entry is 1 in echelon form
      for (int c = p; c < ambient; ++c) rem[c] -= coeff[r] * basis.at(r, c);
    }
  }
  if (!shlie::is_zero(rem)) return std::nullopt;
  return coeff;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.basis.rows; ++r)
    if (!contains(other.basis.row(r))) return false;
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix gens = Matrix::zero(m.cols - static_cast<int>(pivots.size()), m.cols);
  int g = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    gens.at(g, c) = Rat(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) gens.at(g, pivots[pi]) = -r.at(static_cast<int>(pi), c);
    ++g;
  }
  return Subspace::span_rows(gens);
}

Subspace image_basis(const Matrix& m) { return Subspace::span_rows(m.transpose()); }

std::optional<Vec> solve_preimage(const Matrix& m, const Vec& v) {
  assert(static_cast<int>(v.size()) == m.rows);
  Matrix aug = Matrix::zero(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = v[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vec x(m.cols, Rat(0));
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = aug.at(static_cast<int>(pi), m.cols);
  return x;
}

Subspace complement_basis(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient != outer.ambient || !outer.contains(inner))
    throw ContainmentViolation("complement_basis: inner subspace not contained in outer");
  Matrix work = inner.basis;
  int base = rank(work);
  std::vector<Vec> chosen;
  for (int r = 0; r < outer.basis.rows; ++r) {
    Matrix trial = Matrix::vstack(work, Matrix::zero(1, outer.ambient));
    for (int c = 0; c < outer.ambient; ++c) trial.at(trial.rows - 1, c) = outer.basis.at(r, c);
    if (rank(trial) > base) {
      work = trial;
      ++base;
      chosen.push_back(outer.basis.row(r));
    }
  }
  Matrix rows = Matrix::zero(static_cast<int>(chosen.size()), outer.ambient);
  for (size_t i = 0; i < chosen.size(); ++i)
    for (int c = 0; c < outer.ambient; ++c) rows.at(static_cast<int>(i), c) = chosen[i][c];
  return Subspace::span_rows(rows);
}

}  // namespace shlie
