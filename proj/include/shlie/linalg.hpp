#pragma once
#include <optional>
#include <vector>

#include "shlie/errors.hpp"
#include "shlie/rational.hpp"

namespace shlie {

/// Dense rational matrix, row-major. Zero rows/columns are legal shapes and
/// behave as maps to/from the zero space.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // rows * cols entries

  static Matrix zero(int rows, int cols) {
    Matrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows) * cols, Rat(0));
    return m;
  }
  static Matrix identity(int n);
  /// Stacks a on top of b (same column count).
  static Matrix vstack(const Matrix& a, const Matrix& b);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec row(int r) const;
  Vec column(int c) const;
  void set_column(int c, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  Matrix transpose() const;
  bool is_zero() const;

  /// Matrix-vector product.
  Vec apply(const Vec& v) const;
};

/// In-place reduction to reduced row echelon form with the deterministic
/// leftmost-pivot rule (first nonzero entry scanning down each column, fully
/// reduced above and below). Returns the pivot column indices in order.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

std::optional<Matrix> invert(const Matrix& m);

/// Subspace of Q^ambient in canonical form: basis rows are a reduced row
/// echelon matrix, so equal subspaces compare equal entry-wise.
struct Subspace {
  int ambient = 0;
  Matrix basis;  // dim x ambient, reduced row echelon, no zero rows

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  /// Canonicalizes the row span of `rows`.
  static Subspace span_rows(Matrix rows);

  int dim() const { return basis.rows; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v against the echelon basis rows, if v is a member.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

/// Canonical basis of ker(m) as a subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);

/// Canonical basis of the column space of m as a subspace of Q^rows.
Subspace image_basis(const Matrix& m);

/// One solution x of m x = v (free variables set to 0, leftmost-pivot rule),
/// or nullopt when v is outside the image.
std::optional<Vec> solve_preimage(const Matrix& m, const Vec& v);

/// Deterministic complement D with inner ⊕ D = outer: greedily extends
/// inner's echelon basis by outer's echelon basis rows in canonical order.
/// When outer is the full space those rows are exactly the standard
/// coordinate vectors in increasing index order. Throws ContainmentViolation
/// if inner is not contained in outer.
Subspace complement_basis(const Subspace& inner, const Subspace& outer);

}  // namespace shlie
