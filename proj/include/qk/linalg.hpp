#pragma once

#include <optional>
#include <vector>

#include "qk/tensor.hpp"

namespace qk {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, int n);
  static Matrix from_columns(Field f, int rows, const std::vector<Vec>& cols);
  static Matrix from_rows(Field f, int cols, const std::vector<Vec>& rows);
  /// rank-2 tensor with axes (in, out) -> matrix with m(out, in).
  static Matrix from_map_tensor(const SparseTensor& t);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& v) const;
  Matrix transposed() const;
  bool operator==(const Matrix& o) const;
  bool is_identity() const;
  bool is_zero() const;

  std::optional<Matrix> inverse() const;

  /// Tensor with axes (in, out); inverse of from_map_tensor.
  SparseTensor to_map_tensor() const;

  std::string str() const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// In-place Gauss–Jordan to reduced row echelon form. Deterministic: columns
/// scanned left to right, pivot = first row (top-down) with a nonzero entry.
/// Returns the pivot columns in order.
std::vector<int> rref_inplace(Matrix& m);

/// Exact solve A x = b. None when inconsistent. With a positive-dimensional
/// solution space, free variables (non-pivot columns, in the fixed column
/// order) are pinned to zero.
std::optional<Vec> solve_linear(const Matrix& A, const Vec& b);

/// Exact basis of the nullspace, read off the RREF (canonical: the basis
/// vector for free column j carries 1 at j and 0 at every other free column).
std::vector<Vec> kernel_basis(const Matrix& A);

int rank(Matrix m);

/// Row-span kept in RREF; basis is canonical for a given subspace.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(Field f, int ambient, const std::vector<Vec>& vectors);
  static Subspace full(Field f, int ambient);

  const Field& field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return (int)basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along the pivot coordinates.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  /// Coordinates of v in the RREF basis; none if v is outside the span.
  std::optional<Vec> coords(const Vec& v) const;

  Matrix inclusion() const;   // ambient x dim
  /// Left inverse of inclusion: picks the pivot coordinates. retraction() *
  /// inclusion() = id.
  Matrix retraction() const;  // dim x ambient

  Subspace sum(const Subspace& o) const;

 private:
  Field field_;
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

/// Basis vectors of a subspace as a rank-2 tensor (subspace index, ambient).
SparseTensor subspace_inclusion_tensor(const Subspace& sub);

/// Replaces an ambient tensor axis by subspace coordinates after verifying the
/// slices lie in the subspace (throws otherwise, with `what` in the message).
SparseTensor corestrict_axis(const SparseTensor& t, int axis, const Subspace& sub,
                             const std::string& what);

/// Quotient of k^ambient by a subspace, with the deterministic echelon
/// complement as section: representatives are the non-pivot coordinates.
class Quotient {
 public:
  Quotient() = default;
  static Quotient by(const Subspace& rel);

  int ambient() const { return rel_.ambient(); }
  int dim() const { return (int)reps_.size(); }
  const Subspace& relations() const { return rel_; }
  const std::vector<int>& rep_coords() const { return reps_; }

  const Matrix& projection() const { return proj_; }  // dim x ambient
  const Matrix& section() const { return sect_; }     // ambient x dim

 private:
  Subspace rel_;
  std::vector<int> reps_;
  Matrix proj_, sect_;
};

}  // namespace qk
