#include "qk/linalg.hpp"

#include <sstream>

namespace qk {

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, int rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, (int)cols.size());
  for (int c = 0; c < (int)cols.size(); ++c) {
    if ((int)cols[c].size() != rows) throw Error("from_columns: length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, (int)rows.size(), cols);
  for (int r = 0; r < (int)rows.size(); ++r) {
    if ((int)rows[r].size() != cols) throw Error("from_rows: length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_map_tensor(const SparseTensor& t) {
  if (t.rank() != 2) throw Error("from_map_tensor: rank-2 tensor expected");
  Matrix m(t.field(), t.shape()[1], t.shape()[0]);
  for (const auto& [k, v] : t.entries()) m.at(k[1], k[0]) = v;
  return m;
}

SparseTensor Matrix::to_map_tensor() const {
  SparseTensor t(field_, {cols_, rows_});
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) t.set({c, r}, at(r, c));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix m(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) += aik * o.at(k, j);
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  Matrix m = *this;
  for (int i = 0; i < rows_ * cols_; ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
  Matrix m = *this;
  for (int i = 0; i < rows_ * cols_; ++i) m.a_[i] -= o.a_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if ((int)v.size() != cols_) throw Error("matrix apply shape mismatch");
  Vec r(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transposed() const {
  Matrix m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  auto pivots = rref_inplace(aug);
  if ((int)pivots.size() != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix inv(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

std::vector<int> rref_inplace(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Scalar piv = m.at(row, col).inv();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * piv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<Vec> solve_linear(const Matrix& A, const Vec& b) {
  if ((int)b.size() != A.rows()) throw Error("solve_linear: rhs length mismatch");
  Matrix aug(A.field(), A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  auto pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
  Vec x(A.cols(), Scalar::zero(A.field()));
  for (int r = 0; r < (int)pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols());
  return x;
}

std::vector<Vec> kernel_basis(const Matrix& A) {
  Matrix m = A;
  auto pivots = rref_inplace(m);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int j = 0; j < A.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(A.cols(), Scalar::zero(A.field()));
    v[j] = Scalar::one(A.field());
    for (int r = 0; r < (int)pivots.size(); ++r) v[pivots[r]] = -m.at(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(Matrix m) { return (int)rref_inplace(m).size(); }

Subspace Subspace::span(Field f, int ambient, const std::vector<Vec>& vectors) {
  Matrix m = Matrix::from_rows(f, ambient, vectors);
  auto pivots = rref_inplace(m);
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.pivots_ = pivots;
  for (int r = 0; r < (int)pivots.size(); ++r) {
    Vec row(ambient, Scalar::zero(f));
    for (int c = 0; c < ambient; ++c) row[c] = m.at(r, c);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::full(Field f, int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient, Scalar::zero(f));
    v[i] = Scalar::one(f);
    rows.push_back(std::move(v));
  }
  return span(f, ambient, rows);
}

Vec Subspace::reduce(const Vec& v) const {
  Vec w = v;
  for (int i = 0; i < dim(); ++i) {
    Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) w[j] -= c * basis_[i][j];
  }
  return w;
}

bool Subspace::contains(const Vec& v) const {
  for (const auto& s : reduce(v))
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;  // RREF is canonical
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim(), Scalar::zero(field_));
  for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Matrix Subspace::inclusion() const {
  return Matrix::from_columns(field_, ambient_, basis_);
}

Matrix Subspace::retraction() const {
  Matrix m(field_, dim(), ambient_);
  for (int i = 0; i < dim(); ++i) m.at(i, pivots_[i]) = Scalar::one(field_);
  return m;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, ambient_, rows);
}

SparseTensor subspace_inclusion_tensor(const Subspace& sub) {
  SparseTensor t(sub.field(), {sub.dim(), sub.ambient()});
  for (int i = 0; i < sub.dim(); ++i)
    for (int j = 0; j < sub.ambient(); ++j)
      if (!sub.basis()[i][j].is_zero()) t.set({i, j}, sub.basis()[i][j]);
  return t;
}

SparseTensor corestrict_axis(const SparseTensor& t, int axis, const Subspace& sub,
                             const std::string& what) {
  SparseTensor w = contract(t, sub.retraction().to_map_tensor(), {{axis, 0}});
  SparseTensor back = contract(w, subspace_inclusion_tensor(sub), {{w.rank() - 1, 0}});
  std::vector<int> moved;
  for (int i = 0; i < t.rank(); ++i)
    if (i != axis) moved.push_back(i);
  moved.push_back(axis);
  if (!(back == permuted(t, moved))) throw Error(what + ": image leaves the subspace");
  std::vector<int> perm;
  for (int i = 0; i + 1 < w.rank(); ++i) perm.push_back(i);
  perm.insert(perm.begin() + axis, w.rank() - 1);
  return permuted(w, perm);
}

Quotient Quotient::by(const Subspace& rel) {
  Quotient q;
  q.rel_ = rel;
  std::vector<bool> is_pivot(rel.ambient(), false);
  for (int p : rel.pivots()) is_pivot[p] = true;
  for (int j = 0; j < rel.ambient(); ++j)
    if (!is_pivot[j]) q.reps_.push_back(j);

  Field f = rel.field();
  q.sect_ = Matrix(f, rel.ambient(), (int)q.reps_.size());
  for (int k = 0; k < (int)q.reps_.size(); ++k) q.sect_.at(q.reps_[k], k) = Scalar::one(f);

  q.proj_ = Matrix(f, (int)q.reps_.size(), rel.ambient());
  for (int j = 0; j < rel.ambient(); ++j) {
    Vec e(rel.ambient(), Scalar::zero(f));
    e[j] = Scalar::one(f);
    Vec red = rel.reduce(e);
    for (int k = 0; k < (int)q.reps_.size(); ++k) q.proj_.at(k, j) = red[q.reps_[k]];
  }
  return q;
}

}  // namespace qk
