#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qk/scalar.hpp"

namespace qk {

using Index = std::vector<int>;

/// Exact tensor with entries indexed by multi-indices; zero entries are never
/// stored. std::map keys keep iteration lexicographic, so every traversal
/// (printing, witnesses, serialization) is deterministic.
class SparseTensor {
 public:
  SparseTensor() = default;
  SparseTensor(Field f, Index shape) : field_(std::move(f)), shape_(std::move(shape)) {}

  static SparseTensor unit(Field f, const Index& shape, const Index& at);  // one-hot
  static SparseTensor identity(Field f, int n);                           // rank-2 id

  const Field& field() const { return field_; }
  const Index& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  const std::map<Index, Scalar>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Scalar at(const Index& idx) const;
  void set(const Index& idx, const Scalar& v);
  void add(const Index& idx, const Scalar& v);

  SparseTensor operator+(const SparseTensor& o) const;
  SparseTensor operator-(const SparseTensor& o) const;
  SparseTensor scaled(const Scalar& c) const;
  bool operator==(const SparseTensor& o) const;

  std::string str(const std::vector<std::vector<std::string>>& leg_labels = {}) const;

 private:
  void check_index(const Index& idx) const;

  Field field_;
  Index shape_;
  std::map<Index, Scalar> entries_;
};

/// Exact contraction over the given (axis-of-a, axis-of-b) pairs. Result axes:
/// a's unpaired axes in order, then b's unpaired axes in order.
SparseTensor contract(const SparseTensor& a, const SparseTensor& b,
                      const std::vector<std::pair<int, int>>& pairs);

/// perm[i] = axis of `t` that becomes axis i of the result.
SparseTensor permuted(const SparseTensor& t, const std::vector<int>& perm);

/// Tensor product: axes of a, then axes of b.
SparseTensor outer(const SparseTensor& a, const SparseTensor& b);

/// Fix the given axes to the given values; remaining axes keep their order.
SparseTensor slice(const SparseTensor& t, const std::vector<int>& axes, const Index& values);

/// Merges `count` consecutive axes starting at `start` into one (row-major).
SparseTensor fuse_axes(const SparseTensor& t, int start, int count);

/// Splits axis `axis` back into the given dimensions (row-major).
SparseTensor unfuse_axis(const SparseTensor& t, int axis, const Index& dims);

SparseTensor from_vector(const Field& f, const std::vector<Scalar>& v);
std::vector<Scalar> to_vector(const SparseTensor& t);  // rank-1 only

}  // namespace qk
