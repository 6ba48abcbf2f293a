#include "qk/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace qk {

void SparseTensor::check_index(const Index& idx) const {
  if (idx.size() != shape_.size()) throw Error("tensor index rank mismatch");
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] < 0 || idx[i] >= shape_[i]) throw Error("tensor index out of range");
}

SparseTensor SparseTensor::unit(Field f, const Index& shape, const Index& at) {
  SparseTensor t(f, shape);
  t.set(at, Scalar::one(f));
  return t;
}

SparseTensor SparseTensor::identity(Field f, int n) {
  SparseTensor t(f, {n, n});
  for (int i = 0; i < n; ++i) t.set({i, i}, Scalar::one(f));
  return t;
}

Scalar SparseTensor::at(const Index& idx) const {
  check_index(idx);
  auto it = entries_.find(idx);
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void SparseTensor::set(const Index& idx, const Scalar& v) {
  check_index(idx);
  if (v.is_zero())
    entries_.erase(idx);
  else
    entries_[idx] = v;
}

void SparseTensor::add(const Index& idx, const Scalar& v) {
  check_index(idx);
  auto it = entries_.find(idx);
  if (it == entries_.end()) {
    if (!v.is_zero()) entries_.emplace(idx, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

SparseTensor SparseTensor::operator+(const SparseTensor& o) const {
  if (shape_ != o.shape_) throw Error("tensor shape mismatch in +");
  SparseTensor r = *this;
  for (const auto& [k, v] : o.entries_) r.add(k, v);
  return r;
}

SparseTensor SparseTensor::operator-(const SparseTensor& o) const {
  if (shape_ != o.shape_) throw Error("tensor shape mismatch in -");
  SparseTensor r = *this;
  for (const auto& [k, v] : o.entries_) r.add(k, -v);
  return r;
}

SparseTensor SparseTensor::scaled(const Scalar& c) const {
  SparseTensor r(field_, shape_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : entries_) r.set(k, v * c);
  return r;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
  return shape_ == o.shape_ && entries_ == o.entries_;
}

std::string SparseTensor::str(const std::vector<std::vector<std::string>>& leg_labels) const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) os << " + ";
    first = false;
    os << v.str() << "*";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) os << (char)0xE2 << (char)0x8A << (char)0x97;  // ⊗
      if (i < leg_labels.size() && k[i] < (int)leg_labels[i].size())
        os << leg_labels[i][k[i]];
      else
        os << "e" << k[i];
    }
  }
  return os.str();
}

SparseTensor contract(const SparseTensor& a, const SparseTensor& b,
                      const std::vector<std::pair<int, int>>& pairs) {
  if (!(a.field() == b.field())) throw Error("tensor field mismatch in contract");
  std::vector<bool> apaired(a.rank(), false), bpaired(b.rank(), false);
  for (auto [ai, bi] : pairs) {
    if (ai < 0 || ai >= a.rank() || bi < 0 || bi >= b.rank()) throw Error("contract: bad axis");
    if (a.shape()[ai] != b.shape()[bi]) throw Error("contract: paired axes have unequal dimension");
    if (apaired[ai] || bpaired[bi]) throw Error("contract: axis paired twice");
    apaired[ai] = bpaired[bi] = true;
  }
  Index shape;
  for (int i = 0; i < a.rank(); ++i)
    if (!apaired[i]) shape.push_back(a.shape()[i]);
  for (int i = 0; i < b.rank(); ++i)
    if (!bpaired[i]) shape.push_back(b.shape()[i]);

  // bucket b's entries by their paired coordinates
  std::map<Index, std::vector<std::pair<Index, Scalar>>> buckets;
  for (const auto& [k, v] : b.entries()) {
    Index key, free;
    key.reserve(pairs.size());
    for (auto [ai, bi] : pairs) key.push_back(k[bi]);
    for (int i = 0; i < b.rank(); ++i)
      if (!bpaired[i]) free.push_back(k[i]);
    buckets[key].push_back({free, v});
  }

  SparseTensor r(a.field(), shape);
  for (const auto& [k, v] : a.entries()) {
    Index key, afree;
    for (auto [ai, bi] : pairs) key.push_back(k[ai]);
    for (int i = 0; i < a.rank(); ++i)
      if (!apaired[i]) afree.push_back(k[i]);
    auto it = buckets.find(key);
    if (it == buckets.end()) continue;
    for (const auto& [bfree, bv] : it->second) {
      Index full = afree;
      full.insert(full.end(), bfree.begin(), bfree.end());
      r.add(full, v * bv);
    }
  }
  return r;
}

SparseTensor permuted(const SparseTensor& t, const std::vector<int>& perm) {
  if ((int)perm.size() != t.rank()) throw Error("permute: rank mismatch");
  Index shape(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) shape[i] = t.shape()[perm[i]];
  SparseTensor r(t.field(), shape);
  for (const auto& [k, v] : t.entries()) {
    Index nk(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nk[i] = k[perm[i]];
    r.set(nk, v);
  }
  return r;
}

SparseTensor outer(const SparseTensor& a, const SparseTensor& b) {
  return contract(a, b, {});
}

SparseTensor slice(const SparseTensor& t, const std::vector<int>& axes, const Index& values) {
  if (axes.size() != values.size()) throw Error("slice: axes/values mismatch");
  std::vector<int> fixed(t.rank(), -1);
  for (std::size_t i = 0; i < axes.size(); ++i) fixed[axes[i]] = values[i];
  Index shape;
  for (int i = 0; i < t.rank(); ++i)
    if (fixed[i] < 0) shape.push_back(t.shape()[i]);
  SparseTensor r(t.field(), shape);
  for (const auto& [k, v] : t.entries()) {
    bool keep = true;
    Index nk;
    for (int i = 0; i < t.rank(); ++i) {
      if (fixed[i] >= 0) {
        if (k[i] != fixed[i]) { keep = false; break; }
      } else {
        nk.push_back(k[i]);
      }
    }
    if (keep) r.set(nk, v);
  }
  return r;
}

SparseTensor fuse_axes(const SparseTensor& t, int start, int count) {
  if (count <= 0 || start < 0 || start + count > t.rank()) throw Error("fuse_axes: bad range");
  Index shape;
  for (int i = 0; i < start; ++i) shape.push_back(t.shape()[i]);
  int prod = 1;
  for (int i = start; i < start + count; ++i) prod *= t.shape()[i];
  shape.push_back(prod);
  for (int i = start + count; i < t.rank(); ++i) shape.push_back(t.shape()[i]);
  SparseTensor r(t.field(), shape);
  for (const auto& [k, v] : t.entries()) {
    Index nk;
    for (int i = 0; i < start; ++i) nk.push_back(k[i]);
    int flat = 0;
    for (int i = start; i < start + count; ++i) flat = flat * t.shape()[i] + k[i];
    nk.push_back(flat);
    for (int i = start + count; i < t.rank(); ++i) nk.push_back(k[i]);
    r.set(nk, v);
  }
  return r;
}

SparseTensor unfuse_axis(const SparseTensor& t, int axis, const Index& dims) {
  int prod = 1;
  for (int d : dims) prod *= d;
  if (axis < 0 || axis >= t.rank() || prod != t.shape()[axis]) throw Error("unfuse_axis: bad split");
  Index shape;
  for (int i = 0; i < axis; ++i) shape.push_back(t.shape()[i]);
  shape.insert(shape.end(), dims.begin(), dims.end());
  for (int i = axis + 1; i < t.rank(); ++i) shape.push_back(t.shape()[i]);
  SparseTensor r(t.field(), shape);
  for (const auto& [k, v] : t.entries()) {
    Index nk(k.begin(), k.begin() + axis);
    int flat = k[axis];
    Index sub(dims.size());
    for (int i = (int)dims.size() - 1; i >= 0; --i) {
      sub[i] = flat % dims[i];
      flat /= dims[i];
    }
    nk.insert(nk.end(), sub.begin(), sub.end());
    nk.insert(nk.end(), k.begin() + axis + 1, k.end());
    r.set(nk, v);
  }
  return r;
}

SparseTensor from_vector(const Field& f, const std::vector<Scalar>& v) {
  SparseTensor t(f, {(int)v.size()});
  for (int i = 0; i < (int)v.size(); ++i) t.set({i}, v[i]);
  return t;
}

std::vector<Scalar> to_vector(const SparseTensor& t) {
  if (t.rank() != 1) throw Error("to_vector: rank-1 tensor expected");
  std::vector<Scalar> v(t.shape()[0], Scalar::zero(t.field()));
  for (const auto& [k, val] : t.entries()) v[k[0]] = val;
  return v;
}

}  // namespace qk
