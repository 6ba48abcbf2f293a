#pragma once

#include <string>
#include <vector>

#include "qk/linalg.hpp"
#include "qk/tensor.hpp"

namespace qk {

/// An element of a tensor product of several spaces, with named legs. Every
/// structural formula in the library (comultiplications, actions, reassociator
/// weights) is phrased as a chain of leg applications on one of these, which
/// keeps the code a literal transcription of the algebra.
///
/// Legs are consumed/produced by `apply`: the produced legs take the place of
/// the first consumed one, everything else keeps its relative order.
class Expr {
 public:
  static Expr one_hot(Field f, const std::vector<std::pair<std::string, int>>& legs,
                      const Index& at);

  /// Builds the graph of the identity on the listed spaces: for each (name,d)
  /// there is an input leg "name.in" and an active leg "name". Applying
  /// operations to the active legs then yields the full structure tensor of a
  /// map, with axes (inputs..., outputs...) once extracted.
  static Expr identity_map(Field f, const std::vector<std::pair<std::string, int>>& io);

  const SparseTensor& tensor() const { return t_; }
  const std::vector<std::string>& legs() const { return legs_; }
  int pos(const std::string& name) const;
  int dim(const std::string& name) const { return t_.shape()[pos(name)]; }

  /// Contracts the named legs against op's axes `op_axes` (element-of-space
  /// convention: op axis order is (inputs..., outputs...)); op's remaining
  /// axes become the `produced` legs, spliced in at the first consumed leg's
  /// position.
  void apply(const SparseTensor& op, const std::vector<std::string>& consumed,
             const std::vector<int>& op_axes, const std::vector<std::string>& produced);

  /// Scalar-valued application (functional weights): no produced legs.
  void weight(const SparseTensor& op, const std::vector<std::string>& consumed,
              const std::vector<int>& op_axes) {
    apply(op, consumed, op_axes, {});
  }

  void append(const SparseTensor& rank1, const std::string& name);
  void rename(const std::string& from, const std::string& to);

  /// Tensor with the legs permuted into the requested order (must list all).
  SparseTensor extract(const std::vector<std::string>& order) const;

 private:
  SparseTensor t_;
  std::vector<std::string> legs_;
};

struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::string subject;
  std::vector<CheckRecord> records;

  bool ok() const;
  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void pass(const std::string& name) { records.push_back({name, true, ""}); }
  void fail(const std::string& name, const std::string& witness) {
    records.push_back({name, false, witness});
  }
  void merge(const Report& other, const std::string& prefix);
  const CheckRecord* first_failure() const;
  std::string text() const;
};

/// Compares two map tensors (axes = in_rank input legs, then output legs).
/// On mismatch the witness names the first differing input tuple and both
/// output tensors.
CheckRecord compare_maps(const std::string& name, const SparseTensor& got,
                         const SparseTensor& want, int in_rank,
                         const std::vector<std::vector<std::string>>& in_labels,
                         const std::vector<std::vector<std::string>>& out_labels);

std::string tuple_str(const Index& idx, const std::vector<std::vector<std::string>>& labels);

}  // namespace qk
