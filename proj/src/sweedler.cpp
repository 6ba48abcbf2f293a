#include "qk/sweedler.hpp"

#include <algorithm>
#include <sstream>

namespace qk {

Expr Expr::one_hot(Field f, const std::vector<std::pair<std::string, int>>& legs,
                   const Index& at) {
  Expr e;
  Index shape;
  for (const auto& [name, d] : legs) {
    e.legs_.push_back(name);
    shape.push_back(d);
  }
  e.t_ = SparseTensor::unit(f, shape, at);
  return e;
}

Expr Expr::identity_map(Field f, const std::vector<std::pair<std::string, int>>& io) {
  Expr e;
  e.t_ = SparseTensor(f, {});
  e.t_.set({}, Scalar::one(f));
  for (const auto& [name, d] : io) {
    e.t_ = contract(e.t_, SparseTensor::identity(f, d), {});
    e.legs_.push_back(name + ".in");
    e.legs_.push_back(name);
  }
  // interleaved (in, active) pairs; reorder: all inputs first
  std::vector<std::string> order;
  for (const auto& [name, d] : io) order.push_back(name + ".in");
  for (const auto& [name, d] : io) order.push_back(name);
  std::vector<int> perm;
  for (const auto& n : order) perm.push_back(e.pos(n));
  e.t_ = permuted(e.t_, perm);
  e.legs_ = order;
  return e;
}

int Expr::pos(const std::string& name) const {
  auto it = std::find(legs_.begin(), legs_.end(), name);
  if (it == legs_.end()) throw Error("no leg named '" + name + "'");
  return (int)(it - legs_.begin());
}

void Expr::apply(const SparseTensor& op, const std::vector<std::string>& consumed,
                 const std::vector<int>& op_axes, const std::vector<std::string>& produced) {
  if (consumed.empty()) throw Error("apply: nothing consumed");
  if (op.rank() != (int)(op_axes.size() + produced.size()))
    throw Error("apply: op rank mismatch");
  for (const auto& p : produced)
    if (std::find(legs_.begin(), legs_.end(), p) != legs_.end() &&
        std::find(consumed.begin(), consumed.end(), p) == consumed.end())
      throw Error("apply: leg name '" + p + "' already in use");
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> cpos;
  for (std::size_t i = 0; i < consumed.size(); ++i) {
    int p = pos(consumed[i]);
    cpos.push_back(p);
    pairs.push_back({p, op_axes[i]});
  }
  SparseTensor res = contract(t_, op, pairs);

  // legs after contraction: survivors in order, then produced
  std::vector<std::string> survivors;
  int anchor = 0;  // index of consumed.front()'s slot among survivors
  for (int i = 0; i < (int)legs_.size(); ++i) {
    if (std::find(cpos.begin(), cpos.end(), i) != cpos.end()) continue;
    if (i < cpos.front()) ++anchor;
    survivors.push_back(legs_[i]);
  }
  std::vector<std::string> target = survivors;
  target.insert(target.begin() + anchor, produced.begin(), produced.end());

  std::vector<std::string> current = survivors;
  current.insert(current.end(), produced.begin(), produced.end());
  std::vector<int> perm;
  for (const auto& n : target) {
    auto it = std::find(current.begin(), current.end(), n);
    perm.push_back((int)(it - current.begin()));
  }
  t_ = permuted(res, perm);
  legs_ = target;
}

void Expr::append(const SparseTensor& rank1, const std::string& name) {
  if (rank1.rank() != 1) throw Error("append: rank-1 tensor expected");
  t_ = outer(t_, rank1);
  legs_.push_back(name);
}

void Expr::rename(const std::string& from, const std::string& to) {
  legs_[pos(from)] = to;
}

SparseTensor Expr::extract(const std::vector<std::string>& order) const {
  if (order.size() != legs_.size()) throw Error("extract: wrong number of legs");
  std::vector<int> perm;
  for (const auto& n : order) perm.push_back(pos(n));
  return permuted(t_, perm);
}

bool Report::ok() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto r : other.records) {
    r.name = prefix.empty() ? r.name : prefix + "/" + r.name;
    records.push_back(std::move(r));
  }
}

const CheckRecord* Report::first_failure() const {
  for (const auto& r : records)
    if (!r.pass) return &r;
  return nullptr;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << (r.pass ? "  ok   " : "  FAIL ") << r.name;
    if (!r.pass && !r.witness.empty()) os << "  [" << r.witness << "]";
    os << "\n";
  }
  os << (ok() ? "PASS" : "FAIL") << " " << subject << "\n";
  return os.str();
}

std::string tuple_str(const Index& idx, const std::vector<std::vector<std::string>>& labels) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ",";
    if (i < labels.size() && idx[i] < (int)labels[i].size())
      os << labels[i][idx[i]];
    else
      os << idx[i];
  }
  os << ")";
  return os.str();
}

CheckRecord compare_maps(const std::string& name, const SparseTensor& got,
                         const SparseTensor& want, int in_rank,
                         const std::vector<std::vector<std::string>>& in_labels,
                         const std::vector<std::vector<std::string>>& out_labels) {
  SparseTensor diff = got - want;
  if (diff.empty()) return {name, true, ""};
  Index in(diff.entries().begin()->first.begin(), diff.entries().begin()->first.begin() + in_rank);
  std::vector<int> axes(in_rank);
  for (int i = 0; i < in_rank; ++i) axes[i] = i;
  SparseTensor g = slice(got, axes, in), w = slice(want, axes, in);
  CheckRecord r;
  r.name = name;
  r.pass = false;
  r.witness = "at " + tuple_str(in, in_labels) + ": lhs = " + g.str(out_labels) +
              ", rhs = " + w.str(out_labels);
  return r;
}

}  // namespace qk
