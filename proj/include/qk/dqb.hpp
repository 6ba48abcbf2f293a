#pragma once

#include "qk/coalgebra.hpp"

namespace qk {

/// Dual quasi-bialgebra by structure constants. The reassociator is stored
/// together with its convolution inverse: construction fails when ω is not
/// convolution invertible, since every downstream formula needs ω⁻¹.
struct DualQuasiBialgebra {
  Coalgebra co;
  SparseTensor mult;  // (i, j, k): e_i·e_j = Σ_k mult[i,j,k] e_k
  Vec unit;
  Functional omega, omega_inv;  // arity 3

  int dim() const { return co.dim; }
  const Field& field() const { return co.field; }
  const std::string& label(int i) const { return co.labels[i]; }

  static DualQuasiBialgebra make(Coalgebra co, SparseTensor mult, Vec unit,
                                 SparseTensor omega_values);

  // Sweedler steps
  void comul(Expr& e, const std::string& leg, const std::string& l1, const std::string& l2) const {
    co.comul(e, leg, l1, l2);
  }
  void counit_weight(Expr& e, const std::string& leg) const { co.counit_weight(e, leg); }
  void mul(Expr& e, const std::string& a, const std::string& b, const std::string& ab) const {
    e.apply(mult, {a, b}, {0, 1}, {ab});
  }
  void omega_weight(Expr& e, const std::string& a, const std::string& b, const std::string& c,
                    bool inverse = false) const {
    e.weight((inverse ? omega_inv : omega).values, {a, b, c}, {0, 1, 2});
  }
  SparseTensor unit_tensor() const { return from_vector(field(), unit); }

  /// Scalar value of ω / ω⁻¹ on a triple of vectors given by basis indices.
  Scalar omega_at(int a, int b, int c, bool inverse = false) const {
    return (inverse ? omega_inv : omega).values.at({a, b, c});
  }

  Vec multiply(const Vec& a, const Vec& b) const;
};

Report check_dqb(const DualQuasiBialgebra& H);
bool is_cocommutative(const DualQuasiBialgebra& H);

struct DQBMorphism {
  const DualQuasiBialgebra* source = nullptr;
  const DualQuasiBialgebra* target = nullptr;
  Matrix matrix;  // target.dim x source.dim
};

Report check_dqb_morphism(const DQBMorphism& f);

/// Monoid table with a normalized 3-cocycle θ (values nonzero); element 0 is
/// the unit. Group structure (an inverse table) is derived on demand.
struct GroupCocycleData {
  Field field;
  int order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of a·b
  std::vector<Scalar> theta;          // dense, size order³, row-major (a,b,c)

  const Scalar& theta_at(int a, int b, int c) const {
    return theta[(a * order + b) * order + c];
  }
  Scalar& theta_at(int a, int b, int c) { return theta[(a * order + b) * order + c]; }

  /// Associativity, unit at index 0, θ nonzero, θ(g,1,h)=1, 3-cocycle identity.
  void validate() const;  // throws Error with a witness
  std::optional<std::vector<int>> inverse_table() const;  // none unless a group
};

DualQuasiBialgebra from_group_cocycle(const GroupCocycleData& d);

/// S(g) = [ω(g,g⁻¹,g)]⁻¹ g⁻¹ on a monoid algebra that is a group algebra.
std::optional<Matrix> group_preantipode(const GroupCocycleData& d, const DualQuasiBialgebra& H);

}  // namespace qk
