#pragma once

#include "qk/dqb.hpp"

namespace qk {

/// Left H-comodule: ρ(e_v) = Σ coaction[v,h,v'] e_h ⊗ e_{v'}.
struct Comodule {
  const DualQuasiBialgebra* over = nullptr;
  int dim = 0;
  std::vector<std::string> labels;
  SparseTensor coaction;  // (v, h, v')

  void coact(Expr& e, const std::string& leg, const std::string& h, const std::string& v) const {
    e.apply(coaction, {leg}, {0}, {h, v});
  }
  std::vector<std::vector<std::string>> label_legs(int count) const {
    return std::vector<std::vector<std::string>>(count, labels);
  }
  static Comodule trivial(const DualQuasiBialgebra* H);  // k with ρ(1)=1⊗1
};

Report check_comodule(const Comodule& V);

/// Codiagonal coaction on V⊗W (row-major flattened basis).
Comodule comodule_tensor(const Comodule& V, const Comodule& W);

/// Yetter–Drinfeld module: comodule plus action[h,v,v'].
struct YDModule {
  Comodule com;
  SparseTensor action;  // (h, v, v')

  const DualQuasiBialgebra* over() const { return com.over; }
  int dim() const { return com.dim; }
  void coact(Expr& e, const std::string& leg, const std::string& h, const std::string& v) const {
    com.coact(e, leg, h, v);
  }
  void act(Expr& e, const std::string& h, const std::string& v, const std::string& out) const {
    e.apply(action, {h, v}, {0, 1}, {out});
  }
  static YDModule trivial(const DualQuasiBialgebra* H);
};

Report check_yd(const YDModule& V);

/// Codiagonal coaction, action by the reassociator-twisted formula; basis of
/// the result is e_v⊗e_w flattened row-major (v*dim(W)+w).
YDModule yd_tensor(const YDModule& V, const YDModule& W);

/// c_{V,W}(v⊗w) = (v₋₁ ⊳ w) ⊗ v₀ : V⊗W → W⊗V (pre-braiding; not inverted).
Matrix yd_braiding(const YDModule& V, const YDModule& W);

/// Bialgebra in the Yetter–Drinfeld category.
struct BraidedBialgebra {
  YDModule carrier;
  SparseTensor m;      // (i, j, k)
  Vec u;
  SparseTensor delta;  // (i, j, k)
  Vec eps;

  int dim() const { return carrier.dim(); }
  static BraidedBialgebra trivial(const DualQuasiBialgebra* H);  // R = k
};

Report check_braided_bialgebra(const BraidedBialgebra& R);

/// Δ_{R⊗R} from the pre-braiding, as a map tensor (r.in, s.in, a, b, c, d)
/// for Δ_{R⊗R}(r⊗s) = Σ (a⊗b)⊗(c⊗d).
SparseTensor delta_R_tensor_square(const BraidedBialgebra& R);

}  // namespace qk
