#pragma once

#include "qk/yd.hpp"

namespace qk {

/// Right dual quasi-Hopf H-bicomodule: an H-bicomodule with a right H-action
/// compatible with the bicomodule constraints. The optional left action makes
/// it an object of the four-structure category (a flag, not a separate type).
struct Trimodule {
  const DualQuasiBialgebra* over = nullptr;
  int dim = 0;
  std::vector<std::string> labels;
  SparseTensor l_coaction;  // (m, h, m')
  SparseTensor r_coaction;  // (m, m', h)
  SparseTensor r_action;    // (m, h, m')
  std::optional<SparseTensor> l_action;  // (h, m, m')

  bool four() const { return l_action.has_value(); }
  std::vector<std::vector<std::string>> label_legs(int count) const {
    return std::vector<std::vector<std::string>>(count, labels);
  }

  void coactL(Expr& e, const std::string& leg, const std::string& h, const std::string& m) const {
    e.apply(l_coaction, {leg}, {0}, {h, m});
  }
  void coactR(Expr& e, const std::string& leg, const std::string& m, const std::string& h) const {
    e.apply(r_coaction, {leg}, {0}, {m, h});
  }
  void actR(Expr& e, const std::string& m, const std::string& h, const std::string& out) const {
    e.apply(r_action, {m, h}, {0, 1}, {out});
  }
  void actL(Expr& e, const std::string& h, const std::string& m, const std::string& out) const {
    if (!l_action) throw Error("trimodule: no left action");
    e.apply(*l_action, {h, m}, {0, 1}, {out});
  }
};

Report check_trimodule(const Trimodule& M);

/// F(V) = V⊗H for a plain left comodule (three structures).
Trimodule F_build(const Comodule& V);
/// F(V) for a Yetter–Drinfeld module: adds the left action.
Trimodule F_build(const YDModule& V);
/// F on morphisms: f⊗H.
Matrix F_on_morphism(const Matrix& f, const DualQuasiBialgebra& H);

/// H itself with coactions Δ and actions m (the only way H is an algebra).
Trimodule regular_trimodule(const DualQuasiBialgebra* H);

/// M^coH = {m : m₀⊗m₁ = m⊗1_H} by exact kernel computation.
Subspace coinvariants(const Trimodule& M);

/// τ(m) = ω[m₋₁ ⊗ S(m₁)₁ ⊗ m₂] m₀S(m₁)₂ as a matrix endomorphism.
Matrix tau_map(const Trimodule& M, const Matrix& S);

/// Which of the projector laws hold for an arbitrary candidate p: M → M.
struct TauLaws {
  bool image_coinvariant = false;
  bool tau_mh = false;         // τ(mh) = ω⁻¹[τ(m₀)₋₁⊗m₁⊗h] τ(m₀)₀
  bool col_sx_eps = false;     // m₋₁⊗τ(m₀) = τ(m₀)₋₁m₁⊗τ(m₀)₀
  bool inv_eps = false;        // τ(m₀)m₁ = m
  bool tau_mh_simple = false;  // τ(mh) = mε(h) on coinvariants
  bool idempotent = false;
};
TauLaws tau_laws(const Trimodule& M, const Matrix& p);
Report check_tau(const Trimodule& M, const Matrix& S);

}  // namespace qk
