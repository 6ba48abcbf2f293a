#pragma once

#include "qk/trimodule.hpp"

namespace qk {

/// M⊗_H N: quotient of M⊗N by the coequalizer relations, carrying the
/// inherited (co)module structures on the echelon-complement coordinates.
struct TensorOverH {
  Trimodule tri;
  Quotient q;  // ambient = dim(M)·dim(N), row-major
};

/// M□_H N: equalizer subspace of M⊗N with its inherited structures.
struct CotensorH {
  Trimodule tri;
  Subspace sub;
};

TensorOverH tensor_over_H(const Trimodule& M, const Trimodule& N);
CotensorH cotensor_H(const Trimodule& M, const Trimodule& N);

Matrix kron(const Matrix& a, const Matrix& b);

/// f⊗_H g on quotient coordinates (verifies f⊗g descends) and f□_H g on
/// equalizer coordinates (verifies f⊗g corestricts).
Matrix tensorH_map(const Matrix& f, const Matrix& g, const TensorOverH& src,
                   const TensorOverH& dst);
Matrix cotensor_map(const Matrix& f, const Matrix& g, const CotensorH& src, const CotensorH& dst);

/// Unit constraints of (ᴴ𝔐ᴴ_H, ⊗_H, H): l(h⊗_H u) = hu, r(u⊗_H h) = uh.
Matrix tensorH_left_unit(const Trimodule& U, const TensorOverH& HU);
Matrix tensorH_right_unit(const Trimodule& U, const TensorOverH& UH);
/// Unit constraints of (ᴴ𝔐ᴴ_H, □_H, H): ε on the H factor.
Matrix cotensor_left_unit(const Trimodule& U, const CotensorH& HU);
Matrix cotensor_right_unit(const Trimodule& U, const CotensorH& UH);

/// Associativity constraint of ⊗_H (reassociator-weighted) and of □_H
/// (plain rebracketing), as matrices between iterated-product coordinates.
Matrix tensorH_assoc(const Trimodule& U, const Trimodule& V, const Trimodule& W,
                     const TensorOverH& UV, const TensorOverH& UV_W, const TensorOverH& VW,
                     const TensorOverH& U_VW);
Matrix cotensor_assoc(const Trimodule& U, const Trimodule& V, const Trimodule& W,
                      const CotensorH& UV, const CotensorH& UV_W, const CotensorH& VW,
                      const CotensorH& U_VW);

// --- the structure maps of the monoidal equivalences ---

Matrix xi_map(const Comodule& U, const Trimodule& M, const TensorOverH& FU_M);
Matrix xi_inv_map(const Comodule& U, const Trimodule& M, const TensorOverH& FU_M);

Matrix alpha_map(const Comodule& U, const Comodule& V);      // U⊗F(V) → F(U⊗V)
Matrix alpha_inv_map(const Comodule& U, const Comodule& V);

Matrix beta_map(const Comodule& V, const Trimodule& M, const CotensorH& FV_M);
Matrix beta_inv_map(const Comodule& V, const Trimodule& M, const CotensorH& FV_M);

Matrix phi2_map(const YDModule& U, const YDModule& V, const TensorOverH& FU_FV);
Matrix phi2_inv_map(const YDModule& U, const YDModule& V, const TensorOverH& FU_FV);
Matrix phi0_map(const DualQuasiBialgebra& H);  // H → F(k)

Matrix psi2_map(const YDModule& U, const YDModule& V, const CotensorH& FU_FV);
Matrix psi2_inv_map(const YDModule& U, const YDModule& V, const CotensorH& FU_FV);

Matrix psi2G_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                 const Subspace& GM, const Subspace& GN, const Subspace& G_MN);
Matrix psi2G_inv_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                     const Subspace& GM, const Subspace& GN, const Subspace& G_MN,
                     const Matrix& S);

Matrix theta2_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                  const TensorOverH& MN_t, const Matrix& S);
Matrix theta2_inv_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                      const TensorOverH& MN_t);

Matrix kappa_map(const Trimodule& FU, const Trimodule& FV, const CotensorH& cot,
                 const TensorOverH& tens);  // = ϑ₂⁻¹ on F-images, by its own formula
Matrix kappa_inv_map(const Comodule& U, const Comodule& V, const CotensorH& cot,
                     const TensorOverH& tens);

/// c_{M,N}(m⊗_H n) = ω(m₋₂⊗τ(n₀)₋₁⊗n₁)(m₋₁⊳τ(n₀)₀ ⊗_H m₀)·n₂ (pre-braiding).
Matrix trimodule_braiding(const Trimodule& M, const Trimodule& N, const Matrix& S,
                          const TensorOverH& MN, const TensorOverH& NM);

// --- the adjunction (F, G) ---

/// η_V: V → G(F(V)) = (V⊗H)^coH, v ↦ v⊗1.
Matrix eta_map(const Comodule& V, const Subspace& coinv_FV);
/// ε_M: F(G(M)) = M^coH⊗H → M, x⊗h ↦ xh.
Matrix counit_map(const Trimodule& M, const Subspace& GM);
/// ε_M⁻¹: m ↦ τ(m₀)⊗m₁.
Matrix counit_inv_map(const Trimodule& M, const Subspace& GM, const Matrix& tauM);

/// G(M) for M in the four-structure category: coinvariants with the
/// restricted coaction and h⊳x = τ(hx).
struct CoinvariantYD {
  YDModule yd;
  Subspace emb;  // into M
};
CoinvariantYD yd_on_coinvariants(const Trimodule& M, const Matrix& S);

/// η always an isomorphism; with a preantipode also ε_M, with the displayed
/// inverse, and both are morphisms for every structure present.
Report adjunction_suite(const Comodule& V, const Trimodule& M, const Matrix* S);

}  // namespace qk
