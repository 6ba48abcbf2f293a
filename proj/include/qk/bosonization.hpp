#pragma once

#include "qk/hopfmod.hpp"

namespace qk {

/// R#H with the canonical projection maps. Basis of B is r#h, row-major.
struct Bosonization {
  DualQuasiBialgebra B;
  Matrix sigma;  // H → B, h ↦ 1_R#h
  Matrix pi;     // B → H, r#h ↦ ε_R(r)h
};

/// Throws when R fails the braided-bialgebra axioms over H (with the failing
/// check in the message); the output is verified against the full axiom suite.
Bosonization bosonize(const DualQuasiBialgebra& H, const BraidedBialgebra& R);

struct ProjectionData {
  const DualQuasiBialgebra* A = nullptr;
  const DualQuasiBialgebra* H = nullptr;
  Matrix sigma;  // H → A
  Matrix pi;     // A → H
};

Report check_projection(const ProjectionData& p);

/// A as an object of the four-structure category: ρʳ(a) = a₁⊗π(a₂),
/// ρˡ(a) = π(a₁)⊗a₂, a·h = aσ(h), h·a = σ(h)a.
Trimodule projection_trimodule(const ProjectionData& p);

/// τ(a) = ω_A[a₁⊗σSπ(a₃)₁⊗a₄] a₂σSπ(a₃)₂ (the generic τ of the trimodule).
Matrix split_tau(const ProjectionData& p, const Matrix& S);

struct SplitResult {
  BraidedBialgebra R;  // carrier = coinvariant coordinates
  Subspace coinv;      // embedding of R into A
  Matrix iso;          // ε_A: R⊗H → A, r⊗h ↦ rσ(h)
  Matrix iso_inv;      // a ↦ τ(a₁)⊗π(a₂)
};

SplitResult split(const ProjectionData& p, const Matrix& S);

}  // namespace qk
