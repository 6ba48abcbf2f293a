#pragma once

#include "qk/dqb.hpp"

namespace qk {

Report check_preantipode(const DualQuasiBialgebra& H, const Matrix& S);

struct PreantipodeSolution {
  Matrix S;
  int solution_space_dim = 0;  // dimension of the homogeneous solution space
};

/// Assembles the three defining conditions into one exact linear system of
/// shape (2n³ + n) × n² and solves it; none when the stacked system is
/// inconsistent. The representative is deterministic (free variables pinned
/// to zero in the fixed column order).
std::optional<PreantipodeSolution> solve_preantipode(const DualQuasiBialgebra& H);

/// Theorem consequences of a valid preantipode; failure here is an internal
/// error, not an input error, and the report says so.
Report check_derived_identities(const DualQuasiBialgebra& H, const Matrix& S);

struct QuasiHopfData {
  Matrix s;   // coalgebra anti-homomorphism
  Vec alpha;  // functionals H -> k as value vectors
  Vec beta;
};

Report check_quasi_hopf(const DualQuasiBialgebra& H, const QuasiHopfData& q);

/// For cocommutative H with preantipode S: the antipode s(h) = S(h₃)₁ ω[h₁ ⊗
/// S(h₃)₂ ⊗ h₂] with α = ε and β = εS. Throws unless H is cocommutative and S
/// passes check_preantipode.
QuasiHopfData cocommutative_to_hopf(const DualQuasiBialgebra& H, const Matrix& S);

/// β ∗ s as a matrix, (β∗s)(h) = β(h₁)s(h₂).
Matrix beta_conv_s(const DualQuasiBialgebra& H, const QuasiHopfData& q);

/// s(h₁)h₂ = ε(h)1 = h₁s(h₂) plus associativity of m; the ordinary Hopf
/// axioms that teo-style conversion promises.
Report check_ordinary_antipode(const DualQuasiBialgebra& H, const Matrix& s);

}  // namespace qk
