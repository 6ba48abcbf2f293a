#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/sweedler.hpp"

namespace qk {

int flatten(const Index& idx, const Index& shape);
Index unflatten(int flat, const Index& shape);

/// Coalgebra by structure constants: Δ(e_i) = Σ_jk delta[i,j,k] e_j⊗e_k.
struct Coalgebra {
  Field field;
  int dim = 0;
  std::vector<std::string> labels;
  SparseTensor delta;  // shape (n, n, n)
  Vec counit;

  const std::string& label(int i) const { return labels[i]; }
  std::vector<std::vector<std::string>> label_legs(int count) const;

  // Sweedler-calculus steps on an Expr leg living in this coalgebra.
  void comul(Expr& e, const std::string& leg, const std::string& l1, const std::string& l2) const;
  void counit_weight(Expr& e, const std::string& leg) const;
};

Coalgebra group_like_coalgebra(Field f, const std::vector<std::string>& labels);

Report check_coalgebra(const Coalgebra& C);

/// k-linear functional H^{⊗r} → k, stored as its value tensor.
struct Functional {
  int arity = 0;
  SparseTensor values;  // shape n^r
};

Functional counit_power(const Coalgebra& C, int r);
Functional convolve(const Coalgebra& C, const Functional& f, const Functional& g);
std::optional<Functional> convolution_inverse(const Coalgebra& C, const Functional& f);

bool verify_grouplike(const Coalgebra& C, const Vec& a);
std::vector<Vec> find_basis_grouplikes(const Coalgebra& C);

bool is_subcoalgebra(const Coalgebra& C, const Subspace& D);

struct Filtration {
  std::vector<Subspace> layers;  // ascending; layers.back() is the full space
  int top_degree() const { return (int)layers.size() - 1; }
};

/// A₀ = D, A_{n+1} = Δ⁻¹(A⊗A_n + A₀⊗A). Returns none when the iteration
/// stabilizes below the full space within dim(A) steps. Throws when D is not
/// a subcoalgebra.
std::optional<Filtration> wedge_filtration(const Coalgebra& C, const Subspace& D);

/// Consistency of a filtration with Δ: Δ(A_n) ⊆ Σ_{i+j=n} A_i⊗A_j.
Report check_filtration(const Coalgebra& C, const Filtration& F);

/// gr C with the echelon-complement representatives; degree[i] grades the new
/// basis, reps[i] is the representative inside C.
struct GradedCoalgebra {
  Coalgebra co;
  std::vector<int> degree;
  std::vector<Vec> reps;
};

GradedCoalgebra graded_coalgebra(const Coalgebra& C, const Filtration& F);

std::string vec_str(const Coalgebra& C, const Vec& v);

}  // namespace qk
