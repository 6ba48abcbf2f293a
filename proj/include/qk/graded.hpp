#pragma once

#include "qk/bosonization.hpp"

namespace qk {

/// Pointedness certification: D = span(declared grouplikes) must be spanned by
/// honest grouplikes and its wedge filtration must exhaust A. Then the
/// coradical equals D; otherwise the filtration is only "declared".
struct CoradicalCertificate {
  bool certified = false;
  std::string note;
  Subspace coradical;
  Filtration filtration;  // valid only when certified
};

CoradicalCertificate certify_coradical(const DualQuasiBialgebra& A,
                                       const std::vector<Vec>& grouplikes);

struct GradedDQBResult {
  DualQuasiBialgebra gr;
  std::vector<int> degree;  // grades the new basis
  std::vector<Vec> reps;    // representatives inside A
  bool certified = false;   // coradical certified vs. user-declared filtration
};

/// gr A for a filtration that is an algebra filtration with layer 0 closed
/// under (m, u); preconditions are checked, with the failing inclusion as
/// witness in the thrown Error.
GradedDQBResult gr_dqb(const DualQuasiBialgebra& A, const Filtration& F, bool certified);

struct GrProjection {
  DualQuasiBialgebra H0;  // layer-0 dual quasi-subbialgebra
  Matrix sigma;           // H0 → gr
  Matrix pi;              // gr → H0
};

GrProjection gr_projection(const DualQuasiBialgebra& A, const GradedDQBResult& G);

}  // namespace qk
