#pragma once

#include "qk/yd.hpp"

namespace qk {

/// Cocycle-crossed G-module: a G-graded space with a θ-twisted action.
/// action[g] is the matrix of g▸(-) in the module basis.
struct CrossedGModule {
  const GroupCocycleData* group = nullptr;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> grade;         // basis index -> group element
  std::vector<Matrix> action;     // per group element

  std::vector<std::vector<std::string>> label_legs(int count) const {
    return std::vector<std::vector<std::string>>(count, labels);
  }
};

Report crossed_check(const CrossedGModule& V);

/// The category isomorphism with Yetter–Drinfeld modules over the cocycle
/// group algebra (which must be from_group_cocycle(*V.group)).
YDModule crossed_to_yd(const CrossedGModule& V, const DualQuasiBialgebra* ktG);

/// Requires every basis vector homogeneous (ρ(v) = g⊗v); rejects otherwise,
/// naming the offending basis vector.
CrossedGModule yd_to_crossed(const YDModule& W, const GroupCocycleData* group);

/// (V⊗W)_g = ⊕_h V_h⊗W_{h⁻¹g}; h▸(v⊗w) carries the θ ratio.
CrossedGModule crossed_tensor(const CrossedGModule& V, const CrossedGModule& W);

/// c(v⊗w) = (g▸w)⊗v for v ∈ V_g.
Matrix crossed_braiding(const CrossedGModule& V, const CrossedGModule& W);

bool crossed_equal(const CrossedGModule& a, const CrossedGModule& b);

}  // namespace qk
