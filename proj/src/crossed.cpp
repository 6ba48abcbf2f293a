#include "qk/crossed.hpp"

namespace qk {

namespace {
int conj(const GroupCocycleData& G, int h, int g, const std::vector<int>& inv) {
  return G.mul[G.mul[h][g]][inv[h]];  // hgh⁻¹
}
}  // namespace

Report crossed_check(const CrossedGModule& V) {
  Report rep;
  rep.subject = "crossed (G,theta)-module";
  const auto& G = *V.group;
  auto inv = G.inverse_table();
  if (!inv) throw Error("crossed module: the underlying monoid is not a group");
  const Field& F = G.field;
  int o = G.order, d = V.dim;
  if ((int)V.grade.size() != d || (int)V.action.size() != o)
    throw Error("crossed module: misshaped data");

  {  // (form:CrossedComp) h▸V_g ⊆ V_{hgh⁻¹}
    bool ok = true;
    std::string wit;
    for (int h = 0; h < o && ok; ++h)
      for (int j = 0; j < d && ok; ++j) {
        int target = conj(G, h, V.grade[j], *inv);
        for (int i = 0; i < d; ++i)
          if (!V.action[h].at(i, j).is_zero() && V.grade[i] != target) {
            ok = false;
            wit = "g" + std::to_string(h) + " acting on " + V.labels[j];
            break;
          }
      }
    if (ok)
      rep.pass("CrossedComp");
    else
      rep.fail("CrossedComp", wit);
  }
  {  // (form:CrossedUnit)
    if (V.action[0].is_identity())
      rep.pass("CrossedUnit");
    else
      rep.fail("CrossedUnit", "identity element acts nontrivially");
  }
  {  // (form:CrossedAss) with the θ ratio
    bool ok = true;
    std::string wit;
    for (int h = 0; h < o && ok; ++h)
      for (int l = 0; l < o && ok; ++l)
        for (int j = 0; j < d && ok; ++j) {
          int g = V.grade[j];
          int lgl = conj(G, l, g, *inv);
          int hlgl = conj(G, h, lgl, *inv);
          Scalar ratio = G.theta_at(hlgl, h, l) * G.theta_at(h, l, g) / G.theta_at(h, lgl, l);
          Vec lv(d, Scalar::zero(F));
          for (int i = 0; i < d; ++i) lv[i] = V.action[l].at(i, j);
          Vec lhs = V.action[h].apply(lv);
          Vec rhs(d, Scalar::zero(F));
          int hl = G.mul[h][l];
          for (int i = 0; i < d; ++i) rhs[i] = ratio * V.action[hl].at(i, j);
          if (lhs != rhs) {
            ok = false;
            wit = "(g" + std::to_string(h) + ",g" + std::to_string(l) + "," + V.labels[j] + ")";
          }
        }
    if (ok)
      rep.pass("CrossedAss");
    else
      rep.fail("CrossedAss", wit);
  }
  return rep;
}

YDModule crossed_to_yd(const CrossedGModule& V, const DualQuasiBialgebra* ktG) {
  const auto& G = *V.group;
  const Field& F = G.field;
  if (ktG->dim() != G.order) throw Error("crossed_to_yd: base algebra order mismatch");
  YDModule W;
  W.com.over = ktG;
  W.com.dim = V.dim;
  W.com.labels = V.labels;
  W.com.coaction = SparseTensor(F, {V.dim, G.order, V.dim});
  for (int v = 0; v < V.dim; ++v) W.com.coaction.set({v, V.grade[v], v}, Scalar::one(F));
  W.action = SparseTensor(F, {G.order, V.dim, V.dim});
  for (int h = 0; h < G.order; ++h)
    for (int j = 0; j < V.dim; ++j)
      for (int i = 0; i < V.dim; ++i)
        if (!V.action[h].at(i, j).is_zero()) W.action.set({h, j, i}, V.action[h].at(i, j));
  return W;
}

CrossedGModule yd_to_crossed(const YDModule& W, const GroupCocycleData* group) {
  const Field& F = group->field;
  int o = group->order, d = W.dim();
  if (W.over()->dim() != o) throw Error("yd_to_crossed: base algebra order mismatch");
  CrossedGModule V;
  V.group = group;
  V.dim = d;
  V.labels = W.com.labels;
  V.grade.assign(d, -1);
  for (int v = 0; v < d; ++v) {
    // homogeneity: ρ(e_v) = g⊗e_v for exactly one g
    int g = -1;
    for (const auto& [k, val] : W.com.coaction.entries()) {
      if (k[0] != v) continue;
      if (k[2] != v || !val.is_one() || g >= 0) {
        throw Error("yd_to_crossed: coaction of basis vector '" + W.com.labels[v] +
                    "' is not group-homogeneous");
      }
      g = k[1];
    }
    if (g < 0) throw Error("yd_to_crossed: basis vector '" + W.com.labels[v] + "' has no coaction");
    V.grade[v] = g;
  }
  for (int h = 0; h < o; ++h) {
    Matrix m(F, d, d);
    for (const auto& [k, val] : W.action.entries())
      if (k[0] == h) m.at(k[2], k[1]) = val;
    V.action.push_back(std::move(m));
  }
  return V;
}

CrossedGModule crossed_tensor(const CrossedGModule& V, const CrossedGModule& W) {
  if (V.group != W.group) throw Error("crossed_tensor: different groups");
  const auto& G = *V.group;
  auto inv = *G.inverse_table();
  const Field& F = G.field;
  CrossedGModule T;
  T.group = V.group;
  T.dim = V.dim * W.dim;
  for (int i = 0; i < V.dim; ++i)
    for (int j = 0; j < W.dim; ++j) {
      T.labels.push_back(V.labels[i] + "*" + W.labels[j]);
      T.grade.push_back(G.mul[V.grade[i]][W.grade[j]]);
    }
  for (int h = 0; h < G.order; ++h) {
    Matrix m(F, T.dim, T.dim);
    for (int i = 0; i < V.dim; ++i)
      for (int j = 0; j < W.dim; ++j) {
        int g = V.grade[i], l = W.grade[j];
        int hgh = conj(G, h, g, inv), hlh = conj(G, h, l, inv);
        Scalar ratio = G.theta_at(hgh, hlh, h) * G.theta_at(h, g, l) / G.theta_at(hgh, h, l);
        for (int i2 = 0; i2 < V.dim; ++i2) {
          if (V.action[h].at(i2, i).is_zero()) continue;
          for (int j2 = 0; j2 < W.dim; ++j2) {
            if (W.action[h].at(j2, j).is_zero()) continue;
            m.at(i2 * W.dim + j2, i * W.dim + j) =
                ratio * V.action[h].at(i2, i) * W.action[h].at(j2, j);
          }
        }
      }
    T.action.push_back(std::move(m));
  }
  return T;
}

Matrix crossed_braiding(const CrossedGModule& V, const CrossedGModule& W) {
  if (V.group != W.group) throw Error("crossed_braiding: different groups");
  const Field& F = V.group->field;
  Matrix c(F, W.dim * V.dim, V.dim * W.dim);
  for (int i = 0; i < V.dim; ++i) {
    int g = V.grade[i];
    for (int j = 0; j < W.dim; ++j)
      for (int j2 = 0; j2 < W.dim; ++j2)
        if (!W.action[g].at(j2, j).is_zero())
          c.at(j2 * V.dim + i, i * W.dim + j) = W.action[g].at(j2, j);
  }
  return c;
}

bool crossed_equal(const CrossedGModule& a, const CrossedGModule& b) {
  if (a.dim != b.dim || a.grade != b.grade) return false;
  const auto &ga = *a.group, &gb = *b.group;
  if (ga.order != gb.order || ga.mul != gb.mul || !(ga.theta == gb.theta)) return false;
  for (std::size_t i = 0; i < a.action.size(); ++i)
    if (!(a.action[i] == b.action[i])) return false;
  return true;
}

}  // namespace qk
