#include "qk/trimodule.hpp"

namespace qk {

Report check_trimodule(const Trimodule& M) {
  Report rep;
  rep.subject = "trimodule";
  const auto& H = *M.over;
  const Field& F = H.field();
  int n = H.dim(), d = M.dim;
  if (M.l_coaction.shape() != Index{d, n, d} || M.r_coaction.shape() != Index{d, d, n} ||
      M.r_action.shape() != Index{d, n, d})
    throw Error("trimodule: misshaped structure constants");
  if (M.l_action && M.l_action->shape() != Index{n, d, d})
    throw Error("trimodule: misshaped left action");

  auto Lm = [&](int k) { return M.label_legs(k); };
  const auto& hl = H.co.labels;
  const auto& ml = M.labels;

  {  // left comodule
    Expr lhs = Expr::identity_map(F, {{"m", d}});
    M.coactL(lhs, "m", "x", "m0");
    H.comul(lhs, "x", "a", "b");
    Expr rhs = Expr::identity_map(F, {{"m", d}});
    M.coactL(rhs, "m", "a", "mr");
    M.coactL(rhs, "mr", "b", "m0");
    rep.add(compare_maps("left coaction coassociative", lhs.extract({"m.in", "a", "b", "m0"}),
                         rhs.extract({"m.in", "a", "b", "m0"}), 1, Lm(1), {hl, hl, ml}));
    Expr ce = Expr::identity_map(F, {{"m", d}});
    M.coactL(ce, "m", "x", "m0");
    H.counit_weight(ce, "x");
    rep.add(compare_maps("left coaction counital", ce.extract({"m.in", "m0"}),
                         SparseTensor::identity(F, d), 1, Lm(1), Lm(1)));
  }
  {  // right comodule
    Expr lhs = Expr::identity_map(F, {{"m", d}});
    M.coactR(lhs, "m", "m0", "x");
    H.comul(lhs, "x", "a", "b");
    Expr rhs = Expr::identity_map(F, {{"m", d}});
    M.coactR(rhs, "m", "mr", "b");
    M.coactR(rhs, "mr", "m0", "a");
    rep.add(compare_maps("right coaction coassociative", lhs.extract({"m.in", "m0", "a", "b"}),
                         rhs.extract({"m.in", "m0", "a", "b"}), 1, Lm(1), {ml, hl, hl}));
    Expr ce = Expr::identity_map(F, {{"m", d}});
    M.coactR(ce, "m", "m0", "x");
    H.counit_weight(ce, "x");
    rep.add(compare_maps("right coaction counital", ce.extract({"m.in", "m0"}),
                         SparseTensor::identity(F, d), 1, Lm(1), Lm(1)));
  }
  {  // bicomodule compatibility
    Expr lhs = Expr::identity_map(F, {{"m", d}});
    M.coactR(lhs, "m", "mr", "y");
    M.coactL(lhs, "mr", "x", "m0");
    Expr rhs = Expr::identity_map(F, {{"m", d}});
    M.coactL(rhs, "m", "x", "mr");
    M.coactR(rhs, "mr", "m0", "y");
    rep.add(compare_maps("bicomodule", lhs.extract({"m.in", "x", "m0", "y"}),
                         rhs.extract({"m.in", "x", "m0", "y"}), 1, Lm(1), {hl, ml, hl}));
  }
  {  // μr is a bicomodule morphism
    Expr lhs = Expr::identity_map(F, {{"m", d}, {"h", n}});
    M.actR(lhs, "m", "h", "p");
    M.coactL(lhs, "p", "x", "p0");
    Expr rhs = Expr::identity_map(F, {{"m", d}, {"h", n}});
    M.coactL(rhs, "m", "mm", "m0");
    H.comul(rhs, "h", "h1", "h2");
    H.mul(rhs, "mm", "h1", "x");
    M.actR(rhs, "m0", "h2", "p0");
    rep.add(compare_maps("right action left colinear", lhs.extract({"m.in", "h.in", "x", "p0"}),
                         rhs.extract({"m.in", "h.in", "x", "p0"}), 2, {ml, hl}, {hl, ml}));

    Expr lhs2 = Expr::identity_map(F, {{"m", d}, {"h", n}});
    M.actR(lhs2, "m", "h", "p");
    M.coactR(lhs2, "p", "p0", "y");
    Expr rhs2 = Expr::identity_map(F, {{"m", d}, {"h", n}});
    M.coactR(rhs2, "m", "m0", "m1");
    H.comul(rhs2, "h", "h1", "h2");
    M.actR(rhs2, "m0", "h1", "p0");
    H.mul(rhs2, "m1", "h2", "y");
    rep.add(compare_maps("right action right colinear", lhs2.extract({"m.in", "h.in", "p0", "y"}),
                         rhs2.extract({"m.in", "h.in", "p0", "y"}), 2, {ml, hl}, {ml, hl}));
  }
  {  // quasi-associativity of the right action
    Expr lhs = Expr::identity_map(F, {{"m", d}, {"h", n}, {"l", n}});
    M.actR(lhs, "m", "h", "mh");
    M.actR(lhs, "mh", "l", "res");
    Expr rhs = Expr::identity_map(F, {{"m", d}, {"h", n}, {"l", n}});
    M.coactL(rhs, "m", "mm", "ma");
    M.coactR(rhs, "ma", "m0", "m1");
    H.comul(rhs, "h", "h1", "hr");
    H.comul(rhs, "hr", "h2", "h3");
    H.comul(rhs, "l", "l1", "lr");
    H.comul(rhs, "lr", "l2", "l3");
    rhs.weight(H.omega_inv.values, {"mm", "h1", "l1"}, {0, 1, 2});
    H.mul(rhs, "h2", "l2", "hl");
    M.actR(rhs, "m0", "hl", "res");
    H.omega_weight(rhs, "m1", "h3", "l3");
    rep.add(compare_maps("right action quasi-associative",
                         lhs.extract({"m.in", "h.in", "l.in", "res"}),
                         rhs.extract({"m.in", "h.in", "l.in", "res"}), 3, {ml, hl, hl}, Lm(1)));

    SparseTensor unit_act = contract(H.unit_tensor(), M.r_action, {{0, 1}});
    rep.add(compare_maps("right action unital", unit_act, SparseTensor::identity(F, d), 1, Lm(1),
                         Lm(1)));
  }
  if (M.four()) {
    {  // μl bicomodule morphism
      Expr lhs = Expr::identity_map(F, {{"h", n}, {"m", d}});
      M.actL(lhs, "h", "m", "p");
      M.coactL(lhs, "p", "x", "p0");
      Expr rhs = Expr::identity_map(F, {{"h", n}, {"m", d}});
      H.comul(rhs, "h", "h1", "h2");
      M.coactL(rhs, "m", "mm", "m0");
      H.mul(rhs, "h1", "mm", "x");
      M.actL(rhs, "h2", "m0", "p0");
      rep.add(compare_maps("left action left colinear", lhs.extract({"h.in", "m.in", "x", "p0"}),
                           rhs.extract({"h.in", "m.in", "x", "p0"}), 2, {hl, ml}, {hl, ml}));
      Expr lhs2 = Expr::identity_map(F, {{"h", n}, {"m", d}});
      M.actL(lhs2, "h", "m", "p");
      M.coactR(lhs2, "p", "p0", "y");
      Expr rhs2 = Expr::identity_map(F, {{"h", n}, {"m", d}});
      H.comul(rhs2, "h", "h1", "h2");
      M.coactR(rhs2, "m", "m0", "m1");
      M.actL(rhs2, "h1", "m0", "p0");
      H.mul(rhs2, "h2", "m1", "y");
      rep.add(compare_maps("left action right colinear",
                           lhs2.extract({"h.in", "m.in", "p0", "y"}),
                           rhs2.extract({"h.in", "m.in", "p0", "y"}), 2, {hl, ml}, {ml, hl}));
    }
    {  // left quasi-associativity
      Expr lhs = Expr::identity_map(F, {{"h", n}, {"k", n}, {"m", d}});
      H.mul(lhs, "h", "k", "hk");
      M.actL(lhs, "hk", "m", "res");
      Expr rhs = Expr::identity_map(F, {{"h", n}, {"k", n}, {"m", d}});
      H.comul(rhs, "h", "h1", "hr");
      H.comul(rhs, "hr", "h2", "h3");
      H.comul(rhs, "k", "k1", "kr");
      H.comul(rhs, "kr", "k2", "k3");
      M.coactL(rhs, "m", "mm", "ma");
      M.coactR(rhs, "ma", "m0", "m1");
      rhs.weight(H.omega_inv.values, {"h1", "k1", "mm"}, {0, 1, 2});
      M.actL(rhs, "k2", "m0", "km");
      M.actL(rhs, "h2", "km", "res");
      H.omega_weight(rhs, "h3", "k3", "m1");
      rep.add(compare_maps("left action quasi-associative",
                           lhs.extract({"h.in", "k.in", "m.in", "res"}),
                           rhs.extract({"h.in", "k.in", "m.in", "res"}), 3, {hl, hl, ml}, Lm(1)));
      SparseTensor unit_act = contract(H.unit_tensor(), *M.l_action, {{0, 0}});
      rep.add(compare_maps("left action unital", unit_act, SparseTensor::identity(F, d), 1,
                           Lm(1), Lm(1)));
    }
    {  // (eq bimodule)
      Expr lhs = Expr::identity_map(F, {{"h", n}, {"m", d}, {"l", n}});
      M.actL(lhs, "h", "m", "hm");
      M.actR(lhs, "hm", "l", "res");
      Expr rhs = Expr::identity_map(F, {{"h", n}, {"m", d}, {"l", n}});
      H.comul(rhs, "h", "h1", "hr");
      H.comul(rhs, "hr", "h2", "h3");
      H.comul(rhs, "l", "l1", "lr");
      H.comul(rhs, "lr", "l2", "l3");
      M.coactL(rhs, "m", "mm", "ma");
      M.coactR(rhs, "ma", "m0", "m1");
      rhs.weight(H.omega_inv.values, {"h1", "mm", "l1"}, {0, 1, 2});
      M.actR(rhs, "m0", "l2", "ml");
      M.actL(rhs, "h2", "ml", "res");
      H.omega_weight(rhs, "h3", "m1", "l3");
      rep.add(compare_maps("bimodule compatibility",
                           lhs.extract({"h.in", "m.in", "l.in", "res"}),
                           rhs.extract({"h.in", "m.in", "l.in", "res"}), 3, {hl, ml, hl}, Lm(1)));
    }
  }
  return rep;
}

namespace {
std::vector<std::string> pair_labels(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "#" + y);
  return out;
}
}  // namespace

Trimodule F_build(const Comodule& V) {
  const auto& H = *V.over;
  const Field& F = H.field();
  int n = H.dim(), dv = V.dim;
  Trimodule M;
  M.over = V.over;
  M.dim = dv * n;
  M.labels = pair_labels(V.labels, H.co.labels);
  {  // ρl(v⊗h) = v₋₁h₁ ⊗ (v₀⊗h₂)
    Expr e = Expr::identity_map(F, {{"v", dv}, {"h", n}});
    V.coact(e, "v", "vm", "v0");
    H.comul(e, "h", "h1", "h2");
    H.mul(e, "vm", "h1", "x");
    SparseTensor t = e.extract({"v.in", "h.in", "x", "v0", "h2"});
    M.l_coaction = fuse_axes(fuse_axes(t, 0, 2), 2, 2);
  }
  {  // ρr(v⊗h) = (v⊗h₁) ⊗ h₂
    Expr e = Expr::identity_map(F, {{"v", dv}, {"h", n}});
    H.comul(e, "h", "h1", "h2");
    SparseTensor t = e.extract({"v.in", "h.in", "v", "h1", "h2"});
    M.r_coaction = fuse_axes(fuse_axes(t, 0, 2), 1, 2);
  }
  {  // (v⊗h)·l = ω⁻¹(v₋₁⊗h₁⊗l₁) v₀ ⊗ h₂l₂
    Expr e = Expr::identity_map(F, {{"v", dv}, {"h", n}, {"l", n}});
    V.coact(e, "v", "vm", "v0");
    H.comul(e, "h", "h1", "h2");
    H.comul(e, "l", "l1", "l2");
    e.weight(H.omega_inv.values, {"vm", "h1", "l1"}, {0, 1, 2});
    H.mul(e, "h2", "l2", "hl");
    SparseTensor t = e.extract({"v.in", "h.in", "l.in", "v0", "hl"});
    M.r_action = fuse_axes(fuse_axes(t, 0, 2), 2, 2);
  }
  return M;
}

Trimodule F_build(const YDModule& V) {
  Trimodule M = F_build(V.com);
  const auto& H = *V.over();
  const Field& F = H.field();
  int n = H.dim(), dv = V.dim();
  // l·(v⊗h) = ω(l₁⊗v₋₁⊗h₁) ω⁻¹((l₂⊳v₀)₋₁⊗l₃⊗h₂) (l₂⊳v₀)₀ ⊗ l₄h₃
  Expr e = Expr::identity_map(F, {{"l", n}, {"v", dv}, {"h", n}});
  H.comul(e, "l", "l1", "la");
  H.comul(e, "la", "l2", "lb");
  H.comul(e, "lb", "l3", "l4");
  H.comul(e, "h", "h1", "ha");
  H.comul(e, "ha", "h2", "h3");
  V.coact(e, "v", "vm", "v0");
  H.omega_weight(e, "l1", "vm", "h1");
  V.act(e, "l2", "v0", "w");
  V.coact(e, "w", "wm", "w0");
  e.weight(H.omega_inv.values, {"wm", "l3", "h2"}, {0, 1, 2});
  H.mul(e, "l4", "h3", "lh");
  SparseTensor t = e.extract({"l.in", "v.in", "h.in", "w0", "lh"});
  M.l_action = fuse_axes(fuse_axes(t, 1, 2), 2, 2);
  return M;
}

Matrix F_on_morphism(const Matrix& f, const DualQuasiBialgebra& H) {
  int n = H.dim();
  Matrix m(f.field(), f.rows() * n, f.cols() * n);
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      if (f.at(i, j).is_zero()) continue;
      for (int h = 0; h < n; ++h) m.at(i * n + h, j * n + h) = f.at(i, j);
    }
  return m;
}

Trimodule regular_trimodule(const DualQuasiBialgebra* H) {
  Trimodule M;
  M.over = H;
  M.dim = H->dim();
  M.labels = H->co.labels;
  M.l_coaction = H->co.delta;
  M.r_coaction = H->co.delta;
  M.r_action = H->mult;
  M.l_action = H->mult;
  return M;
}

Subspace coinvariants(const Trimodule& M) {
  const auto& H = *M.over;
  int n = H.dim(), d = M.dim;
  Matrix A(H.field(), d * n, d);
  for (const auto& [k, v] : M.r_coaction.entries()) A.at(k[1] * n + k[2], k[0]) += v;
  for (int m = 0; m < d; ++m)
    for (int h = 0; h < n; ++h) A.at(m * n + h, m) -= H.unit[h];
  return Subspace::span(H.field(), d, kernel_basis(A));
}

Matrix tau_map(const Trimodule& M, const Matrix& S) {
  const auto& H = *M.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"m", M.dim}});
  M.coactR(e, "m", "ma", "m2");
  M.coactR(e, "ma", "mb", "m1");
  M.coactL(e, "mb", "mm", "m0");
  e.apply(S.to_map_tensor(), {"m1"}, {0}, {"sm"});
  H.comul(e, "sm", "s1", "s2");
  H.omega_weight(e, "mm", "s1", "m2");
  M.actR(e, "m0", "s2", "out");
  return Matrix::from_map_tensor(e.extract({"m.in", "out"}));
}

TauLaws tau_laws(const Trimodule& M, const Matrix& p) {
  const auto& H = *M.over;
  const Field& F = H.field();
  int n = H.dim(), d = M.dim;
  TauLaws laws;
  SparseTensor pt = p.to_map_tensor();

  Subspace coin = coinvariants(M);
  laws.image_coinvariant = true;
  for (int j = 0; j < d; ++j) {
    Vec col(d, Scalar::zero(F));
    for (int i = 0; i < d; ++i) col[i] = p.at(i, j);
    if (!coin.contains(col)) laws.image_coinvariant = false;
  }
  {  // (Tau mh)
    Expr lhs = Expr::identity_map(F, {{"m", d}, {"h", n}});
    M.actR(lhs, "m", "h", "mh");
    lhs.apply(pt, {"mh"}, {0}, {"res"});
    Expr rhs = Expr::identity_map(F, {{"m", d}, {"h", n}});
    M.coactR(rhs, "m", "m0", "m1");
    rhs.apply(pt, {"m0"}, {0}, {"t"});
    M.coactL(rhs, "t", "tm", "res");
    rhs.weight(H.omega_inv.values, {"tm", "m1", "h"}, {0, 1, 2});
    laws.tau_mh = lhs.extract({"m.in", "h.in", "res"}) == rhs.extract({"m.in", "h.in", "res"});
  }
  {  // (col sx eps)
    Expr lhs = Expr::identity_map(F, {{"m", d}});
    M.coactL(lhs, "m", "x", "m0");
    lhs.apply(pt, {"m0"}, {0}, {"t"});
    Expr rhs = Expr::identity_map(F, {{"m", d}});
    M.coactR(rhs, "m", "m0", "m1");
    rhs.apply(pt, {"m0"}, {0}, {"ta"});
    M.coactL(rhs, "ta", "tm", "t");
    H.mul(rhs, "tm", "m1", "x");
    laws.col_sx_eps = lhs.extract({"m.in", "x", "t"}) == rhs.extract({"m.in", "x", "t"});
  }
  {  // (inv eps)
    Expr lhs = Expr::identity_map(F, {{"m", d}});
    M.coactR(lhs, "m", "m0", "m1");
    lhs.apply(pt, {"m0"}, {0}, {"t"});
    M.actR(lhs, "t", "m1", "res");
    laws.inv_eps =
        lhs.extract({"m.in", "res"}) == Expr::identity_map(F, {{"m", d}}).extract({"m.in", "m"});
  }
  {  // (Tau mh simple) quantified over the coinvariant basis
    laws.tau_mh_simple = true;
    for (const auto& x : coin.basis())
      for (int h = 0; h < n; ++h) {
        Expr e = Expr::one_hot(F, {{"h", n}}, {h});
        e.append(from_vector(F, x), "m");
        M.actR(e, "m", "h", "mh");
        e.apply(pt, {"mh"}, {0}, {"res"});
        Vec got = to_vector(e.extract({"res"}));
        Vec want(d, Scalar::zero(F));
        for (int i = 0; i < d; ++i) want[i] = x[i] * H.co.counit[h];
        if (got != want) laws.tau_mh_simple = false;
      }
  }
  laws.idempotent = (p * p) == p;
  return laws;
}

Report check_tau(const Trimodule& M, const Matrix& S) {
  Report rep;
  rep.subject = "tau projector";
  Matrix t = tau_map(M, S);
  TauLaws laws = tau_laws(M, t);
  auto put = [&](const char* name, bool ok) {
    if (ok)
      rep.pass(name);
    else
      rep.fail(name, "law violated");
  };
  put("image in coinvariants", laws.image_coinvariant);
  put("Tau mh", laws.tau_mh);
  put("col sx eps", laws.col_sx_eps);
  put("inv eps", laws.inv_eps);
  put("Tau mh simple", laws.tau_mh_simple);
  put("idempotent", laws.idempotent);
  return rep;
}

}  // namespace qk
