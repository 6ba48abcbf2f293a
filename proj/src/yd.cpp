#include "qk/yd.hpp"

namespace qk {

Comodule Comodule::trivial(const DualQuasiBialgebra* H) {
  Comodule V;
  V.over = H;
  V.dim = 1;
  V.labels = {"1"};
  V.coaction = SparseTensor(H->field(), {1, H->dim(), 1});
  for (int h = 0; h < H->dim(); ++h)
    if (!H->unit[h].is_zero()) V.coaction.set({0, h, 0}, H->unit[h]);
  return V;
}

YDModule YDModule::trivial(const DualQuasiBialgebra* H) {
  YDModule V;
  V.com = Comodule::trivial(H);
  V.action = SparseTensor(H->field(), {H->dim(), 1, 1});
  for (int h = 0; h < H->dim(); ++h)
    if (!H->co.counit[h].is_zero()) V.action.set({h, 0, 0}, H->co.counit[h]);
  return V;
}

Report check_comodule(const Comodule& V) {
  Report rep;
  rep.subject = "comodule";
  const auto& H = *V.over;
  const Field& F = H.field();
  if (V.coaction.shape() != Index{V.dim, H.dim(), V.dim})
    throw Error("comodule: coaction misshaped");
  auto Lv = [&](int k) { return V.label_legs(k); };

  Expr lhs = Expr::identity_map(F, {{"v", V.dim}});
  V.coact(lhs, "v", "hm", "v0");
  H.comul(lhs, "hm", "a", "b");
  Expr rhs = Expr::identity_map(F, {{"v", V.dim}});
  V.coact(rhs, "v", "a", "vr");
  V.coact(rhs, "vr", "b", "v0");
  std::vector<std::vector<std::string>> out = {H.co.labels, H.co.labels, V.labels};
  rep.add(compare_maps("coaction coassociative", lhs.extract({"v.in", "a", "b", "v0"}),
                       rhs.extract({"v.in", "a", "b", "v0"}), 1, Lv(1), out));

  Expr ce = Expr::identity_map(F, {{"v", V.dim}});
  V.coact(ce, "v", "hm", "v0");
  H.counit_weight(ce, "hm");
  SparseTensor id = Expr::identity_map(F, {{"v", V.dim}}).extract({"v.in", "v"});
  rep.add(compare_maps("coaction counital", ce.extract({"v.in", "v0"}), id, 1, Lv(1), Lv(1)));
  return rep;
}

Comodule comodule_tensor(const Comodule& V, const Comodule& W) {
  if (V.over != W.over) throw Error("comodule_tensor: different bases");
  const auto& H = *V.over;
  Comodule T;
  T.over = V.over;
  T.dim = V.dim * W.dim;
  for (int i = 0; i < V.dim; ++i)
    for (int j = 0; j < W.dim; ++j) T.labels.push_back(V.labels[i] + "*" + W.labels[j]);
  Expr e = Expr::identity_map(H.field(), {{"v", V.dim}, {"w", W.dim}});
  V.coact(e, "v", "vm", "v0");
  W.coact(e, "w", "wm", "w0");
  H.mul(e, "vm", "wm", "hm");
  SparseTensor t = e.extract({"v.in", "w.in", "hm", "v0", "w0"});
  T.coaction = fuse_axes(fuse_axes(t, 0, 2), 2, 2);
  return T;
}

Report check_yd(const YDModule& V) {
  Report rep;
  rep.subject = "Yetter-Drinfeld module";
  const auto& H = *V.over();
  const Field& F = H.field();
  int n = H.dim(), d = V.dim();
  if (V.action.shape() != Index{n, d, d}) throw Error("yd: action misshaped");
  rep.merge(check_comodule(V.com), "comodule");

  std::vector<std::string> vl = V.com.labels;

  {  // (unitYD) 1_H ⊳ v = v
    SparseTensor one_act = contract(H.unit_tensor(), V.action, {{0, 0}});
    rep.add(compare_maps("unitYD", one_act, SparseTensor::identity(F, d), 1, {vl}, {vl}));
  }
  {  // (Comp YD) (h₁⊳v)₋₁h₂ ⊗ (h₁⊳v)₀ = h₁v₋₁ ⊗ (h₂⊳v₀)
    Expr lhs = Expr::identity_map(F, {{"h", n}, {"v", d}});
    H.comul(lhs, "h", "h1", "h2");
    V.act(lhs, "h1", "v", "w");
    V.coact(lhs, "w", "wm", "w0");
    H.mul(lhs, "wm", "h2", "x");
    Expr rhs = Expr::identity_map(F, {{"h", n}, {"v", d}});
    H.comul(rhs, "h", "h1", "h2");
    V.coact(rhs, "v", "vm", "v0");
    H.mul(rhs, "h1", "vm", "x");
    V.act(rhs, "h2", "v0", "w0");
    std::vector<std::vector<std::string>> in = {H.co.labels, vl}, out = {H.co.labels, vl};
    rep.add(compare_maps("Comp YD", lhs.extract({"h.in", "v.in", "x", "w0"}),
                         rhs.extract({"h.in", "v.in", "x", "w0"}), 2, in, out));
  }
  {  // (ass YD)
    Expr lhs = Expr::identity_map(F, {{"h", n}, {"l", n}, {"v", d}});
    H.mul(lhs, "h", "l", "hl");
    V.act(lhs, "hl", "v", "res");
    Expr rhs = Expr::identity_map(F, {{"h", n}, {"l", n}, {"v", d}});
    H.comul(rhs, "h", "h1", "hA");
    H.comul(rhs, "hA", "h2", "hB");
    H.comul(rhs, "hB", "h3", "h4");
    H.comul(rhs, "l", "l1", "lA");
    H.comul(rhs, "lA", "l2", "lB");
    H.comul(rhs, "lB", "l3", "l4");
    V.coact(rhs, "v", "vm", "v0");
    rhs.weight(H.omega_inv.values, {"h1", "l1", "vm"}, {0, 1, 2});
    V.act(rhs, "l2", "v0", "w");
    V.coact(rhs, "w", "wm", "w0");
    H.omega_weight(rhs, "h2", "wm", "l3");
    V.act(rhs, "h3", "w0", "z");
    V.coact(rhs, "z", "zm", "res");
    rhs.weight(H.omega_inv.values, {"zm", "h4", "l4"}, {0, 1, 2});
    std::vector<std::vector<std::string>> in = {H.co.labels, H.co.labels, vl};
    rep.add(compare_maps("ass YD", lhs.extract({"h.in", "l.in", "v.in", "res"}),
                         rhs.extract({"h.in", "l.in", "v.in", "res"}), 3, in, {vl}));
  }
  return rep;
}

YDModule yd_tensor(const YDModule& V, const YDModule& W) {
  if (V.over() != W.over()) throw Error("yd_tensor: modules over different bases");
  const auto& H = *V.over();
  const Field& F = H.field();
  int n = H.dim(), dv = V.dim(), dw = W.dim();

  YDModule T;
  T.com.over = V.over();
  T.com.dim = dv * dw;
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j)
      T.com.labels.push_back(V.com.labels[i] + "*" + W.com.labels[j]);

  {  // ρ(v⊗w) = v₋₁w₋₁ ⊗ v₀ ⊗ w₀
    Expr e = Expr::identity_map(F, {{"v", dv}, {"w", dw}});
    V.coact(e, "v", "vm", "v0");
    W.coact(e, "w", "wm", "w0");
    H.mul(e, "vm", "wm", "hm");
    SparseTensor t = e.extract({"v.in", "w.in", "hm", "v0", "w0"});
    t = fuse_axes(t, 0, 2);   // (vw.in, hm, v0, w0)
    t = fuse_axes(t, 2, 2);   // (vw.in, hm, vw)
    T.com.coaction = t;
  }
  {  // (form:YDtens) action
    Expr e = Expr::identity_map(F, {{"h", n}, {"v", dv}, {"w", dw}});
    H.comul(e, "h", "h1", "hA");
    H.comul(e, "hA", "h2", "hB");
    H.comul(e, "hB", "h3", "hC");
    H.comul(e, "hC", "h4", "h5");
    V.coact(e, "v", "vm", "v0");
    W.coact(e, "w", "wm2", "wr");
    W.coact(e, "wr", "wm1", "w0");
    H.omega_weight(e, "h1", "vm", "wm2");
    V.act(e, "h2", "v0", "a");
    V.coact(e, "a", "am2", "ar");
    V.coact(e, "ar", "am1", "a0");
    e.weight(H.omega_inv.values, {"am2", "h3", "wm1"}, {0, 1, 2});
    W.act(e, "h4", "w0", "b");
    W.coact(e, "b", "bm1", "b0");
    H.omega_weight(e, "am1", "bm1", "h5");
    SparseTensor t = e.extract({"h.in", "v.in", "w.in", "a0", "b0"});
    t = fuse_axes(t, 1, 2);  // (h, vw.in, a0, b0)
    t = fuse_axes(t, 2, 2);  // (h, vw.in, vw)
    T.action = t;
  }
  return T;
}

Matrix yd_braiding(const YDModule& V, const YDModule& W) {
  if (V.over() != W.over()) throw Error("yd_braiding: modules over different bases");
  const auto& H = *V.over();
  Expr e = Expr::identity_map(H.field(), {{"v", V.dim()}, {"w", W.dim()}});
  V.coact(e, "v", "vm", "v0");
  W.act(e, "vm", "w", "w1");
  SparseTensor t = e.extract({"v.in", "w.in", "w1", "v0"});
  t = fuse_axes(fuse_axes(t, 0, 2), 1, 2);  // (vw.in, wv.out)
  return Matrix::from_map_tensor(t);
}

BraidedBialgebra BraidedBialgebra::trivial(const DualQuasiBialgebra* H) {
  BraidedBialgebra R;
  R.carrier = YDModule::trivial(H);
  const Field& F = H->field();
  R.m = SparseTensor(F, {1, 1, 1});
  R.m.set({0, 0, 0}, Scalar::one(F));
  R.u = {Scalar::one(F)};
  R.delta = R.m;
  R.eps = {Scalar::one(F)};
  return R;
}

SparseTensor delta_R_tensor_square(const BraidedBialgebra& R) {
  const auto& H = *R.carrier.over();
  const auto& V = R.carrier;
  const Field& F = H.field();
  int d = R.dim();
  Expr e = Expr::identity_map(F, {{"r", d}, {"s", d}});
  e.apply(R.delta, {"r"}, {0}, {"r1", "r2"});
  e.apply(R.delta, {"s"}, {0}, {"s1", "s2"});
  // iterated coactions
  V.coact(e, "r1", "r1m2", "r1a");
  V.coact(e, "r1a", "r1m1", "r1_0");
  V.coact(e, "r2", "r2m5", "r2a");
  V.coact(e, "r2a", "r2m4", "r2b");
  V.coact(e, "r2b", "r2m3", "r2c");
  V.coact(e, "r2c", "r2m2", "r2d");
  V.coact(e, "r2d", "r2m1", "r2_0");
  V.coact(e, "s1", "s1m2", "s1a");
  V.coact(e, "s1a", "s1m1", "s1_0");
  V.coact(e, "s2", "s2m4", "s2a");
  V.coact(e, "s2a", "s2m3", "s2b");
  V.coact(e, "s2b", "s2m2", "s2c");
  V.coact(e, "s2c", "s2m1", "s2_0");
  // ω⁻¹(r¹₋₂ ⊗ r²₋₅ ⊗ s¹₋₂s²₋₄) ω(r²₋₄ ⊗ s¹₋₁ ⊗ s²₋₃)
  H.mul(e, "s1m2", "s2m4", "t1");
  e.weight(H.omega_inv.values, {"r1m2", "r2m5", "t1"}, {0, 1, 2});
  H.omega_weight(e, "r2m4", "s1m1", "s2m3");
  // ω⁻¹[(r²₋₃ ⊳ s¹₀)₋₂ ⊗ r²₋₂ ⊗ s²₋₂]
  V.act(e, "r2m3", "s1_0", "a");
  V.coact(e, "a", "am2", "aa");
  V.coact(e, "aa", "am1", "a0");
  e.weight(H.omega_inv.values, {"am2", "r2m2", "s2m2"}, {0, 1, 2});
  // ω(r¹₋₁ ⊗ (r²₋₃ ⊳ s¹₀)₋₁ ⊗ r²₋₁ s²₋₁)
  H.mul(e, "r2m1", "s2m1", "t2");
  H.omega_weight(e, "r1m1", "am1", "t2");
  return e.extract({"r.in", "s.in", "r1_0", "a0", "r2_0", "s2_0"});
}

Report check_braided_bialgebra(const BraidedBialgebra& R) {
  Report rep;
  rep.subject = "braided bialgebra";
  const auto& V = R.carrier;
  const auto& H = *V.over();
  const Field& F = H.field();
  int d = R.dim(), n = H.dim();
  if (R.m.shape() != Index{d, d, d} || R.delta.shape() != Index{d, d, d} ||
      (int)R.u.size() != d || (int)R.eps.size() != d)
    throw Error("braided bialgebra: misshaped structure constants");
  rep.merge(check_yd(V), "carrier");

  std::vector<std::string> vl = V.com.labels;
  auto Lv = [&](int k) { return V.com.label_legs(k); };
  SparseTensor uvec = from_vector(F, R.u), evec = from_vector(F, R.eps);

  auto mul_R = [&](Expr& e, const std::string& a, const std::string& b, const std::string& ab) {
    e.apply(R.m, {a, b}, {0, 1}, {ab});
  };

  {  // m_R is a YD morphism: colinear and equivariant for the tensor structure
    YDModule VV = yd_tensor(V, V);
    Expr lhs = Expr::identity_map(F, {{"r", d}, {"s", d}});
    mul_R(lhs, "r", "s", "rs");
    V.coact(lhs, "rs", "hm", "p");
    Expr rhs = Expr::identity_map(F, {{"r", d}, {"s", d}});
    V.coact(rhs, "r", "rm", "r0");
    V.coact(rhs, "s", "sm", "s0");
    H.mul(rhs, "rm", "sm", "hm");
    mul_R(rhs, "r0", "s0", "p");
    rep.add(compare_maps("m_R colinear", lhs.extract({"r.in", "s.in", "hm", "p"}),
                         rhs.extract({"r.in", "s.in", "hm", "p"}), 2, Lv(2),
                         {H.co.labels, vl}));

    // h ⊳ m(r⊗s) = m(h ⊳_{V⊗V} (r⊗s))
    Expr la = Expr::identity_map(F, {{"h", n}, {"r", d}, {"s", d}});
    mul_R(la, "r", "s", "rs");
    V.act(la, "h", "rs", "p");
    Expr ra = Expr::identity_map(F, {{"h", n}, {"r", d}, {"s", d}});
    SparseTensor t = ra.extract({"h.in", "r.in", "s.in", "h", "r", "s"});
    t = fuse_axes(t, 4, 2);                            // (h.in, r.in, s.in, h, rs)
    t = contract(t, VV.action, {{3, 0}, {4, 1}});      // (h.in, r.in, s.in, rs')
    t = unfuse_axis(t, 3, {d, d});
    t = contract(t, R.m, {{3, 0}, {4, 1}});            // (h.in, r.in, s.in, p)
    rep.add(compare_maps("m_R equivariant", la.extract({"h.in", "r.in", "s.in", "p"}), t, 3,
                         {H.co.labels, vl, vl}, Lv(1)));
  }
  {  // u_R: ρ(1_R) = 1_H⊗1_R, h⊳1_R = ε(h)1_R, plus unit laws
    SparseTensor cu = contract(uvec, V.com.coaction, {{0, 0}});  // (h, v)
    SparseTensor want = outer(H.unit_tensor(), uvec);
    if (cu == want)
      rep.pass("u_R colinear");
    else
      rep.fail("u_R colinear", "rho(1_R) != 1_H x 1_R");
    SparseTensor au = contract(uvec, V.action, {{0, 1}});  // (h, v')
    SparseTensor wantu = outer(from_vector(F, H.co.counit), uvec);
    rep.add(compare_maps("u_R equivariant", au, wantu, 1, {H.co.labels}, Lv(1)));

    SparseTensor lu = contract(uvec, R.m, {{0, 0}});
    SparseTensor ru = contract(uvec, R.m, {{0, 1}});
    rep.add(compare_maps("unit left", lu, SparseTensor::identity(F, d), 1, Lv(1), Lv(1)));
    rep.add(compare_maps("unit right", ru, SparseTensor::identity(F, d), 1, Lv(1), Lv(1)));
  }
  {  // quasi-associativity in the category: (rs)t = ω⁻¹(r₋₁⊗s₋₁⊗t₋₁) r₀(s₀t₀)
    Expr lhs = Expr::identity_map(F, {{"r", d}, {"s", d}, {"t", d}});
    mul_R(lhs, "r", "s", "rs");
    mul_R(lhs, "rs", "t", "res");
    Expr rhs = Expr::identity_map(F, {{"r", d}, {"s", d}, {"t", d}});
    V.coact(rhs, "r", "rm", "r0");
    V.coact(rhs, "s", "sm", "s0");
    V.coact(rhs, "t", "tm", "t0");
    rhs.weight(H.omega_inv.values, {"rm", "sm", "tm"}, {0, 1, 2});
    mul_R(rhs, "s0", "t0", "st");
    mul_R(rhs, "r0", "st", "res");
    rep.add(compare_maps("associative (constraint)",
                         lhs.extract({"r.in", "s.in", "t.in", "res"}),
                         rhs.extract({"r.in", "s.in", "t.in", "res"}), 3, Lv(3), Lv(1)));
  }
  {  // Δ_R is a YD morphism
    Expr lhs = Expr::identity_map(F, {{"r", d}});
    lhs.apply(R.delta, {"r"}, {0}, {"a", "b"});
    V.coact(lhs, "a", "am", "a0");
    V.coact(lhs, "b", "bm", "b0");
    H.mul(lhs, "am", "bm", "hm");
    Expr rhs = Expr::identity_map(F, {{"r", d}});
    V.coact(rhs, "r", "hm", "r0");
    rhs.apply(R.delta, {"r0"}, {0}, {"a0", "b0"});
    rep.add(compare_maps("Delta_R colinear", lhs.extract({"r.in", "hm", "a0", "b0"}),
                         rhs.extract({"r.in", "hm", "a0", "b0"}), 1, Lv(1),
                         {H.co.labels, vl, vl}));

    YDModule VV = yd_tensor(V, V);
    Expr la = Expr::identity_map(F, {{"h", n}, {"r", d}});
    V.act(la, "h", "r", "w");
    la.apply(R.delta, {"w"}, {0}, {"a", "b"});
    SparseTensor lt = la.extract({"h.in", "r.in", "a", "b"});
    Expr ra = Expr::identity_map(F, {{"h", n}, {"r", d}});
    ra.apply(R.delta, {"r"}, {0}, {"a", "b"});
    SparseTensor rt = ra.extract({"h.in", "r.in", "h", "a", "b"});
    rt = fuse_axes(rt, 3, 2);                          // (h.in, r.in, h, ab)
    rt = contract(rt, VV.action, {{2, 0}, {3, 1}});    // (h.in, r.in, ab')
    rt = unfuse_axis(rt, 2, {d, d});
    rep.add(compare_maps("Delta_R equivariant", lt, rt, 2, {H.co.labels, vl}, Lv(2)));
  }
  {  // ε_R is a YD morphism
    Expr lhs = Expr::identity_map(F, {{"h", n}, {"r", d}});
    V.act(lhs, "h", "r", "w");
    lhs.weight(evec, {"w"}, {0});
    Expr rhs = Expr::identity_map(F, {{"h", n}, {"r", d}});
    H.counit_weight(rhs, "h");
    rhs.weight(evec, {"r"}, {0});
    rep.add(compare_maps("eps_R equivariant", lhs.extract({"h.in", "r.in"}),
                         rhs.extract({"h.in", "r.in"}), 2, {H.co.labels, vl}, {}));
    Expr cl = Expr::identity_map(F, {{"r", d}});
    V.coact(cl, "r", "hm", "r0");
    cl.weight(evec, {"r0"}, {0});
    Expr cr = Expr::identity_map(F, {{"r", d}});
    cr.weight(evec, {"r"}, {0});
    cr.append(H.unit_tensor(), "hm");
    rep.add(compare_maps("eps_R colinear", cl.extract({"r.in", "hm"}),
                         cr.extract({"r.in", "hm"}), 1, Lv(1), {H.co.labels}));
  }
  {  // coassociativity w.r.t. the constraint and counit laws
    Expr lhs = Expr::identity_map(F, {{"r", d}});
    lhs.apply(R.delta, {"r"}, {0}, {"x", "c"});
    lhs.apply(R.delta, {"x"}, {0}, {"a", "b"});
    V.coact(lhs, "a", "am", "a0");
    V.coact(lhs, "b", "bm", "b0");
    V.coact(lhs, "c", "cm", "c0");
    lhs.weight(H.omega_inv.values, {"am", "bm", "cm"}, {0, 1, 2});
    Expr rhs = Expr::identity_map(F, {{"r", d}});
    rhs.apply(R.delta, {"r"}, {0}, {"a0", "y"});
    rhs.apply(R.delta, {"y"}, {0}, {"b0", "c0"});
    rep.add(compare_maps("coassociative (constraint)",
                         lhs.extract({"r.in", "a0", "b0", "c0"}),
                         rhs.extract({"r.in", "a0", "b0", "c0"}), 1, Lv(1), Lv(3)));

    Expr le = Expr::identity_map(F, {{"r", d}});
    le.apply(R.delta, {"r"}, {0}, {"a", "b"});
    le.weight(evec, {"a"}, {0});
    SparseTensor id = SparseTensor::identity(F, d);
    rep.add(compare_maps("counit left", le.extract({"r.in", "b"}), id, 1, Lv(1), Lv(1)));
    Expr re = Expr::identity_map(F, {{"r", d}});
    re.apply(R.delta, {"r"}, {0}, {"a", "b"});
    re.weight(evec, {"b"}, {0});
    rep.add(compare_maps("counit right", re.extract({"r.in", "a"}), id, 1, Lv(1), Lv(1)));
  }
  {  // (m_R⊗m_R)Δ_{R⊗R} = Δ_R m_R and the ε/u compatibilities
    SparseTensor drr = delta_R_tensor_square(R);  // (r.in, s.in, a, b, c, d)
    SparseTensor lhs(F, {d, d, d, d});
    for (const auto& [k, v] : drr.entries())
      for (const auto& [m1, v1] : R.m.entries()) {
        if (m1[0] != k[2] || m1[1] != k[3]) continue;
        for (const auto& [m2, v2] : R.m.entries()) {
          if (m2[0] != k[4] || m2[1] != k[5]) continue;
          lhs.add({k[0], k[1], m1[2], m2[2]}, v * v1 * v2);
        }
      }
    Expr rhs = Expr::identity_map(F, {{"r", d}, {"s", d}});
    mul_R(rhs, "r", "s", "rs");
    rhs.apply(R.delta, {"rs"}, {0}, {"x", "y"});
    rep.add(compare_maps("Delta_R multiplicative", lhs,
                         rhs.extract({"r.in", "s.in", "x", "y"}), 2, Lv(2), Lv(2)));

    Expr e1 = Expr::identity_map(F, {{"r", d}, {"s", d}});
    mul_R(e1, "r", "s", "rs");
    e1.weight(evec, {"rs"}, {0});
    Expr e2 = Expr::identity_map(F, {{"r", d}, {"s", d}});
    e2.weight(evec, {"r"}, {0});
    e2.weight(evec, {"s"}, {0});
    rep.add(compare_maps("eps_R multiplicative", e1.extract({"r.in", "s.in"}),
                         e2.extract({"r.in", "s.in"}), 2, Lv(2), {}));

    SparseTensor du = contract(uvec, R.delta, {{0, 0}});
    if (du == outer(uvec, uvec))
      rep.pass("Delta_R(1_R) = 1_R x 1_R");
    else
      rep.fail("Delta_R(1_R) = 1_R x 1_R", "unit is not grouplike in R");
    Scalar eu = Scalar::zero(F);
    for (int i = 0; i < d; ++i) eu += R.eps[i] * R.u[i];
    if (eu.is_one())
      rep.pass("eps_R(1_R) = 1");
    else
      rep.fail("eps_R(1_R) = 1", "eps_R(1_R) = " + eu.str());
  }
  return rep;
}

}  // namespace qk
