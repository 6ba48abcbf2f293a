#include "qk/bosonization.hpp"

namespace qk {

Bosonization bosonize(const DualQuasiBialgebra& H, const BraidedBialgebra& R) {
  {
    Report rrep = check_braided_bialgebra(R);
    if (!rrep.ok())
      throw Error("bosonize: R is not a bialgebra in YD over H: " + rrep.first_failure()->name +
                  " [" + rrep.first_failure()->witness + "]");
  }
  if (R.carrier.over() != &H) throw Error("bosonize: R is not defined over this H");
  const Field& F = H.field();
  const auto& V = R.carrier;
  int n = H.dim(), d = R.dim(), D = d * n;

  Coalgebra co;
  co.field = F;
  co.dim = D;
  for (int r = 0; r < d; ++r)
    for (int h = 0; h < n; ++h) co.labels.push_back(V.com.labels[r] + "#" + H.label(h));
  {  // Δ_B(r⊗h) = ω⁻¹(r¹₋₁⊗r²₋₂⊗h₁) r¹₀ ⊗ r²₋₁h₂ ⊗ r²₀ ⊗ h₃
    Expr e = Expr::identity_map(F, {{"r", d}, {"h", n}});
    e.apply(R.delta, {"r"}, {0}, {"r1", "r2"});
    V.coact(e, "r1", "r1m", "r1_0");
    V.coact(e, "r2", "r2m2", "r2a");
    V.coact(e, "r2a", "r2m1", "r2_0");
    H.comul(e, "h", "h1", "hr");
    H.comul(e, "hr", "h2", "h3");
    e.weight(H.omega_inv.values, {"r1m", "r2m2", "h1"}, {0, 1, 2});
    H.mul(e, "r2m1", "h2", "x");
    SparseTensor t = e.extract({"r.in", "h.in", "r1_0", "x", "r2_0", "h3"});
    co.delta = fuse_axes(fuse_axes(fuse_axes(t, 0, 2), 1, 2), 2, 2);
  }
  co.counit.assign(D, Scalar::zero(F));
  for (int r = 0; r < d; ++r)
    for (int h = 0; h < n; ++h) co.counit[r * n + h] = R.eps[r] * H.co.counit[h];

  SparseTensor mult(F, {D, D, D});
  {  // m_B[(r⊗h)⊗(s⊗k)]
    Expr e = Expr::identity_map(F, {{"r", d}, {"h", n}, {"s", d}, {"k", n}});
    H.comul(e, "h", "h1", "ha");
    H.comul(e, "ha", "h2", "hb");
    H.comul(e, "hb", "h3", "hc");
    H.comul(e, "hc", "h4", "hd");
    H.comul(e, "hd", "h5", "h6");
    H.comul(e, "k", "k1", "ka");
    H.comul(e, "ka", "k2", "kb");
    H.comul(e, "kb", "k3", "kc");
    H.comul(e, "kc", "k4", "k5");
    V.coact(e, "r", "rm2", "ra");
    V.coact(e, "ra", "rm1", "r0");
    V.coact(e, "s", "sm2", "sa");
    V.coact(e, "sa", "sm1", "s0");
    H.mul(e, "sm2", "k1", "t1");
    e.weight(H.omega_inv.values, {"rm2", "h1", "t1"}, {0, 1, 2});
    H.omega_weight(e, "h2", "sm1", "k2");
    V.act(e, "h3", "s0", "w");
    V.coact(e, "w", "wm2", "wa");
    V.coact(e, "wa", "wm1", "w0");
    e.weight(H.omega_inv.values, {"wm2", "h4", "k3"}, {0, 1, 2});
    H.mul(e, "h5", "k4", "t2");
    H.omega_weight(e, "rm1", "wm1", "t2");
    e.apply(R.m, {"r0", "w0"}, {0, 1}, {"p"});
    H.mul(e, "h6", "k5", "hk");
    SparseTensor t = e.extract({"r.in", "h.in", "s.in", "k.in", "p", "hk"});
    mult = fuse_axes(fuse_axes(fuse_axes(t, 0, 2), 1, 2), 2, 2);
  }
  Vec unit(D, Scalar::zero(F));
  for (int r = 0; r < d; ++r)
    for (int h = 0; h < n; ++h) unit[r * n + h] = R.u[r] * H.unit[h];

  SparseTensor om(F, {D, D, D});
  for (const auto& [k, v] : H.omega.values.entries())
    for (int r = 0; r < d; ++r) {
      if (R.eps[r].is_zero()) continue;
      for (int s = 0; s < d; ++s) {
        if (R.eps[s].is_zero()) continue;
        for (int t = 0; t < d; ++t) {
          if (R.eps[t].is_zero()) continue;
          om.set({r * n + k[0], s * n + k[1], t * n + k[2]},
                 v * R.eps[r] * R.eps[s] * R.eps[t]);
        }
      }
    }

  Bosonization out;
  out.B = DualQuasiBialgebra::make(std::move(co), std::move(mult), std::move(unit), std::move(om));
  {
    Report brep = check_dqb(out.B);
    if (!brep.ok())
      throw Error("internal: bosonization output fails " + brep.first_failure()->name);
  }
  out.sigma = Matrix(F, D, n);
  for (int h = 0; h < n; ++h)
    for (int r = 0; r < d; ++r) out.sigma.at(r * n + h, h) = R.u[r];
  out.pi = Matrix(F, n, D);
  for (int r = 0; r < d; ++r)
    for (int h = 0; h < n; ++h) out.pi.at(h, r * n + h) = R.eps[r];
  return out;
}

Report check_projection(const ProjectionData& p) {
  Report rep;
  rep.subject = "dual quasi-bialgebra with projection";
  DQBMorphism s{p.H, p.A, p.sigma}, q{p.A, p.H, p.pi};
  rep.merge(check_dqb_morphism(s), "sigma");
  rep.merge(check_dqb_morphism(q), "pi");
  if ((p.pi * p.sigma).is_identity())
    rep.pass("pi o sigma = id");
  else
    rep.fail("pi o sigma = id", "composite differs from the identity");
  return rep;
}

Trimodule projection_trimodule(const ProjectionData& p) {
  const auto& A = *p.A;
  const auto& H = *p.H;
  const Field& F = A.field();
  int dA = A.dim(), n = H.dim();
  SparseTensor pit = p.pi.to_map_tensor(), sit = p.sigma.to_map_tensor();
  Trimodule M;
  M.over = p.H;
  M.dim = dA;
  M.labels = A.co.labels;
  {
    Expr e = Expr::identity_map(F, {{"a", dA}});
    A.comul(e, "a", "a1", "a2");
    e.apply(pit, {"a1"}, {0}, {"x"});
    M.l_coaction = e.extract({"a.in", "x", "a2"});
  }
  {
    Expr e = Expr::identity_map(F, {{"a", dA}});
    A.comul(e, "a", "a1", "a2");
    e.apply(pit, {"a2"}, {0}, {"y"});
    M.r_coaction = e.extract({"a.in", "a1", "y"});
  }
  {
    Expr e = Expr::identity_map(F, {{"a", dA}, {"h", n}});
    e.apply(sit, {"h"}, {0}, {"sh"});
    A.mul(e, "a", "sh", "p");
    M.r_action = e.extract({"a.in", "h.in", "p"});
  }
  {
    Expr e = Expr::identity_map(F, {{"h", n}, {"a", dA}});
    e.apply(sit, {"h"}, {0}, {"sh"});
    A.mul(e, "sh", "a", "p");
    M.l_action = e.extract({"h.in", "a.in", "p"});
  }
  return M;
}

Matrix split_tau(const ProjectionData& p, const Matrix& S) {
  return tau_map(projection_trimodule(p), S);
}

SplitResult split(const ProjectionData& p, const Matrix& S) {
  const auto& A = *p.A;
  const auto& H = *p.H;
  const Field& F = A.field();
  Trimodule M = projection_trimodule(p);
  CoinvariantYD g = yd_on_coinvariants(M, S);
  SplitResult out;
  out.coinv = g.emb;
  const Subspace& GA = g.emb;
  int s = GA.dim(), n = H.dim();

  out.R.carrier = g.yd;
  {  // m_R(r⊗s) = rs computed in A, corestricted
    SparseTensor T(F, {s, s, A.dim()});
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        Vec prod = A.multiply(GA.basis()[i], GA.basis()[j]);
        for (int a = 0; a < A.dim(); ++a)
          if (!prod[a].is_zero()) T.set({i, j, a}, prod[a]);
      }
    out.R.m = corestrict_axis(T, 2, GA, "split: m_R");
  }
  {
    auto c = GA.coords(A.unit);
    if (!c) throw Error("split: 1_A is not coinvariant");
    out.R.u = *c;
  }
  {  // Δ_R(r) = τ(r₁)⊗τ(r₂)
    Matrix tA = tau_map(M, S);
    SparseTensor T(F, {s, s, s});
    for (int i = 0; i < s; ++i) {
      Expr e = Expr::one_hot(F, {{"d", 1}}, {0});
      e.append(from_vector(F, GA.basis()[i]), "r");
      A.comul(e, "r", "r1", "r2");
      e.apply(tA.to_map_tensor(), {"r1"}, {0}, {"t1"});
      e.apply(tA.to_map_tensor(), {"r2"}, {0}, {"t2"});
      SparseTensor w = slice(e.extract({"d", "t1", "t2"}), {0}, {0});
      w = corestrict_axis(w, 0, GA, "split: Delta_R leg 1");
      w = corestrict_axis(w, 1, GA, "split: Delta_R leg 2");
      for (const auto& [k, v] : w.entries()) T.set({i, k[0], k[1]}, v);
    }
    out.R.delta = T;
  }
  {
    out.R.eps.assign(s, Scalar::zero(F));
    for (int i = 0; i < s; ++i)
      for (int a = 0; a < A.dim(); ++a) out.R.eps[i] += A.co.counit[a] * GA.basis()[i][a];
  }
  {
    Report rrep = check_braided_bialgebra(out.R);
    if (!rrep.ok())
      throw Error("split: recovered R fails braided axioms: " + rrep.first_failure()->name);
  }
  {  // ε_A(r⊗h) = rσ(h) and its inverse
    out.iso = Matrix(F, A.dim(), s * n);
    for (int i = 0; i < s; ++i)
      for (int h = 0; h < n; ++h) {
        Vec sh(A.dim(), Scalar::zero(F));
        for (int a = 0; a < A.dim(); ++a) sh[a] = p.sigma.at(a, h);
        Vec prod = A.multiply(GA.basis()[i], sh);
        for (int a = 0; a < A.dim(); ++a) out.iso.at(a, i * n + h) = prod[a];
      }
    Matrix tA = tau_map(M, S);
    Expr e = Expr::identity_map(F, {{"a", A.dim()}});
    A.comul(e, "a", "a1", "a2");
    e.apply(tA.to_map_tensor(), {"a1"}, {0}, {"t"});
    e.apply(p.pi.to_map_tensor(), {"a2"}, {0}, {"x"});
    SparseTensor w = e.extract({"a.in", "t", "x"});
    w = corestrict_axis(w, 1, GA, "split: tau(a1)");  // (a.in, s, x)
    out.iso_inv = Matrix(F, s * n, A.dim());
    for (const auto& [k, v] : w.entries()) out.iso_inv.at(k[1] * n + k[2], k[0]) = v;
  }
  return out;
}

}  // namespace qk
