#include "qk/preantipode.hpp"

namespace qk {

namespace {

// S(h₁)₁h₂ ⊗ S(h₁)₂  −  1_H ⊗ S(h)   as a map tensor (h.in, x, y)
SparseTensor cond1(const DualQuasiBialgebra& H, const SparseTensor& S) {
  int n = H.dim();
  Expr lhs = Expr::identity_map(H.field(), {{"h", n}});
  H.comul(lhs, "h", "h1", "h2");
  lhs.apply(S, {"h1"}, {0}, {"sh"});
  H.comul(lhs, "sh", "s1", "s2");
  H.mul(lhs, "s1", "h2", "x");
  lhs.rename("s2", "y");
  Expr rhs = Expr::identity_map(H.field(), {{"h", n}});
  rhs.apply(S, {"h"}, {0}, {"y"});
  rhs.append(H.unit_tensor(), "x");
  return lhs.extract({"h.in", "x", "y"}) - rhs.extract({"h.in", "x", "y"});
}

// S(h₂)₁ ⊗ h₁S(h₂)₂  −  S(h) ⊗ 1_H
SparseTensor cond2(const DualQuasiBialgebra& H, const SparseTensor& S) {
  int n = H.dim();
  Expr lhs = Expr::identity_map(H.field(), {{"h", n}});
  H.comul(lhs, "h", "h1", "h2");
  lhs.apply(S, {"h2"}, {0}, {"sh"});
  H.comul(lhs, "sh", "s1", "s2");
  H.mul(lhs, "h1", "s2", "y");
  lhs.rename("s1", "x");
  Expr rhs = Expr::identity_map(H.field(), {{"h", n}});
  rhs.apply(S, {"h"}, {0}, {"x"});
  rhs.append(H.unit_tensor(), "y");
  return lhs.extract({"h.in", "x", "y"}) - rhs.extract({"h.in", "x", "y"});
}

// ω(h₁ ⊗ S(h₂) ⊗ h₃), the linear part of (fond S); rhs is ε(h)
SparseTensor cond3(const DualQuasiBialgebra& H, const SparseTensor& S) {
  int n = H.dim();
  Expr e = Expr::identity_map(H.field(), {{"h", n}});
  H.comul(e, "h", "h1", "h2");
  H.comul(e, "h2", "h2a", "h3");
  e.rename("h2a", "hm");
  e.apply(S, {"hm"}, {0}, {"sh"});
  H.omega_weight(e, "h1", "sh", "h3");
  return e.extract({"h.in"});
}

}  // namespace

Report check_preantipode(const DualQuasiBialgebra& H, const Matrix& S) {
  Report rep;
  rep.subject = "preantipode";
  if (S.rows() != H.dim() || S.cols() != H.dim()) throw Error("preantipode: matrix shape");
  SparseTensor st = S.to_map_tensor();
  auto L = [&](int k) { return H.co.label_legs(k); };
  int n = H.dim();
  SparseTensor z2(H.field(), {n, n, n}), z1(H.field(), {n});
  rep.add(compare_maps("col 1 S", cond1(H, st), z2, 1, L(1), L(2)));
  rep.add(compare_maps("col 2 S", cond2(H, st), z2, 1, L(1), L(2)));
  SparseTensor eps = from_vector(H.field(), H.co.counit);
  rep.add(compare_maps("fond S", cond3(H, st), eps, 1, L(1), {}));
  return rep;
}

std::optional<PreantipodeSolution> solve_preantipode(const DualQuasiBialgebra& H) {
  int n = H.dim();
  const Field& F = H.field();
  int vars = n * n;  // variable j*n+i holds S[i][j], i.e. columns of S in order
  int rows = 2 * n * n * n + n;
  Matrix A(F, rows, vars);
  Vec b(rows, Scalar::zero(F));

  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      // elementary matrix E_ij as map tensor (in=j, out=i)
      SparseTensor E(F, {n, n});
      E.set({j, i}, Scalar::one(F));
      SparseTensor c1 = cond1(H, E), c2 = cond2(H, E), c3 = cond3(H, E);
      int col = j * n + i;
      for (const auto& [k, v] : c1.entries()) A.at((k[0] * n + k[1]) * n + k[2], col) = v;
      for (const auto& [k, v] : c2.entries())
        A.at(n * n * n + (k[0] * n + k[1]) * n + k[2], col) = v;
      for (const auto& [k, v] : c3.entries()) A.at(2 * n * n * n + k[0], col) = v;
    }
  for (int h = 0; h < n; ++h) b[2 * n * n * n + h] = H.co.counit[h];

  auto x = solve_linear(A, b);
  if (!x) return std::nullopt;
  PreantipodeSolution sol;
  sol.S = Matrix(F, n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) sol.S.at(i, j) = (*x)[j * n + i];
  sol.solution_space_dim = (int)kernel_basis(A).size();
  auto rep = check_preantipode(H, sol.S);
  if (!rep.ok()) throw Error("internal: solved preantipode fails its own conditions");
  return sol;
}

Report check_derived_identities(const DualQuasiBialgebra& H, const Matrix& S) {
  Report rep;
  rep.subject = "preantipode derived identities";
  auto pre = check_preantipode(H, S);
  if (!pre.ok()) {
    rep.fail("precondition", "S is not a preantipode (" + pre.first_failure()->name +
                                 "); derived identities not evaluated");
    return rep;
  }
  int n = H.dim();
  const Field& F = H.field();
  SparseTensor st = S.to_map_tensor();
  auto L = [&](int k) { return H.co.label_legs(k); };

  // εS(h)·1_H
  Vec epsS(n, Scalar::zero(F));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) epsS[j] += H.co.counit[i] * S.at(i, j);
  Expr mid = Expr::identity_map(F, {{"h", n}});
  mid.weight(from_vector(F, epsS), {"h"}, {0});
  mid.append(H.unit_tensor(), "res");
  SparseTensor mid_t = mid.extract({"h.in", "res"});

  {  // h₁S(h₂) = εS(h)1_H = S(h₁)h₂   (3S); failure = implementation bug
    Expr a = Expr::identity_map(F, {{"h", n}});
    H.comul(a, "h", "h1", "h2");
    a.apply(st, {"h2"}, {0}, {"sh"});
    H.mul(a, "h1", "sh", "res");
    rep.add(compare_maps("3S left (internal-error severity)", a.extract({"h.in", "res"}), mid_t,
                         1, L(1), L(1)));
    Expr c = Expr::identity_map(F, {{"h", n}});
    H.comul(c, "h", "h1", "h2");
    c.apply(st, {"h1"}, {0}, {"sh"});
    H.mul(c, "sh", "h2", "res");
    rep.add(compare_maps("3S right (internal-error severity)", c.extract({"h.in", "res"}), mid_t,
                         1, L(1), L(1)));
  }
  {  // ω⁻¹[S(h₁)⊗h₂⊗S(h₃)] = εS(h)
    Expr e = Expr::identity_map(F, {{"h", n}});
    H.comul(e, "h", "h1", "hr");
    H.comul(e, "hr", "h2", "h3");
    e.apply(st, {"h1"}, {0}, {"s1"});
    e.apply(st, {"h3"}, {0}, {"s3"});
    H.omega_weight(e, "s1", "h2", "s3", /*inverse=*/true);
    Expr r = Expr::identity_map(F, {{"h", n}});
    r.weight(from_vector(F, epsS), {"h"}, {0});
    rep.add(compare_maps("omegasbis (internal-error severity)", e.extract({"h.in"}),
                         r.extract({"h.in"}), 1, L(1), {}));
  }
  return rep;
}

Report check_ordinary_antipode(const DualQuasiBialgebra& H, const Matrix& s) {
  Report rep;
  rep.subject = "ordinary antipode";
  int n = H.dim();
  const Field& F = H.field();
  SparseTensor st = s.to_map_tensor();
  auto L = [&](int k) { return H.co.label_legs(k); };

  Expr eps1 = Expr::identity_map(F, {{"h", n}});
  H.counit_weight(eps1, "h");
  eps1.append(H.unit_tensor(), "res");
  SparseTensor eps1_t = eps1.extract({"h.in", "res"});

  Expr a = Expr::identity_map(F, {{"h", n}});
  H.comul(a, "h", "h1", "h2");
  a.apply(st, {"h1"}, {0}, {"sh"});
  H.mul(a, "sh", "h2", "res");
  rep.add(compare_maps("s(h1)h2 = eps(h)1", a.extract({"h.in", "res"}), eps1_t, 1, L(1), L(1)));

  Expr b = Expr::identity_map(F, {{"h", n}});
  H.comul(b, "h", "h1", "h2");
  b.apply(st, {"h2"}, {0}, {"sh"});
  H.mul(b, "h1", "sh", "res");
  rep.add(compare_maps("h1s(h2) = eps(h)1", b.extract({"h.in", "res"}), eps1_t, 1, L(1), L(1)));

  {  // plain associativity on all basis triples
    Expr lhs = Expr::identity_map(F, {{"h", n}, {"k", n}, {"l", n}});
    H.mul(lhs, "h", "k", "hk");
    H.mul(lhs, "hk", "l", "res");
    Expr rhs = Expr::identity_map(F, {{"h", n}, {"k", n}, {"l", n}});
    H.mul(rhs, "k", "l", "kl");
    H.mul(rhs, "h", "kl", "res");
    rep.add(compare_maps("m associative", lhs.extract({"h.in", "k.in", "l.in", "res"}),
                         rhs.extract({"h.in", "k.in", "l.in", "res"}), 3, L(3), L(1)));
  }
  return rep;
}

QuasiHopfData cocommutative_to_hopf(const DualQuasiBialgebra& H, const Matrix& S) {
  if (!is_cocommutative(H)) throw Error("cocommutative_to_hopf: H is not cocommutative");
  if (!check_preantipode(H, S).ok()) throw Error("cocommutative_to_hopf: S is not a preantipode");
  int n = H.dim();
  const Field& F = H.field();
  SparseTensor st = S.to_map_tensor();

  // s(h) := S(h₃)₁ ω[h₁ ⊗ S(h₃)₂ ⊗ h₂]
  Expr e = Expr::identity_map(F, {{"h", n}});
  H.comul(e, "h", "h1", "hr");
  H.comul(e, "hr", "h2", "h3");
  e.apply(st, {"h3"}, {0}, {"sh"});
  H.comul(e, "sh", "s1", "s2");
  H.omega_weight(e, "h1", "s2", "h2");
  QuasiHopfData q;
  q.s = Matrix::from_map_tensor(e.extract({"h.in", "s1"}));
  q.alpha = H.co.counit;
  q.beta.assign(n, Scalar::zero(F));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) q.beta[j] += H.co.counit[i] * S.at(i, j);
  return q;
}

Matrix beta_conv_s(const DualQuasiBialgebra& H, const QuasiHopfData& q) {
  int n = H.dim();
  Expr e = Expr::identity_map(H.field(), {{"h", n}});
  H.comul(e, "h", "h1", "h2");
  e.weight(from_vector(H.field(), q.beta), {"h1"}, {0});
  e.apply(q.s.to_map_tensor(), {"h2"}, {0}, {"res"});
  return Matrix::from_map_tensor(e.extract({"h.in", "res"}));
}

Report check_quasi_hopf(const DualQuasiBialgebra& H, const QuasiHopfData& q) {
  Report rep;
  rep.subject = "dual quasi-Hopf data";
  int n = H.dim();
  const Field& F = H.field();
  SparseTensor st = q.s.to_map_tensor();
  SparseTensor alpha = from_vector(F, q.alpha), beta = from_vector(F, q.beta);
  auto L = [&](int k) { return H.co.label_legs(k); };

  {  // s is a coalgebra anti-homomorphism
    Expr lhs = Expr::identity_map(F, {{"h", n}});
    lhs.apply(st, {"h"}, {0}, {"sh"});
    H.comul(lhs, "sh", "x", "y");
    Expr rhs = Expr::identity_map(F, {{"h", n}});
    H.comul(rhs, "h", "h1", "h2");
    rhs.apply(st, {"h2"}, {0}, {"x"});
    rhs.apply(st, {"h1"}, {0}, {"y"});
    rep.add(compare_maps("s anti-comultiplicative", lhs.extract({"h.in", "x", "y"}),
                         rhs.extract({"h.in", "x", "y"}), 1, L(1), L(2)));
    Expr le = Expr::identity_map(F, {{"h", n}});
    le.apply(st, {"h"}, {0}, {"sh"});
    H.counit_weight(le, "sh");
    Expr re = Expr::identity_map(F, {{"h", n}});
    H.counit_weight(re, "h");
    rep.add(
        compare_maps("s counitary", le.extract({"h.in"}), re.extract({"h.in"}), 1, L(1), {}));
  }
  {  // (ant 1): h₁β(h₂)s(h₃) = β(h)1_H
    Expr lhs = Expr::identity_map(F, {{"h", n}});
    H.comul(lhs, "h", "h1", "hr");
    H.comul(lhs, "hr", "h2", "h3");
    lhs.weight(beta, {"h2"}, {0});
    lhs.apply(st, {"h3"}, {0}, {"sh"});
    H.mul(lhs, "h1", "sh", "res");
    Expr rhs = Expr::identity_map(F, {{"h", n}});
    rhs.weight(beta, {"h"}, {0});
    rhs.append(H.unit_tensor(), "res");
    rep.add(compare_maps("ant 1", lhs.extract({"h.in", "res"}), rhs.extract({"h.in", "res"}), 1,
                         L(1), L(1)));
  }
  {  // (ant 2): s(h₁)α(h₂)h₃ = α(h)1_H
    Expr lhs = Expr::identity_map(F, {{"h", n}});
    H.comul(lhs, "h", "h1", "hr");
    H.comul(lhs, "hr", "h2", "h3");
    lhs.weight(alpha, {"h2"}, {0});
    lhs.apply(st, {"h1"}, {0}, {"sh"});
    H.mul(lhs, "sh", "h3", "res");
    Expr rhs = Expr::identity_map(F, {{"h", n}});
    rhs.weight(alpha, {"h"}, {0});
    rhs.append(H.unit_tensor(), "res");
    rep.add(compare_maps("ant 2", lhs.extract({"h.in", "res"}), rhs.extract({"h.in", "res"}), 1,
                         L(1), L(1)));
  }
  Expr epsh = Expr::identity_map(F, {{"h", n}});
  H.counit_weight(epsh, "h");
  SparseTensor eps_t = epsh.extract({"h.in"});
  {  // (ant 3) first half
    Expr e = Expr::identity_map(F, {{"h", n}});
    H.comul(e, "h", "h1", "r1");
    H.comul(e, "r1", "h2", "r2");
    H.comul(e, "r2", "h3", "r3");
    H.comul(e, "r3", "h4", "h5");
    e.weight(beta, {"h2"}, {0});
    e.weight(alpha, {"h4"}, {0});
    e.apply(st, {"h3"}, {0}, {"m"});
    H.omega_weight(e, "h1", "m", "h5");
    rep.add(compare_maps("ant 3 (omega side)", e.extract({"h.in"}), eps_t, 1, L(1), {}));
  }
  {  // (ant 3) second half
    Expr e = Expr::identity_map(F, {{"h", n}});
    H.comul(e, "h", "h1", "r1");
    H.comul(e, "r1", "h2", "r2");
    H.comul(e, "r2", "h3", "r3");
    H.comul(e, "r3", "h4", "h5");
    e.weight(alpha, {"h2"}, {0});
    e.weight(beta, {"h4"}, {0});
    e.apply(st, {"h1"}, {0}, {"s1"});
    e.apply(st, {"h5"}, {0}, {"s5"});
    H.omega_weight(e, "s1", "h3", "s5", /*inverse=*/true);
    rep.add(compare_maps("ant 3 (omega-inverse side)", e.extract({"h.in"}), eps_t, 1, L(1), {}));
  }
  return rep;
}

}  // namespace qk
