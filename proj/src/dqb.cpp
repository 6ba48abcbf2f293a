#include "qk/dqb.hpp"

namespace qk {

DualQuasiBialgebra DualQuasiBialgebra::make(Coalgebra co, SparseTensor mult, Vec unit,
                                            SparseTensor omega_values) {
  DualQuasiBialgebra H;
  int n = co.dim;
  if (mult.shape() != Index{n, n, n}) throw Error("dqb: multiplication constants misshaped");
  if ((int)unit.size() != n) throw Error("dqb: unit vector misshaped");
  if (omega_values.shape() != Index{n, n, n}) throw Error("dqb: reassociator misshaped");
  H.co = std::move(co);
  H.mult = std::move(mult);
  H.unit = std::move(unit);
  H.omega = Functional{3, std::move(omega_values)};
  auto inv = convolution_inverse(H.co, H.omega);
  if (!inv) throw Error("dqb: reassociator is not convolution invertible");
  H.omega_inv = *inv;
  return H;
}

Vec DualQuasiBialgebra::multiply(const Vec& a, const Vec& b) const {
  SparseTensor r = contract(contract(from_vector(field(), a), mult, {{0, 0}}),
                            from_vector(field(), b), {{0, 0}});
  return to_vector(permuted(r, {0}));
}

bool is_cocommutative(const DualQuasiBialgebra& H) {
  return permuted(H.co.delta, {0, 2, 1}) == H.co.delta;
}

namespace {

// arity-4 functional ω∘(various m / ε paddings); slot: which contraction
Functional omega_comp(const DualQuasiBialgebra& H, const std::string& kind) {
  int n = H.dim();
  Expr e = Expr::identity_map(H.field(), {{"a", n}, {"b", n}, {"c", n}, {"d", n}});
  if (kind == "HHm") {  // ω(a ⊗ b ⊗ cd)
    H.mul(e, "c", "d", "cd");
    H.omega_weight(e, "a", "b", "cd");
  } else if (kind == "mHH") {
    H.mul(e, "a", "b", "ab");
    H.omega_weight(e, "ab", "c", "d");
  } else if (kind == "eps_w") {  // ε(a)ω(b⊗c⊗d)
    H.counit_weight(e, "a");
    H.omega_weight(e, "b", "c", "d");
  } else if (kind == "HmH") {
    H.mul(e, "b", "c", "bc");
    H.omega_weight(e, "a", "bc", "d");
  } else {  // "w_eps": ω(a⊗b⊗c)ε(d)
    H.counit_weight(e, "d");
    H.omega_weight(e, "a", "b", "c");
  }
  Functional f;
  f.arity = 4;
  f.values = e.extract({"a.in", "b.in", "c.in", "d.in"});
  return f;
}

}  // namespace

Report check_dqb(const DualQuasiBialgebra& H) {
  Report rep;
  rep.subject = "dual quasi-bialgebra";
  int n = H.dim();
  const Field& F = H.field();
  rep.merge(check_coalgebra(H.co), "coalgebra");

  auto L = [&](int k) { return H.co.label_legs(k); };

  {  // m is a coalgebra map
    Expr lhs = Expr::identity_map(F, {{"h", n}, {"k", n}});
    H.mul(lhs, "h", "k", "hk");
    H.comul(lhs, "hk", "a", "b");
    Expr rhs = Expr::identity_map(F, {{"h", n}, {"k", n}});
    H.comul(rhs, "h", "h1", "h2");
    H.comul(rhs, "k", "k1", "k2");
    H.mul(rhs, "h1", "k1", "a");
    H.mul(rhs, "h2", "k2", "b");
    rep.add(compare_maps("m comultiplicative", lhs.extract({"h.in", "k.in", "a", "b"}),
                         rhs.extract({"h.in", "k.in", "a", "b"}), 2, L(2), L(2)));

    Expr le = Expr::identity_map(F, {{"h", n}, {"k", n}});
    H.mul(le, "h", "k", "hk");
    H.counit_weight(le, "hk");
    Expr re = Expr::identity_map(F, {{"h", n}, {"k", n}});
    H.counit_weight(re, "h");
    H.counit_weight(re, "k");
    rep.add(compare_maps("m counitary", le.extract({"h.in", "k.in"}),
                         re.extract({"h.in", "k.in"}), 2, L(2), {}));
  }
  {  // u is a coalgebra map
    SparseTensor u = H.unit_tensor();
    SparseTensor du = contract(u, H.co.delta, {{0, 0}});
    bool ok = du == outer(u, u);
    Scalar eu = Scalar::zero(F);
    for (int i = 0; i < n; ++i) eu += H.co.counit[i] * H.unit[i];
    if (ok && eu.is_one())
      rep.pass("u comultiplicative");
    else
      rep.fail("u comultiplicative", "unit is not grouplike with counit 1");
  }
  {  // left/right unitality of m
    SparseTensor lm = contract(H.unit_tensor(), H.mult, {{0, 0}});  // (j,k): 1·e_j
    SparseTensor rm = contract(H.unit_tensor(), H.mult, {{0, 1}});  // (i,k): e_i·1
    SparseTensor id = SparseTensor::identity(F, n);
    rep.add(compare_maps("left unit", lm, id, 1, L(1), L(1)));
    rep.add(compare_maps("right unit", rm, id, 1, L(1), L(1)));
  }
  {  // ω unital whenever 1_H is an argument
    SparseTensor eps = from_vector(F, H.co.counit);
    SparseTensor u = H.unit_tensor();
    SparseTensor ee = outer(eps, eps);
    const char* names[3] = {"omega unital slot 1", "omega unital slot 2", "omega unital slot 3"};
    for (int s = 0; s < 3; ++s) {
      SparseTensor w = contract(u, H.omega.values, {{0, s}});
      rep.add(compare_maps(names[s], w, ee, 2, L(2), {}));
    }
  }
  {  // 3-cocycle identity as arity-4 convolution equality
    Functional lhs = convolve(H.co, omega_comp(H, "HHm"), omega_comp(H, "mHH"));
    Functional rhs = convolve(H.co, convolve(H.co, omega_comp(H, "eps_w"), omega_comp(H, "HmH")),
                              omega_comp(H, "w_eps"));
    rep.add(compare_maps("3-cocycle", lhs.values, rhs.values, 4, L(4), {}));
  }
  {  // quasi-associativity m(H⊗m) * ω = ω * m(m⊗H)
    Expr lhs = Expr::identity_map(F, {{"h", n}, {"k", n}, {"l", n}});
    H.comul(lhs, "h", "h1", "h2");
    H.comul(lhs, "k", "k1", "k2");
    H.comul(lhs, "l", "l1", "l2");
    H.mul(lhs, "k1", "l1", "kl");
    H.mul(lhs, "h1", "kl", "res");
    H.omega_weight(lhs, "h2", "k2", "l2");
    Expr rhs = Expr::identity_map(F, {{"h", n}, {"k", n}, {"l", n}});
    H.comul(rhs, "h", "h1", "h2");
    H.comul(rhs, "k", "k1", "k2");
    H.comul(rhs, "l", "l1", "l2");
    H.omega_weight(rhs, "h1", "k1", "l1");
    H.mul(rhs, "h2", "k2", "hk");
    H.mul(rhs, "hk", "l2", "res");
    rep.add(compare_maps("quasi-associativity",
                         lhs.extract({"h.in", "k.in", "l.in", "res"}),
                         rhs.extract({"h.in", "k.in", "l.in", "res"}), 3, L(3), L(1)));
  }
  {  // cached ω⁻¹ really is the convolution inverse
    Functional eps3 = counit_power(H.co, 3);
    bool ok = convolve(H.co, H.omega, H.omega_inv).values == eps3.values &&
              convolve(H.co, H.omega_inv, H.omega).values == eps3.values;
    if (ok)
      rep.pass("omega inverse cached");
    else
      rep.fail("omega inverse cached", "cached inverse wrong");
  }
  return rep;
}

Report check_dqb_morphism(const DQBMorphism& f) {
  Report rep;
  rep.subject = "dqb morphism";
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (f.matrix.rows() != T.dim() || f.matrix.cols() != S.dim())
    throw Error("dqb morphism: matrix shape mismatch");
  const Field& F = S.field();
  SparseTensor a = f.matrix.to_map_tensor();  // (src, dst)
  auto Ls = [&](int k) { return S.co.label_legs(k); };
  auto Lt = [&](int k) { return T.co.label_legs(k); };

  {  // coalgebra map
    Expr lhs = Expr::identity_map(F, {{"h", S.dim()}});
    lhs.apply(a, {"h"}, {0}, {"ah"});
    T.comul(lhs, "ah", "x", "y");
    Expr rhs = Expr::identity_map(F, {{"h", S.dim()}});
    S.comul(rhs, "h", "h1", "h2");
    rhs.apply(a, {"h1"}, {0}, {"x"});
    rhs.apply(a, {"h2"}, {0}, {"y"});
    rep.add(compare_maps("comultiplicative", lhs.extract({"h.in", "x", "y"}),
                         rhs.extract({"h.in", "x", "y"}), 1, Ls(1), Lt(2)));

    Expr le = Expr::identity_map(F, {{"h", S.dim()}});
    le.apply(a, {"h"}, {0}, {"ah"});
    T.counit_weight(le, "ah");
    Expr re = Expr::identity_map(F, {{"h", S.dim()}});
    S.counit_weight(re, "h");
    rep.add(compare_maps("counitary", le.extract({"h.in"}), re.extract({"h.in"}), 1, Ls(1), {}));
  }
  {  // multiplicative, unital
    Expr lhs = Expr::identity_map(F, {{"h", S.dim()}, {"k", S.dim()}});
    lhs.apply(a, {"h"}, {0}, {"ah"});
    lhs.apply(a, {"k"}, {0}, {"ak"});
    T.mul(lhs, "ah", "ak", "p");
    Expr rhs = Expr::identity_map(F, {{"h", S.dim()}, {"k", S.dim()}});
    S.mul(rhs, "h", "k", "hk");
    rhs.apply(a, {"hk"}, {0}, {"p"});
    rep.add(compare_maps("multiplicative", lhs.extract({"h.in", "k.in", "p"}),
                         rhs.extract({"h.in", "k.in", "p"}), 2, Ls(2), Lt(1)));

    Vec au = f.matrix.apply(S.unit);
    if (au == T.unit)
      rep.pass("unital");
    else
      rep.fail("unital", "alpha(1) = " + vec_str(T.co, au));
  }
  {  // ω′(α⊗α⊗α) = ω
    Expr lhs = Expr::identity_map(F, {{"h", S.dim()}, {"k", S.dim()}, {"l", S.dim()}});
    lhs.apply(a, {"h"}, {0}, {"ah"});
    lhs.apply(a, {"k"}, {0}, {"ak"});
    lhs.apply(a, {"l"}, {0}, {"al"});
    T.omega_weight(lhs, "ah", "ak", "al");
    rep.add(compare_maps("reassociator compatible", lhs.extract({"h.in", "k.in", "l.in"}),
                         S.omega.values, 3, Ls(3), {}));
  }
  return rep;
}

void GroupCocycleData::validate() const {
  if (order <= 0) throw Error("group: empty");
  if ((int)mul.size() != order) throw Error("group: bad table");
  for (const auto& row : mul) {
    if ((int)row.size() != order) throw Error("group: bad table");
    for (int v : row)
      if (v < 0 || v >= order) throw Error("group: table entry out of range");
  }
  for (int a = 0; a < order; ++a)
    if (mul[0][a] != a || mul[a][0] != a)
      throw Error("group: element 0 is not a two-sided unit");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error("group: non-associative table at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  if ((int)theta.size() != order * order * order) throw Error("group: theta table misshaped");
  for (const auto& v : theta)
    if (v.is_zero()) throw Error("group: theta has a zero value");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (!theta_at(a, 0, b).is_one())
        throw Error("group: theta not normalized at (" + std::to_string(a) + ",1," +
                    std::to_string(b) + ")");
  // θ(h,k,l)θ(g,hk,l)θ(g,h,k) = θ(g,h,kl)θ(gh,k,l)
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int k = 0; k < order; ++k)
        for (int l = 0; l < order; ++l) {
          Scalar lhs = theta_at(h, k, l) * theta_at(g, mul[h][k], l) * theta_at(g, h, k);
          Scalar rhs = theta_at(g, h, mul[k][l]) * theta_at(mul[g][h], k, l);
          if (!(lhs == rhs))
            throw Error("group: 3-cocycle identity fails at (" + std::to_string(g) + "," +
                        std::to_string(h) + "," + std::to_string(k) + "," + std::to_string(l) +
                        "): " + lhs.str() + " vs " + rhs.str());
        }
}

std::optional<std::vector<int>> GroupCocycleData::inverse_table() const {
  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (mul[a][b] == 0 && mul[b][a] == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) return std::nullopt;
  }
  return inv;
}

DualQuasiBialgebra from_group_cocycle(const GroupCocycleData& d) {
  d.validate();
  std::vector<std::string> labels = d.labels;
  if ((int)labels.size() != d.order) {
    labels.clear();
    for (int i = 0; i < d.order; ++i) labels.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  }
  Coalgebra co = group_like_coalgebra(d.field, labels);
  SparseTensor mult(d.field, {d.order, d.order, d.order});
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b) mult.set({a, b, d.mul[a][b]}, Scalar::one(d.field));
  Vec unit(d.order, Scalar::zero(d.field));
  unit[0] = Scalar::one(d.field);
  SparseTensor om(d.field, {d.order, d.order, d.order});
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b)
      for (int c = 0; c < d.order; ++c) om.set({a, b, c}, d.theta_at(a, b, c));
  auto H = DualQuasiBialgebra::make(std::move(co), std::move(mult), std::move(unit), std::move(om));
  auto rep = check_dqb(H);
  if (!rep.ok())
    throw Error("group cocycle data does not yield a dual quasi-bialgebra: " +
                rep.first_failure()->name + " " + rep.first_failure()->witness);
  return H;
}

std::optional<Matrix> group_preantipode(const GroupCocycleData& d, const DualQuasiBialgebra& H) {
  auto inv = d.inverse_table();
  if (!inv) return std::nullopt;
  Matrix S(d.field, d.order, d.order);
  for (int g = 0; g < d.order; ++g) {
    int gi = (*inv)[g];
    S.at(gi, g) = H.omega_at(g, gi, g).inv();
  }
  return S;
}

}  // namespace qk
