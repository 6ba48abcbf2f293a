#pragma once

// Programmatic copies of the shipped fixtures, plus helpers shared by the
// test binaries and the acceptance suite.

#include <fstream>
#include <random>
#include <sstream>

#include "qk/bosonization.hpp"
#include "qk/crossed.hpp"
#include "qk/graded.hpp"
#include "qk/io.hpp"
#include "qk/preantipode.hpp"

namespace qkt {

using namespace qk;

inline GroupCocycleData z2_data(const Field& f, bool twisted) {
  GroupCocycleData g;
  g.field = f;
  g.order = 2;
  g.labels = {"1", "g"};
  g.mul = {{0, 1}, {1, 0}};
  g.theta.assign(8, Scalar::one(f));
  if (twisted) g.theta_at(1, 1, 1) = -Scalar::one(f);
  return g;
}

// group algebra of the two-element idempotent monoid {1, e}, trivial cocycle
inline GroupCocycleData idempotent_monoid_data(const Field& f) {
  GroupCocycleData g;
  g.field = f;
  g.order = 2;
  g.labels = {"1", "e"};
  g.mul = {{0, 1}, {1, 1}};
  g.theta.assign(8, Scalar::one(f));
  return g;
}

// standard cocycle on Z_n: theta(a,b,c) = zeta^{a*floor((b+c)/n)}
inline GroupCocycleData zn_standard_data(const Field& f, int n, const Scalar& zeta) {
  GroupCocycleData g;
  g.field = f;
  g.order = n;
  for (int i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  g.mul.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  g.theta.assign(n * n * n, Scalar::one(f));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int e = a * ((b + c) / n);
        Scalar v = Scalar::one(f);
        for (int k = 0; k < e; ++k) v *= zeta;
        g.theta_at(a, b, c) = v;
      }
  return g;
}

inline DualQuasiBialgebra make_kz2(const Field& f) { return from_group_cocycle(z2_data(f, false)); }
inline DualQuasiBialgebra make_kz2_twisted(const Field& f) {
  return from_group_cocycle(z2_data(f, true));
}
inline DualQuasiBialgebra make_monoid2(const Field& f) {
  return from_group_cocycle(idempotent_monoid_data(f));
}

// the Sweedler diagram: R = k[x]/(x²), Δx = x⊗1+1⊗x, ρ(x) = g⊗x, g⊳x = -x
inline BraidedBialgebra sweedler_R(const DualQuasiBialgebra* H) {
  const Field& f = H->field();
  Scalar one = Scalar::one(f);
  BraidedBialgebra R;
  R.carrier.com.over = H;
  R.carrier.com.dim = 2;
  R.carrier.com.labels = {"1", "x"};
  R.carrier.com.coaction = SparseTensor(f, {2, 2, 2});
  R.carrier.com.coaction.set({0, 0, 0}, one);  // ρ(1) = 1⊗1
  R.carrier.com.coaction.set({1, 1, 1}, one);  // ρ(x) = g⊗x
  R.carrier.action = SparseTensor(f, {2, 2, 2});
  R.carrier.action.set({0, 0, 0}, one);   // 1⊳1 = 1
  R.carrier.action.set({0, 1, 1}, one);   // 1⊳x = x
  R.carrier.action.set({1, 0, 0}, one);   // g⊳1 = 1
  R.carrier.action.set({1, 1, 1}, -one);  // g⊳x = -x
  R.m = SparseTensor(f, {2, 2, 2});
  R.m.set({0, 0, 0}, one);
  R.m.set({0, 1, 1}, one);
  R.m.set({1, 0, 1}, one);  // x² = 0
  R.u = {one, Scalar::zero(f)};
  R.delta = SparseTensor(f, {2, 2, 2});
  R.delta.set({0, 0, 0}, one);
  R.delta.set({1, 1, 0}, one);
  R.delta.set({1, 0, 1}, one);
  R.eps = {one, Scalar::zero(f)};
  return R;
}

// the 1-dim semion object over k^θZ₂ when i = sqrt(-1) exists in the field
inline YDModule semion(const DualQuasiBialgebra* H, const Scalar& i) {
  const Field& f = H->field();
  YDModule V;
  V.com.over = H;
  V.com.dim = 1;
  V.com.labels = {"x"};
  V.com.coaction = SparseTensor(f, {1, 2, 1});
  V.com.coaction.set({0, 1, 0}, Scalar::one(f));  // ρ(x) = g⊗x
  V.action = SparseTensor(f, {2, 1, 1});
  V.action.set({0, 0, 0}, Scalar::one(f));
  V.action.set({1, 0, 0}, i);  // g⊳x = i·x
  return V;
}

// random invertible matrix over F5 with a deterministic generator
inline Matrix random_gl(const Field& f, std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> entry(0, 4);
  while (true) {
    Matrix m(f, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = Scalar::from_int(f, entry(rng));
    if (m.inverse()) return m;
  }
}

// builds a valid crossed module over a cyclic group via a projective
// representation of the generator on each homogeneous block
inline CrossedGModule random_crossed(std::mt19937_64& rng, const GroupCocycleData& G, int dim) {
  const Field& f = G.field;
  auto inv = *G.inverse_table();
  int o = G.order;
  std::uniform_int_distribution<int> graded(0, o - 1);
  CrossedGModule V;
  V.group = &G;
  V.dim = dim;
  V.grade.resize(dim);
  for (int i = 0; i < dim; ++i) {
    V.grade[i] = graded(rng);
    V.labels.push_back("v" + std::to_string(i));
  }
  // the 2-cocycle β_g(h,l) twisting the action on the grade-g block
  auto beta = [&](int g, int h, int l) {
    int lgl = G.mul[G.mul[l][g]][inv[l]];
    int hlgl = G.mul[G.mul[h][lgl]][inv[h]];
    return G.theta_at(hlgl, h, l) * G.theta_at(h, l, g) / G.theta_at(h, lgl, l);
  };
  // generator index 1 generates the cyclic group (true for zn tables)
  int gen = 1 % o;
  // choose the action of the generator blockwise: scalar c_i with the right
  // power condition, conjugated by a random change of basis
  std::vector<Matrix> action(o, Matrix(f, dim, dim));
  // compute, per grade g, the required n-th power: Π_{k} β_g(gen, gen^k)
  // closing the projective representation of <gen>
  Matrix P = random_gl(f, rng, dim), Pinv = *P.inverse();
  Matrix gen_diag(f, dim, dim);
  std::uniform_int_distribution<int> unit(1, 4);
  for (int i = 0; i < dim; ++i) {
    int g = V.grade[i];
    // order of gen and the power constraint on this block
    Scalar need = Scalar::one(f);
    int e = gen, len = 1;
    while (e != 0) {
      e = G.mul[e][gen];
      ++len;
    }
    Scalar prod = Scalar::one(f);
    int cur = 0;
    for (int k = 0; k < len - 0; ++k) {
      // β_g(gen, gen^k) for k = 0..len-1 with gen^len = 1
      prod *= beta(g, gen, cur);
      cur = G.mul[gen][cur];
    }
    need = prod;
    // pick c with c^len = need: try all field units (f is tiny)
    Scalar chosen = Scalar::zero(f);
    for (int c = 1; c < 5; ++c) {
      Scalar cs = Scalar::from_int(f, c), pw = Scalar::one(f);
      for (int k = 0; k < len; ++k) pw *= cs;
      if (pw == need) {
        std::uniform_int_distribution<int> coin(0, 1);
        if (chosen.is_zero() || coin(rng)) chosen = cs;
      }
    }
    if (chosen.is_zero()) return random_crossed(rng, G, dim);  // no root: reroll grades
    gen_diag.at(i, i) = chosen;
  }
  // abelian group: conjugation preserves grades only if P is block diagonal
  // per grade; enforce that by zeroing cross-grade entries
  Matrix Pb(f, dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (V.grade[i] == V.grade[j]) Pb.at(i, j) = P.at(i, j);
  if (!Pb.inverse()) return random_crossed(rng, G, dim);
  Matrix T = Pb * gen_diag * *Pb.inverse();

  // extend to the whole group: action(gen^{k+1}) = β(..)⁻¹ action(gen)·action(gen^k)
  action[0] = Matrix::identity(f, dim);
  int cur = gen;
  Matrix curm = T;
  while (cur != 0) {
    action[cur] = curm;
    // next: gen^{k+1} with the projective correction, blockwise
    Matrix next = T * curm;
    Matrix corr(f, dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (!next.at(i, j).is_zero()) corr.at(i, j) = next.at(i, j) / beta(V.grade[j], gen, cur);
    curm = corr;
    cur = G.mul[gen][cur];
  }
  V.action = action;
  return V;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(QK_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Workspace load_fixture(const std::string& name) {
  return parse_workspace(read_file(fixture_path(name)), std::nullopt);
}

inline Vec basis_vec(const Field& f, int dim, int i) {
  Vec v(dim, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

inline Scalar q(const Field& f, long long num, long long den = 1) {
  return Scalar::from_rational(f, BigRational(num, den));
}

}  // namespace qkt
