#include "qk/graded.hpp"

namespace qk {

CoradicalCertificate certify_coradical(const DualQuasiBialgebra& A,
                                       const std::vector<Vec>& grouplikes) {
  CoradicalCertificate cert;
  for (const auto& g : grouplikes)
    if (!verify_grouplike(A.co, g)) {
      cert.note = "declared element " + vec_str(A.co, g) + " is not grouplike";
      return cert;
    }
  Subspace D = Subspace::span(A.field(), A.dim(), grouplikes);
  if (D.dim() != (int)grouplikes.size()) {
    cert.note = "declared grouplikes are linearly dependent";
    return cert;
  }
  cert.coradical = D;
  auto filt = wedge_filtration(A.co, D);
  if (!filt) {
    cert.note = "declared, exhaustion failed: wedge filtration stabilizes below A";
    return cert;
  }
  cert.filtration = *filt;
  cert.certified = true;
  cert.note = "certified coradical (cosemisimple pointed start, wedge exhaustion)";
  return cert;
}

GradedDQBResult gr_dqb(const DualQuasiBialgebra& A, const Filtration& F, bool certified) {
  const Field& K = A.field();
  // layer-0 closure under m and u
  const Subspace& A0 = F.layers.front();
  if (!A0.contains(A.unit)) throw Error("gr: 1_A is not in layer 0");
  for (const auto& x : A0.basis())
    for (const auto& y : A0.basis())
      if (!A0.contains(A.multiply(x, y)))
        throw Error("gr: layer 0 is not closed under multiplication (witness " +
                    vec_str(A.co, x) + " * " + vec_str(A.co, y) + ")");
  // algebra filtration: A_a · A_b ⊆ A_{a+b}
  int top = F.top_degree();
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) {
      const Subspace& target = F.layers[std::min(a + b, top)];
      for (const auto& x : F.layers[a].basis())
        for (const auto& y : F.layers[b].basis())
          if (!target.contains(A.multiply(x, y)))
            throw Error("gr: algebra filtration fails: A_" + std::to_string(a) + "*A_" +
                        std::to_string(b) + " not inside A_" + std::to_string(a + b) +
                        " (witness " + vec_str(A.co, x) + " * " + vec_str(A.co, y) + ")");
    }

  GradedCoalgebra G = graded_coalgebra(A.co, F);
  int N = (int)G.reps.size();
  Matrix repm = Matrix::from_columns(K, A.dim(), G.reps);
  Matrix repinv = *repm.inverse();

  SparseTensor mult(K, {N, N, N});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vec prod = A.multiply(G.reps[i], G.reps[j]);
      Vec c = repinv.apply(prod);
      for (int p = 0; p < N; ++p) {
        if (c[p].is_zero()) continue;
        if (G.degree[p] == G.degree[i] + G.degree[j]) mult.set({i, j, p}, c[p]);
        // components of lower degree die in the quotient; higher cannot occur
        else if (G.degree[p] > G.degree[i] + G.degree[j])
          throw Error("gr: product climbs the filtration");
      }
    }
  Vec unit = repinv.apply(A.unit);
  for (int p = 0; p < N; ++p)
    if (!unit[p].is_zero() && G.degree[p] != 0) throw Error("gr: unit has positive degree");

  SparseTensor om(K, {N, N, N});
  for (int i = 0; i < N; ++i) {
    if (G.degree[i] != 0) continue;
    for (int j = 0; j < N; ++j) {
      if (G.degree[j] != 0) continue;
      for (int k = 0; k < N; ++k) {
        if (G.degree[k] != 0) continue;
        // ω_A on the representatives
        Scalar v = Scalar::zero(K);
        for (int a = 0; a < A.dim(); ++a) {
          if (G.reps[i][a].is_zero()) continue;
          for (int b = 0; b < A.dim(); ++b) {
            if (G.reps[j][b].is_zero()) continue;
            for (int c = 0; c < A.dim(); ++c)
              if (!G.reps[k][c].is_zero())
                v += G.reps[i][a] * G.reps[j][b] * G.reps[k][c] * A.omega_at(a, b, c);
          }
        }
        if (!v.is_zero()) om.set({i, j, k}, v);
      }
    }
  }

  GradedDQBResult out;
  out.gr = DualQuasiBialgebra::make(G.co, std::move(mult), std::move(unit), std::move(om));
  out.degree = G.degree;
  out.reps = G.reps;
  out.certified = certified;
  return out;
}

GrProjection gr_projection(const DualQuasiBialgebra& A, const GradedDQBResult& G) {
  const Field& K = A.field();
  int N = (int)G.reps.size();
  std::vector<int> zero_idx;
  for (int i = 0; i < N; ++i)
    if (G.degree[i] == 0) zero_idx.push_back(i);
  int n0 = (int)zero_idx.size();

  // layer-0 sub-dual-quasi-bialgebra on the degree-0 representatives
  Matrix repm = Matrix::from_columns(K, A.dim(), G.reps);
  Matrix repinv = *repm.inverse();

  Coalgebra co;
  co.field = K;
  co.dim = n0;
  for (int i = 0; i < n0; ++i) co.labels.push_back(vec_str(A.co, G.reps[zero_idx[i]]));
  co.delta = SparseTensor(K, {n0, n0, n0});
  co.counit.assign(n0, Scalar::zero(K));
  SparseTensor mult(K, {n0, n0, n0});
  Vec unit(n0, Scalar::zero(K));
  SparseTensor om(K, {n0, n0, n0});

  auto coords0 = [&](const Vec& v) {
    Vec c = repinv.apply(v);
    Vec out(n0, Scalar::zero(K));
    for (int i = 0; i < n0; ++i) out[i] = c[zero_idx[i]];
    for (int p = 0; p < N; ++p)
      if (G.degree[p] != 0 && !c[p].is_zero())
        throw Error("gr projection: element leaves layer 0");
    return out;
  };

  Matrix dm(K, A.dim() * A.dim(), A.dim());
  for (const auto& [k, v] : A.co.delta.entries()) dm.at(k[1] * A.dim() + k[2], k[0]) = v;
  for (int i = 0; i < n0; ++i) {
    const Vec& x = G.reps[zero_idx[i]];
    Vec dx = dm.apply(x);
    // expand Δ(x) over rep⊗rep, all components are degree (0,0)
    for (int a = 0; a < A.dim(); ++a)
      for (int b = 0; b < A.dim(); ++b) {
        const Scalar& c = dx[a * A.dim() + b];
        if (c.is_zero()) continue;
        Vec ca = repinv.apply([&] {
          Vec e(A.dim(), Scalar::zero(K));
          e[a] = Scalar::one(K);
          return e;
        }());
        Vec cb = repinv.apply([&] {
          Vec e(A.dim(), Scalar::zero(K));
          e[b] = Scalar::one(K);
          return e;
        }());
        for (int p = 0; p < n0; ++p)
          for (int q = 0; q < n0; ++q) {
            Scalar w = c * ca[zero_idx[p]] * cb[zero_idx[q]];
            if (!w.is_zero()) co.delta.add({i, p, q}, w);
          }
      }
    for (int a = 0; a < A.dim(); ++a) co.counit[i] += A.co.counit[a] * x[a];
    for (int j = 0; j < n0; ++j) {
      Vec prod = A.multiply(x, G.reps[zero_idx[j]]);
      Vec c = coords0(prod);
      for (int p = 0; p < n0; ++p)
        if (!c[p].is_zero()) mult.set({i, j, p}, c[p]);
    }
  }
  unit = coords0(A.unit);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      for (int k = 0; k < n0; ++k) {
        Scalar v = Scalar::zero(K);
        const Vec &x = G.reps[zero_idx[i]], &y = G.reps[zero_idx[j]], &z = G.reps[zero_idx[k]];
        for (int a = 0; a < A.dim(); ++a) {
          if (x[a].is_zero()) continue;
          for (int b = 0; b < A.dim(); ++b) {
            if (y[b].is_zero()) continue;
            for (int c = 0; c < A.dim(); ++c)
              if (!z[c].is_zero()) v += x[a] * y[b] * z[c] * A.omega_at(a, b, c);
          }
        }
        if (!v.is_zero()) om.set({i, j, k}, v);
      }

  GrProjection out;
  out.H0 = DualQuasiBialgebra::make(std::move(co), std::move(mult), std::move(unit), std::move(om));
  out.sigma = Matrix(K, N, n0);
  for (int i = 0; i < n0; ++i) out.sigma.at(zero_idx[i], i) = Scalar::one(K);
  out.pi = Matrix(K, n0, N);
  for (int i = 0; i < n0; ++i) out.pi.at(i, zero_idx[i]) = Scalar::one(K);
  return out;
}

}  // namespace qk
