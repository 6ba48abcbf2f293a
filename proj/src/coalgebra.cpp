#include "qk/coalgebra.hpp"

namespace qk {

int flatten(const Index& idx, const Index& shape) {
  int f = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) f = f * shape[i] + idx[i];
  return f;
}

Index unflatten(int flat, const Index& shape) {
  Index idx(shape.size());
  for (int i = (int)shape.size() - 1; i >= 0; --i) {
    idx[i] = flat % shape[i];
    flat /= shape[i];
  }
  return idx;
}

std::vector<std::vector<std::string>> Coalgebra::label_legs(int count) const {
  return std::vector<std::vector<std::string>>(count, labels);
}

void Coalgebra::comul(Expr& e, const std::string& leg, const std::string& l1,
                      const std::string& l2) const {
  e.apply(delta, {leg}, {0}, {l1, l2});
}

void Coalgebra::counit_weight(Expr& e, const std::string& leg) const {
  e.weight(from_vector(field, counit), {leg}, {0});
}

Coalgebra group_like_coalgebra(Field f, const std::vector<std::string>& labels) {
  Coalgebra C;
  C.field = f;
  C.dim = (int)labels.size();
  C.labels = labels;
  C.delta = SparseTensor(f, {C.dim, C.dim, C.dim});
  C.counit.assign(C.dim, Scalar::one(f));
  for (int i = 0; i < C.dim; ++i) C.delta.set({i, i, i}, Scalar::one(f));
  return C;
}

std::string vec_str(const Coalgebra& C, const Vec& v) {
  return from_vector(C.field, v).str({C.labels});
}

Report check_coalgebra(const Coalgebra& C) {
  Report rep;
  rep.subject = "coalgebra";
  if (C.delta.shape() != Index{C.dim, C.dim, C.dim} || (int)C.counit.size() != C.dim)
    throw Error("coalgebra: malformed structure constants");

  auto legs1 = C.label_legs(1);
  {
    Expr lhs = Expr::identity_map(C.field, {{"h", C.dim}});
    C.comul(lhs, "h", "h1", "h2");
    C.comul(lhs, "h1", "a", "b");
    lhs.rename("h2", "c");
    Expr rhs = Expr::identity_map(C.field, {{"h", C.dim}});
    C.comul(rhs, "h", "h1", "h2");
    C.comul(rhs, "h2", "b", "c");
    rhs.rename("h1", "a");
    rep.add(compare_maps("coassociativity", lhs.extract({"h.in", "a", "b", "c"}),
                         rhs.extract({"h.in", "a", "b", "c"}), 1, legs1, C.label_legs(3)));
  }
  {
    Expr l = Expr::identity_map(C.field, {{"h", C.dim}});
    C.comul(l, "h", "h1", "h2");
    C.counit_weight(l, "h1");
    Expr r = Expr::identity_map(C.field, {{"h", C.dim}});
    C.comul(r, "h", "h1", "h2");
    C.counit_weight(r, "h2");
    SparseTensor id = Expr::identity_map(C.field, {{"h", C.dim}}).extract({"h.in", "h"});
    rep.add(compare_maps("counit left", l.extract({"h.in", "h2"}), id, 1, legs1, legs1));
    rep.add(compare_maps("counit right", r.extract({"h.in", "h1"}), id, 1, legs1, legs1));
  }
  return rep;
}

Functional counit_power(const Coalgebra& C, int r) {
  Functional f;
  f.arity = r;
  Index shape(r, C.dim);
  f.values = SparseTensor(C.field, shape);
  SparseTensor t(C.field, {});
  t.set({}, Scalar::one(C.field));
  for (int i = 0; i < r; ++i) t = outer(t, from_vector(C.field, C.counit));
  f.values = t;
  return f;
}

Functional convolve(const Coalgebra& C, const Functional& f, const Functional& g) {
  if (f.arity != g.arity) throw Error("convolve: arity mismatch");
  int r = f.arity;
  std::vector<std::pair<std::string, int>> io;
  for (int i = 0; i < r; ++i) io.push_back({"x" + std::to_string(i), C.dim});
  Expr e = Expr::identity_map(C.field, io);
  std::vector<std::string> first, second;
  for (int i = 0; i < r; ++i) {
    std::string x = "x" + std::to_string(i);
    C.comul(e, x, x + ".1", x + ".2");
    first.push_back(x + ".1");
    second.push_back(x + ".2");
  }
  std::vector<int> axes(r);
  for (int i = 0; i < r; ++i) axes[i] = i;
  e.weight(f.values, first, axes);
  e.weight(g.values, second, axes);
  std::vector<std::string> order;
  for (int i = 0; i < r; ++i) order.push_back("x" + std::to_string(i) + ".in");
  Functional h;
  h.arity = r;
  h.values = e.extract(order);
  return h;
}

std::optional<Functional> convolution_inverse(const Coalgebra& C, const Functional& f) {
  int r = f.arity;
  int N = 1;
  for (int i = 0; i < r; ++i) N *= C.dim;

  // coefficient of g(y) in (f*g)(x): comultiply every leg, weigh f on the
  // first copies, keep the second copies as the y-axes
  std::vector<std::pair<std::string, int>> io;
  for (int i = 0; i < r; ++i) io.push_back({"x" + std::to_string(i), C.dim});
  Expr e = Expr::identity_map(C.field, io);
  std::vector<std::string> first, second;
  for (int i = 0; i < r; ++i) {
    std::string x = "x" + std::to_string(i);
    C.comul(e, x, x + ".1", x + ".2");
    first.push_back(x + ".1");
    second.push_back(x + ".2");
  }
  std::vector<int> axes(r);
  for (int i = 0; i < r; ++i) axes[i] = i;
  e.weight(f.values, first, axes);
  std::vector<std::string> order;
  for (int i = 0; i < r; ++i) order.push_back("x" + std::to_string(i) + ".in");
  order.insert(order.end(), second.begin(), second.end());
  SparseTensor coeff = e.extract(order);  // axes: x (r), y (r)

  Matrix M(C.field, N, N);
  Index shape(r, C.dim);
  for (const auto& [k, v] : coeff.entries()) {
    Index xi(k.begin(), k.begin() + r), yi(k.begin() + r, k.end());
    M.at(flatten(xi, shape), flatten(yi, shape)) = v;
  }
  Functional eps = counit_power(C, r);
  Vec rhs(N, Scalar::zero(C.field));
  for (const auto& [k, v] : eps.values.entries()) rhs[flatten(k, shape)] = v;

  auto sol = solve_linear(M, rhs);
  if (!sol) return std::nullopt;
  Functional g;
  g.arity = r;
  g.values = SparseTensor(C.field, shape);
  for (int i = 0; i < N; ++i)
    if (!(*sol)[i].is_zero()) g.values.set(unflatten(i, shape), (*sol)[i]);

  // in a finite-dimensional convolution algebra a one-sided inverse is
  // two-sided; still verified here
  if (!(convolve(C, f, g).values == eps.values) || !(convolve(C, g, f).values == eps.values))
    return std::nullopt;
  return g;
}

bool verify_grouplike(const Coalgebra& C, const Vec& a) {
  SparseTensor av = from_vector(C.field, a);
  SparseTensor da = contract(av, C.delta, {{0, 0}});
  SparseTensor aa = outer(av, av);
  if (!(da == aa)) return false;
  Scalar e = Scalar::zero(C.field);
  for (int i = 0; i < C.dim; ++i) e += C.counit[i] * a[i];
  return e.is_one();
}

std::vector<Vec> find_basis_grouplikes(const Coalgebra& C) {
  std::vector<Vec> out;
  for (int i = 0; i < C.dim; ++i) {
    Vec a(C.dim, Scalar::zero(C.field));
    a[i] = Scalar::one(C.field);
    if (verify_grouplike(C, a)) out.push_back(std::move(a));
  }
  return out;
}

namespace {
// Δ as a matrix k^n -> k^{n²}
Matrix delta_matrix(const Coalgebra& C) {
  Matrix m(C.field, C.dim * C.dim, C.dim);
  for (const auto& [k, v] : C.delta.entries()) m.at(k[1] * C.dim + k[2], k[0]) = v;
  return m;
}

Subspace tensor_square(const Coalgebra& C, const Subspace& A, const Subspace& B) {
  std::vector<Vec> gens;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) {
      Vec v(C.dim * C.dim, Scalar::zero(C.field));
      for (int i = 0; i < C.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < C.dim; ++j)
          if (!b[j].is_zero()) v[i * C.dim + j] = a[i] * b[j];
      }
      gens.push_back(std::move(v));
    }
  return Subspace::span(C.field, C.dim * C.dim, gens);
}
}  // namespace

bool is_subcoalgebra(const Coalgebra& C, const Subspace& D) {
  Matrix dm = delta_matrix(C);
  Subspace dd = tensor_square(C, D, D);
  for (const auto& b : D.basis())
    if (!dd.contains(dm.apply(b))) return false;
  return true;
}

std::optional<Filtration> wedge_filtration(const Coalgebra& C, const Subspace& D) {
  if (!is_subcoalgebra(C, D)) throw Error("wedge_filtration: starting space is not a subcoalgebra");
  Matrix dm = delta_matrix(C);
  Subspace full = Subspace::full(C.field, C.dim);
  Filtration F;
  F.layers.push_back(D);
  for (int step = 0; step < C.dim; ++step) {
    const Subspace& An = F.layers.back();
    if (An.dim() == C.dim) return F;
    // A_{n+1} = Δ⁻¹(A⊗A_n + A₀⊗A)
    Subspace W = tensor_square(C, full, An).sum(tensor_square(C, D, full));
    Quotient q = Quotient::by(W);
    Matrix comp = q.projection() * dm;  // A -> (A⊗A)/W
    auto ker = kernel_basis(comp);
    Subspace next = Subspace::span(C.field, C.dim, ker);
    if (next.dim() == An.dim()) return std::nullopt;  // stabilized short of A
    F.layers.push_back(next);
  }
  return F.layers.back().dim() == C.dim ? std::optional<Filtration>(F) : std::nullopt;
}

Report check_filtration(const Coalgebra& C, const Filtration& F) {
  Report rep;
  rep.subject = "filtration";
  Matrix dm = delta_matrix(C);
  for (std::size_t i = 0; i + 1 < F.layers.size(); ++i) {
    if (!F.layers[i + 1].contains(F.layers[i]))
      rep.fail("ascending", "layer " + std::to_string(i) + " not inside layer " + std::to_string(i + 1));
  }
  if (F.layers.back().dim() != C.dim) rep.fail("exhausts", "top layer is proper");
  for (std::size_t nlay = 0; nlay < F.layers.size(); ++nlay) {
    // Σ_{i+j=n} A_i⊗A_j
    Subspace target(Subspace::span(C.field, C.dim * C.dim, {}));
    for (std::size_t i = 0; i <= nlay; ++i) {
      std::size_t j = nlay - i;
      std::size_t ii = std::min(i, F.layers.size() - 1), jj = std::min(j, F.layers.size() - 1);
      target = target.sum(tensor_square(C, F.layers[ii], F.layers[jj]));
    }
    bool okl = true;
    for (const auto& b : F.layers[nlay].basis())
      if (!target.contains(dm.apply(b))) okl = false;
    if (okl)
      rep.pass("delta(A_" + std::to_string(nlay) + ") contained");
    else
      rep.fail("delta(A_" + std::to_string(nlay) + ") contained", "wedge compatibility broken");
  }
  if (rep.records.empty() || rep.ok()) rep.pass("filtration valid");
  return rep;
}

GradedCoalgebra graded_coalgebra(const Coalgebra& C, const Filtration& F) {
  auto frep = check_filtration(C, F);
  if (!frep.ok()) throw Error("graded_coalgebra: invalid filtration: " + frep.first_failure()->witness);

  GradedCoalgebra G;
  // echelon-complement representatives per layer
  for (std::size_t n = 0; n < F.layers.size(); ++n) {
    const Subspace& An = F.layers[n];
    std::vector<int> prev_pivots =
        n == 0 ? std::vector<int>{} : F.layers[n - 1].pivots();
    for (int r = 0; r < An.dim(); ++r) {
      int piv = An.pivots()[r];
      if (std::find(prev_pivots.begin(), prev_pivots.end(), piv) != prev_pivots.end()) continue;
      G.degree.push_back((int)n);
      G.reps.push_back(An.basis()[r]);
    }
  }
  int N = (int)G.reps.size();
  if (N != C.dim) throw Error("graded_coalgebra: representatives do not span");

  // rep coordinates: column i = rep_i; invert to express arbitrary vectors
  Matrix repm = Matrix::from_columns(C.field, C.dim, G.reps);
  auto repinv = repm.inverse();
  if (!repinv) throw Error("graded_coalgebra: representative basis degenerate");

  Coalgebra gr;
  gr.field = C.field;
  gr.dim = N;
  for (int i = 0; i < N; ++i)
    gr.labels.push_back("[" + vec_str(C, G.reps[i]) + "]" + std::to_string(G.degree[i]));
  gr.delta = SparseTensor(C.field, {N, N, N});
  gr.counit.assign(N, Scalar::zero(C.field));

  Matrix dm = delta_matrix(C);
  for (int i = 0; i < N; ++i) {
    // counit: δ_{n,0} ε_A(x)
    if (G.degree[i] == 0) {
      Scalar e = Scalar::zero(C.field);
      for (int j = 0; j < C.dim; ++j) e += C.counit[j] * G.reps[i][j];
      gr.counit[i] = e;
    }
    // Δ in rep coordinates; keep bidegrees summing to deg(i)
    Vec dx = dm.apply(G.reps[i]);
    for (int a = 0; a < C.dim; ++a)
      for (int b = 0; b < C.dim; ++b) {
        const Scalar& c = dx[a * C.dim + b];
        if (c.is_zero()) continue;
        // expand e_a⊗e_b in rep⊗rep coordinates
        for (int p = 0; p < N; ++p) {
          const Scalar& ca = repinv->at(p, a);
          if (ca.is_zero()) continue;
          for (int q = 0; q < N; ++q) {
            const Scalar& cb = repinv->at(q, b);
            if (cb.is_zero()) continue;
            if (G.degree[p] + G.degree[q] != G.degree[i]) continue;
            gr.delta.add({i, p, q}, c * ca * cb);
          }
        }
      }
  }
  G.co = gr;
  auto rep = check_coalgebra(G.co);
  if (!rep.ok())
    throw Error("graded_coalgebra: output fails coalgebra axioms: " + rep.first_failure()->witness);
  return G;
}

}  // namespace qk
