#include "qk/hopfmod.hpp"

#include "qk/preantipode.hpp"

namespace qk {

namespace {

Matrix tensor_to_matrix(const SparseTensor& t, int in_rank) {
  Index ishape(t.shape().begin(), t.shape().begin() + in_rank);
  Index oshape(t.shape().begin() + in_rank, t.shape().end());
  int cols = 1, rows = 1;
  for (int d : ishape) cols *= d;
  for (int d : oshape) rows *= d;
  Matrix m(t.field(), rows, cols);
  for (const auto& [k, v] : t.entries()) {
    Index in(k.begin(), k.begin() + in_rank), out(k.begin() + in_rank, k.end());
    m.at(flatten(out, oshape), flatten(in, ishape)) = v;
  }
  return m;
}

// Contract `op` (shape (x, ambient) or (ambient, x)) into axis `axis` of T,
// keeping every axis in its original position.
SparseTensor splice_axis(const SparseTensor& T, int axis, const SparseTensor& op, int op_axis) {
  SparseTensor r = contract(T, op, {{axis, op_axis}});
  // new axis sits at the end; move it back to `axis`
  std::vector<int> perm;
  for (int i = 0; i + 1 < r.rank(); ++i) perm.push_back(i);
  perm.insert(perm.begin() + axis, r.rank() - 1);
  return permuted(r, perm);
}

// Input axis by the section only (target is a plain space); verifies the map
// kills the quotient relations.
SparseTensor induce_in_only(const SparseTensor& T, int in_axis, const Quotient& q,
                            const std::string& what) {
  for (const auto& rel : q.relations().basis()) {
    SparseTensor w = contract(from_vector(q.relations().field(), rel), T, {{0, in_axis}});
    if (!w.empty()) throw Error(what + ": not well defined on the quotient");
  }
  return splice_axis(T, in_axis, q.section().to_map_tensor(), 1);
}

// Replace an ambient input axis by quotient coordinates (compose with the
// section) and an ambient output axis by the projection; verifies the map
// kills the relations on the input axis. Axis positions are preserved.
SparseTensor induce_on_quotient(const SparseTensor& T, int in_axis, int out_axis,
                                const Quotient& q, const std::string& what) {
  for (const auto& rel : q.relations().basis()) {
    SparseTensor w = contract(from_vector(q.relations().field(), rel), T, {{0, in_axis}});
    int out_after = out_axis - (out_axis > in_axis ? 1 : 0);
    w = contract(w, q.projection().to_map_tensor(), {{out_after, 0}});
    if (!w.empty()) throw Error(what + ": not well defined on the quotient");
  }
  SparseTensor r = splice_axis(T, in_axis, q.section().to_map_tensor(), 1);
  return splice_axis(r, out_axis, q.projection().to_map_tensor(), 0);
}

// Same for a subspace: input axis via the inclusion, output axis corestricted
// (containment verified). Axis positions are preserved.
SparseTensor corestrict_on_subspace(const SparseTensor& T, int in_axis, int out_axis,
                                    const Subspace& sub, const std::string& what) {
  SparseTensor a = splice_axis(T, in_axis, subspace_inclusion_tensor(sub), 1);
  return corestrict_axis(a, out_axis, sub, what);
}

std::vector<std::string> pair_labels(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b,
                                     const std::string& sep) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + sep + y);
  return out;
}

}  // namespace

TensorOverH tensor_over_H(const Trimodule& M, const Trimodule& N) {
  if (M.over != N.over) throw Error("tensor_over_H: different bases");
  const auto& H = *M.over;
  const Field& F = H.field();
  int n = H.dim(), dM = M.dim, dN = N.dim;
  int D = dM * dN;

  // relations: (m·h)⊗n − ω⁻¹(m₋₁⊗h₁⊗n₋₁) ω(m₁⊗h₃⊗n₁) m₀⊗(h₂·n₀)
  Expr t1 = Expr::identity_map(F, {{"m", dM}, {"h", n}, {"n", dN}});
  M.actR(t1, "m", "h", "mh");
  Expr t2 = Expr::identity_map(F, {{"m", dM}, {"h", n}, {"n", dN}});
  M.coactL(t2, "m", "mm", "ma");
  M.coactR(t2, "ma", "m0", "m1");
  H.comul(t2, "h", "h1", "hr");
  H.comul(t2, "hr", "h2", "h3");
  N.coactL(t2, "n", "nm", "na");
  N.coactR(t2, "na", "n0", "n1");
  t2.weight(H.omega_inv.values, {"mm", "h1", "nm"}, {0, 1, 2});
  H.omega_weight(t2, "m1", "h3", "n1");
  N.actL(t2, "h2", "n0", "hn");
  SparseTensor rel = t1.extract({"m.in", "h.in", "n.in", "mh", "n"}) -
                     t2.extract({"m.in", "h.in", "n.in", "m0", "hn"});
  std::vector<Vec> rel_vecs(dM * n * dN, Vec(D, Scalar::zero(F)));
  for (const auto& [k, v] : rel.entries())
    rel_vecs[(k[0] * n + k[1]) * dN + k[2]][k[3] * dN + k[4]] = v;

  TensorOverH out;
  out.q = Quotient::by(Subspace::span(F, D, rel_vecs));
  Trimodule& Q = out.tri;
  Q.over = M.over;
  Q.dim = out.q.dim();
  {
    auto amb = pair_labels(M.labels, N.labels, "|");
    for (int rc : out.q.rep_coords()) Q.labels.push_back(amb[rc]);
  }
  {  // ρl(m⊗n) = m₋₁n₋₁ ⊗ (m₀⊗n₀)
    Expr e = Expr::identity_map(F, {{"m", dM}, {"n", dN}});
    M.coactL(e, "m", "mm", "m0");
    N.coactL(e, "n", "nm", "n0");
    H.mul(e, "mm", "nm", "x");
    SparseTensor T = fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "x", "m0", "n0"}), 0, 2), 2, 2);
    Q.l_coaction = induce_on_quotient(T, 0, 2, out.q, "tensor_over_H left coaction");
  }
  {  // ρr(m⊗n) = (m₀⊗n₀) ⊗ m₁n₁
    Expr e = Expr::identity_map(F, {{"m", dM}, {"n", dN}});
    M.coactR(e, "m", "m0", "m1");
    N.coactR(e, "n", "n0", "n1");
    H.mul(e, "m1", "n1", "y");
    SparseTensor T = fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "m0", "n0", "y"}), 0, 2), 1, 2);
    Q.r_coaction = induce_on_quotient(T, 0, 1, out.q, "tensor_over_H right coaction");
  }
  {  // (m⊗n)·h = ω⁻¹(m₋₁⊗n₋₁⊗h₁) m₀⊗(n₀h₂) ω(m₁⊗n₁⊗h₃)
    Expr e = Expr::identity_map(F, {{"m", dM}, {"n", dN}, {"h", n}});
    M.coactL(e, "m", "mm", "ma");
    M.coactR(e, "ma", "m0", "m1");
    N.coactL(e, "n", "nm", "na");
    N.coactR(e, "na", "n0", "n1");
    H.comul(e, "h", "h1", "hr");
    H.comul(e, "hr", "h2", "h3");
    e.weight(H.omega_inv.values, {"mm", "nm", "h1"}, {0, 1, 2});
    N.actR(e, "n0", "h2", "nh");
    H.omega_weight(e, "m1", "n1", "h3");
    SparseTensor T =
        fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "h.in", "m0", "nh"}), 0, 2), 2, 2);
    Q.r_action = induce_on_quotient(T, 0, 2, out.q, "tensor_over_H right action");
  }
  if (M.four() && N.four()) {  // h·(m⊗n) = ω(h₁⊗m₋₁⊗n₋₁)(h₂m₀)⊗n₀ ω⁻¹(h₃⊗m₁⊗n₁)
    Expr e = Expr::identity_map(F, {{"h", n}, {"m", dM}, {"n", dN}});
    M.coactL(e, "m", "mm", "ma");
    M.coactR(e, "ma", "m0", "m1");
    N.coactL(e, "n", "nm", "na");
    N.coactR(e, "na", "n0", "n1");
    H.comul(e, "h", "h1", "hr");
    H.comul(e, "hr", "h2", "h3");
    H.omega_weight(e, "h1", "mm", "nm");
    M.actL(e, "h2", "m0", "hm");
    e.weight(H.omega_inv.values, {"h3", "m1", "n1"}, {0, 1, 2});
    SparseTensor T =
        fuse_axes(fuse_axes(e.extract({"h.in", "m.in", "n.in", "hm", "n0"}), 1, 2), 2, 2);
    Q.l_action = induce_on_quotient(T, 1, 2, out.q, "tensor_over_H left action");
  }
  return out;
}

CotensorH cotensor_H(const Trimodule& M, const Trimodule& N) {
  if (M.over != N.over) throw Error("cotensor_H: different bases");
  const auto& H = *M.over;
  const Field& F = H.field();
  int n = H.dim(), dM = M.dim, dN = N.dim;
  int D = dM * dN;

  // equalizer of ρr_M⊗N and M⊗ρl_N
  Expr t1 = Expr::identity_map(F, {{"m", dM}, {"n", dN}});
  M.coactR(t1, "m", "m0", "y");
  Expr t2 = Expr::identity_map(F, {{"m", dM}, {"n", dN}});
  N.coactL(t2, "n", "y", "n0");
  SparseTensor diff =
      t1.extract({"m.in", "n.in", "m0", "y", "n"}) - t2.extract({"m.in", "n.in", "m", "y", "n0"});
  Matrix K(F, dM * n * dN, D);
  for (const auto& [k, v] : diff.entries())
    K.at((k[2] * n + k[3]) * dN + k[4], k[0] * dN + k[1]) += v;

  CotensorH out;
  out.sub = Subspace::span(F, D, kernel_basis(K));
  Trimodule& S = out.tri;
  S.over = M.over;
  S.dim = out.sub.dim();
  for (int i = 0; i < S.dim; ++i) S.labels.push_back("c" + std::to_string(i));
  {  // ρl(m□n) = m₋₁ ⊗ (m₀□n)
    Expr e = Expr::identity_map(F, {{"m", dM}, {"n", dN}});
    M.coactL(e, "m", "x", "m0");
    SparseTensor T = fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "x", "m0", "n"}), 0, 2), 2, 2);
    S.l_coaction = corestrict_on_subspace(T, 0, 2, out.sub, "cotensor left coaction");
  }
  {  // ρr(m□n) = (m□n₀) ⊗ n₁
    Expr e = Expr::identity_map(F, {{"m", dM}, {"n", dN}});
    N.coactR(e, "n", "n0", "y");
    SparseTensor T = fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "m", "n0", "y"}), 0, 2), 1, 2);
    S.r_coaction = corestrict_on_subspace(T, 0, 1, out.sub, "cotensor right coaction");
  }
  {  // (m□n)·h = mh₁ □ nh₂
    Expr e = Expr::identity_map(F, {{"m", dM}, {"n", dN}, {"h", n}});
    H.comul(e, "h", "h1", "h2");
    M.actR(e, "m", "h1", "a");
    N.actR(e, "n", "h2", "b");
    SparseTensor T =
        fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "h.in", "a", "b"}), 0, 2), 2, 2);
    S.r_action = corestrict_on_subspace(T, 0, 2, out.sub, "cotensor right action");
  }
  if (M.four() && N.four()) {  // h·(m□n) = h₁m □ h₂n
    Expr e = Expr::identity_map(F, {{"h", n}, {"m", dM}, {"n", dN}});
    H.comul(e, "h", "h1", "h2");
    M.actL(e, "h1", "m", "a");
    N.actL(e, "h2", "n", "b");
    SparseTensor T =
        fuse_axes(fuse_axes(e.extract({"h.in", "m.in", "n.in", "a", "b"}), 1, 2), 2, 2);
    S.l_action = corestrict_on_subspace(T, 1, 2, out.sub, "cotensor left action");
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero())
            r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix tensorH_map(const Matrix& f, const Matrix& g, const TensorOverH& src,
                   const TensorOverH& dst) {
  Matrix amb = kron(f, g);
  for (const auto& rel : src.q.relations().basis()) {
    Vec w = dst.q.projection().apply(amb.apply(rel));
    for (const auto& c : w)
      if (!c.is_zero()) throw Error("tensorH_map: f⊗g does not descend");
  }
  return dst.q.projection() * amb * src.q.section();
}

Matrix cotensor_map(const Matrix& f, const Matrix& g, const CotensorH& src, const CotensorH& dst) {
  Matrix amb = kron(f, g) * src.sub.inclusion();
  for (int c = 0; c < amb.cols(); ++c) {
    Vec col(amb.rows(), Scalar::zero(amb.field()));
    for (int r = 0; r < amb.rows(); ++r) col[r] = amb.at(r, c);
    if (!dst.sub.contains(col)) throw Error("cotensor_map: f⊗g leaves the cotensor product");
  }
  return dst.sub.retraction() * amb;
}

Matrix tensorH_left_unit(const Trimodule& U, const TensorOverH& HU) {
  const auto& H = *U.over;
  Expr e = Expr::identity_map(H.field(), {{"h", H.dim()}, {"u", U.dim}});
  U.actL(e, "h", "u", "p");
  SparseTensor T = fuse_axes(e.extract({"h.in", "u.in", "p"}), 0, 2);
  return tensor_to_matrix(T, 1) * HU.q.section();
}

Matrix tensorH_right_unit(const Trimodule& U, const TensorOverH& UH) {
  const auto& H = *U.over;
  Expr e = Expr::identity_map(H.field(), {{"u", U.dim}, {"h", H.dim()}});
  U.actR(e, "u", "h", "p");
  SparseTensor T = fuse_axes(e.extract({"u.in", "h.in", "p"}), 0, 2);
  return tensor_to_matrix(T, 1) * UH.q.section();
}

Matrix cotensor_left_unit(const Trimodule& U, const CotensorH& HU) {
  const auto& H = *U.over;
  Expr e = Expr::identity_map(H.field(), {{"h", H.dim()}, {"u", U.dim}});
  H.counit_weight(e, "h");
  SparseTensor T = fuse_axes(e.extract({"h.in", "u.in", "u"}), 0, 2);
  return tensor_to_matrix(T, 1) * HU.sub.inclusion();
}

Matrix cotensor_right_unit(const Trimodule& U, const CotensorH& UH) {
  const auto& H = *U.over;
  Expr e = Expr::identity_map(H.field(), {{"u", U.dim}, {"h", H.dim()}});
  H.counit_weight(e, "h");
  SparseTensor T = fuse_axes(e.extract({"u.in", "h.in", "u"}), 0, 2);
  return tensor_to_matrix(T, 1) * UH.sub.inclusion();
}

Matrix tensorH_assoc(const Trimodule& U, const Trimodule& V, const Trimodule& W,
                     const TensorOverH& UV, const TensorOverH& UV_W, const TensorOverH& VW,
                     const TensorOverH& U_VW) {
  const auto& H = *U.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim}, {"v", V.dim}, {"w", W.dim}});
  U.coactL(e, "u", "um", "ua");
  U.coactR(e, "ua", "u0", "u1");
  V.coactL(e, "v", "vm", "va");
  V.coactR(e, "va", "v0", "v1");
  W.coactL(e, "w", "wm", "wa");
  W.coactR(e, "wa", "w0", "w1");
  e.weight(H.omega_inv.values, {"um", "vm", "wm"}, {0, 1, 2});
  H.omega_weight(e, "u1", "v1", "w1");
  SparseTensor T = e.extract({"u.in", "v.in", "w.in", "u0", "v0", "w0"});
  Matrix amb = tensor_to_matrix(fuse_axes(fuse_axes(T, 0, 3), 1, 3), 1);  // (UVW)×(UVW)

  // (I_U ⊗ proj_VW) ∘ amb, then proj_{U,VW}; sections on the incoming side
  int dU = U.dim, dVW = VW.q.dim();
  Matrix blow(F, dU * dVW, amb.rows());
  for (int u = 0; u < dU; ++u)
    for (int r = 0; r < dVW; ++r)
      for (int c = 0; c < V.dim * W.dim; ++c)
        blow.at(u * dVW + r, u * V.dim * W.dim + c) = VW.q.projection().at(r, c);
  Matrix sect(F, amb.cols(), UV.q.dim() * W.dim);
  for (int r = 0; r < UV.q.dim(); ++r)
    for (int a = 0; a < U.dim * V.dim; ++a) {
      if (UV.q.section().at(a, r).is_zero()) continue;
      for (int w = 0; w < W.dim; ++w)
        sect.at(a * W.dim + w, r * W.dim + w) = UV.q.section().at(a, r);
    }
  return U_VW.q.projection() * (blow * amb * sect * UV_W.q.section());
}

Matrix cotensor_assoc(const Trimodule& U, const Trimodule& V, const Trimodule& W,
                      const CotensorH& UV, const CotensorH& UV_W, const CotensorH& VW,
                      const CotensorH& U_VW) {
  const Field& F = U.over->field();
  // plain rebracketing: include, then re-coordinate
  Matrix incl_outer = UV_W.sub.inclusion();               // (sUV·dW) × s
  Matrix incl_inner = UV.sub.inclusion();                 // (dU·dV) × sUV
  int dU = U.dim, dV = V.dim, dW = W.dim;
  Matrix into_amb(F, dU * dV * dW, incl_outer.rows());
  for (int a = 0; a < incl_inner.rows(); ++a)
    for (int r = 0; r < UV.sub.dim(); ++r) {
      if (incl_inner.at(a, r).is_zero()) continue;
      for (int w = 0; w < dW; ++w)
        into_amb.at(a * dW + w, r * dW + w) = incl_inner.at(a, r);
    }
  Matrix amb_cols = into_amb * incl_outer;  // columns in U⊗V⊗W

  // coordinates in U□(V□W): first V□W coords inside V⊗W, then the outer sub
  Matrix out(F, U_VW.sub.dim(), amb_cols.cols());
  for (int c = 0; c < amb_cols.cols(); ++c) {
    Vec full(dU * dV * dW, Scalar::zero(F));
    for (int r = 0; r < amb_cols.rows(); ++r) full[r] = amb_cols.at(r, c);
    // slice u-blocks, re-coordinate the V⊗W part
    Vec mid(dU * VW.sub.dim(), Scalar::zero(F));
    for (int u = 0; u < dU; ++u) {
      Vec blk(dV * dW, Scalar::zero(F));
      for (int i = 0; i < dV * dW; ++i) blk[i] = full[u * dV * dW + i];
      auto c2 = VW.sub.coords(blk);
      if (!c2) throw Error("cotensor_assoc: componentwise image leaves V cotensor W");
      for (int i = 0; i < VW.sub.dim(); ++i) mid[u * VW.sub.dim() + i] = (*c2)[i];
    }
    auto c3 = U_VW.sub.coords(mid);
    if (!c3) throw Error("cotensor_assoc: image leaves U cotensor (V cotensor W)");
    for (int i = 0; i < U_VW.sub.dim(); ++i) out.at(i, c) = (*c3)[i];
  }
  return out;
}

Matrix xi_map(const Comodule& U, const Trimodule& M, const TensorOverH& FU_M) {
  const auto& H = *U.over;
  const Field& F = H.field();
  int n = H.dim();
  Expr e = Expr::identity_map(F, {{"u", U.dim}, {"h", n}, {"m", M.dim}});
  U.coact(e, "u", "um", "u0");
  H.comul(e, "h", "h1", "h2");
  M.coactL(e, "m", "mm", "m0");
  e.weight(H.omega_inv.values, {"um", "h1", "mm"}, {0, 1, 2});
  M.actL(e, "h2", "m0", "p");
  SparseTensor T = fuse_axes(fuse_axes(e.extract({"u.in", "h.in", "m.in", "u0", "p"}), 0, 3), 1, 2);
  return tensor_to_matrix(induce_in_only(T, 0, FU_M.q, "xi"), 1);
}

Matrix xi_inv_map(const Comodule& U, const Trimodule& M, const TensorOverH& FU_M) {
  const auto& H = *U.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim}, {"m", M.dim}});
  e.append(H.unit_tensor(), "h");
  SparseTensor T = e.extract({"u.in", "m.in", "u", "h", "m"});
  T = fuse_axes(fuse_axes(T, 0, 2), 1, 3);
  return FU_M.q.projection() * tensor_to_matrix(T, 1);
}

Matrix alpha_map(const Comodule& U, const Comodule& V) {
  const auto& H = *U.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim}, {"v", V.dim}, {"k", H.dim()}});
  U.coact(e, "u", "um", "u0");
  V.coact(e, "v", "vm", "v0");
  H.comul(e, "k", "k1", "k2");
  H.omega_weight(e, "um", "vm", "k1");
  SparseTensor T = fuse_axes(fuse_axes(e.extract({"u.in", "v.in", "k.in", "u0", "v0", "k2"}), 0, 3), 1, 3);
  return tensor_to_matrix(T, 1);
}

Matrix alpha_inv_map(const Comodule& U, const Comodule& V) {
  const auto& H = *U.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim}, {"v", V.dim}, {"k", H.dim()}});
  U.coact(e, "u", "um", "u0");
  V.coact(e, "v", "vm", "v0");
  H.comul(e, "k", "k1", "k2");
  e.weight(H.omega_inv.values, {"um", "vm", "k1"}, {0, 1, 2});
  SparseTensor T = fuse_axes(fuse_axes(e.extract({"u.in", "v.in", "k.in", "u0", "v0", "k2"}), 0, 3), 1, 3);
  return tensor_to_matrix(T, 1);
}

Matrix beta_map(const Comodule& V, const Trimodule& M, const CotensorH& FV_M) {
  const auto& H = *V.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"v", V.dim}, {"h", H.dim()}, {"m", M.dim}});
  H.counit_weight(e, "h");
  SparseTensor T = fuse_axes(fuse_axes(e.extract({"v.in", "h.in", "m.in", "v", "m"}), 0, 3), 1, 2);
  return tensor_to_matrix(T, 1) * FV_M.sub.inclusion();
}

Matrix beta_inv_map(const Comodule& V, const Trimodule& M, const CotensorH& FV_M) {
  const auto& H = *V.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"v", V.dim}, {"m", M.dim}});
  M.coactL(e, "m", "mm", "m0");
  SparseTensor T = fuse_axes(fuse_axes(e.extract({"v.in", "m.in", "v", "mm", "m0"}), 0, 2), 1, 3);
  return tensor_to_matrix(corestrict_axis(T, 1, FV_M.sub, "beta inverse"), 1);
}

Matrix phi0_map(const DualQuasiBialgebra& H) { return Matrix::identity(H.field(), H.dim()); }

Matrix phi2_map(const YDModule& U, const YDModule& V, const TensorOverH& FU_FV) {
  const auto& H = *U.over();
  const Field& F = H.field();
  int n = H.dim();
  Expr e = Expr::identity_map(F, {{"u", U.dim()}, {"h", n}, {"v", V.dim()}, {"k", n}});
  H.comul(e, "h", "h1", "ha");
  H.comul(e, "ha", "h2", "hb");
  H.comul(e, "hb", "h3", "hc");
  H.comul(e, "hc", "h4", "hd");
  H.comul(e, "hd", "h5", "h6");
  H.comul(e, "k", "k1", "ka");
  H.comul(e, "ka", "k2", "kb");
  H.comul(e, "kb", "k3", "kc");
  H.comul(e, "kc", "k4", "k5");
  U.coact(e, "u", "um2", "ua");
  U.coact(e, "ua", "um1", "u0");
  V.coact(e, "v", "vm2", "va");
  V.coact(e, "va", "vm1", "v0");
  H.mul(e, "vm2", "k1", "t1");
  e.weight(H.omega_inv.values, {"um2", "h1", "t1"}, {0, 1, 2});
  H.omega_weight(e, "h2", "vm1", "k2");
  V.act(e, "h3", "v0", "w");
  V.coact(e, "w", "wm2", "wa");
  V.coact(e, "wa", "wm1", "w0");
  e.weight(H.omega_inv.values, {"wm2", "h4", "k3"}, {0, 1, 2});
  H.mul(e, "h5", "k4", "t2");
  H.omega_weight(e, "um1", "wm1", "t2");
  H.mul(e, "h6", "k5", "hk");
  SparseTensor T =
      fuse_axes(fuse_axes(e.extract({"u.in", "h.in", "v.in", "k.in", "u0", "w0", "hk"}), 0, 4), 1, 3);
  return tensor_to_matrix(induce_in_only(T, 0, FU_FV.q, "phi2"), 1);
}

Matrix phi2_inv_map(const YDModule& U, const YDModule& V, const TensorOverH& FU_FV) {
  const auto& H = *U.over();
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim()}, {"v", V.dim()}, {"k", H.dim()}});
  U.coact(e, "u", "um", "u0");
  V.coact(e, "v", "vm", "v0");
  H.comul(e, "k", "k1", "k2");
  e.weight(H.omega_inv.values, {"um", "vm", "k1"}, {0, 1, 2});
  e.append(H.unit_tensor(), "one");
  SparseTensor T = e.extract({"u.in", "v.in", "k.in", "u0", "one", "v0", "k2"});
  T = fuse_axes(fuse_axes(T, 0, 3), 1, 4);
  return FU_FV.q.projection() * tensor_to_matrix(T, 1);
}

Matrix psi2_map(const YDModule& U, const YDModule& V, const CotensorH& FU_FV) {
  const auto& H = *U.over();
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim()}, {"h", H.dim()}, {"v", V.dim()}, {"k", H.dim()}});
  U.coact(e, "u", "um", "u0");
  V.coact(e, "v", "vm", "v0");
  H.comul(e, "k", "k1", "k2");
  H.omega_weight(e, "um", "vm", "k1");
  H.counit_weight(e, "h");
  SparseTensor T =
      fuse_axes(fuse_axes(e.extract({"u.in", "h.in", "v.in", "k.in", "u0", "v0", "k2"}), 0, 4), 1, 3);
  return tensor_to_matrix(T, 1) * FU_FV.sub.inclusion();
}

Matrix psi2_inv_map(const YDModule& U, const YDModule& V, const CotensorH& FU_FV) {
  const auto& H = *U.over();
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim()}, {"v", V.dim()}, {"k", H.dim()}});
  U.coact(e, "u", "um", "u0");
  V.coact(e, "v", "vm2", "va");
  V.coact(e, "va", "vm1", "v0");
  H.comul(e, "k", "k1", "ka");
  H.comul(e, "ka", "k2", "k3");
  e.weight(H.omega_inv.values, {"um", "vm2", "k1"}, {0, 1, 2});
  H.mul(e, "vm1", "k2", "x");
  SparseTensor T = e.extract({"u.in", "v.in", "k.in", "u0", "x", "v0", "k3"});
  T = fuse_axes(fuse_axes(T, 0, 3), 1, 4);
  return tensor_to_matrix(corestrict_axis(T, 1, FU_FV.sub, "psi2 inverse"), 1);
}

Matrix psi2G_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                 const Subspace& GM, const Subspace& GN, const Subspace& G_MN) {
  const auto& H = *M.over;
  const Field& F = H.field();
  Matrix out(F, G_MN.dim(), GM.dim() * GN.dim());
  for (int i = 0; i < GM.dim(); ++i)
    for (int j = 0; j < GN.dim(); ++j) {
      Expr e = Expr::one_hot(F, {}, {});
      e.append(from_vector(F, GM.basis()[i]), "m");
      e.append(from_vector(F, GN.basis()[j]), "n");
      N.coactL(e, "n", "nm", "n0");
      M.actR(e, "m", "nm", "a");
      Vec amb(M.dim * N.dim, Scalar::zero(F));
      SparseTensor img = e.extract({"a", "n0"});
      for (const auto& [k, v] : img.entries()) amb[k[0] * N.dim + k[1]] = v;
      auto c = MN.sub.coords(amb);
      if (!c) throw Error("psi2G: image not in the cotensor product");
      auto g = G_MN.coords(*c);
      if (!g) throw Error("psi2G: image not coinvariant");
      for (int r = 0; r < G_MN.dim(); ++r) out.at(r, i * GN.dim() + j) = (*g)[r];
    }
  return out;
}

Matrix psi2G_inv_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                     const Subspace& GM, const Subspace& GN, const Subspace& G_MN,
                     const Matrix& S) {
  const auto& H = *M.over;
  const Field& F = H.field();
  Matrix tM = tau_map(M, S), tN = tau_map(N, S);
  // family x_i⊗y_j spanning G(M)⊗G(N) inside M⊗N
  std::vector<Vec> family;
  for (int i = 0; i < GM.dim(); ++i)
    for (int j = 0; j < GN.dim(); ++j) {
      Vec w(M.dim * N.dim, Scalar::zero(F));
      for (int a = 0; a < M.dim; ++a)
        for (int b = 0; b < N.dim; ++b) w[a * N.dim + b] = GM.basis()[i][a] * GN.basis()[j][b];
      family.push_back(std::move(w));
    }
  Matrix fam = Matrix::from_columns(F, M.dim * N.dim, family);

  Matrix out(F, GM.dim() * GN.dim(), G_MN.dim());
  for (int c = 0; c < G_MN.dim(); ++c) {
    Vec sub_vec = MN.sub.inclusion().apply(G_MN.basis()[c]);  // in M⊗N
    // τ⊗τ
    SparseTensor t(F, {M.dim, N.dim});
    for (int a = 0; a < M.dim; ++a)
      for (int b = 0; b < N.dim; ++b)
        if (!sub_vec[a * N.dim + b].is_zero()) t.set({a, b}, sub_vec[a * N.dim + b]);
    t = contract(t, tM.to_map_tensor(), {{0, 0}});  // (n?, out_m) axes: (b, m')
    t = contract(t, tN.to_map_tensor(), {{0, 0}});  // (m', n')
    Vec w(M.dim * N.dim, Scalar::zero(F));
    for (const auto& [k, v] : t.entries()) w[k[0] * N.dim + k[1]] = v;
    auto coef = solve_linear(fam, w);
    if (!coef) throw Error("psi2G inverse: image not in G(M)⊗G(N)");
    for (int r = 0; r < (int)coef->size(); ++r) out.at(r, c) = (*coef)[r];
  }
  return out;
}

Matrix theta2_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                  const TensorOverH& MN_t, const Matrix& S) {
  const Field& F = M.over->field();
  Matrix tM = tau_map(M, S);
  // incl → (τ_M ⊗ id) → proj
  Matrix tauI(F, M.dim * N.dim, M.dim * N.dim);
  for (int a = 0; a < M.dim; ++a)
    for (int a2 = 0; a2 < M.dim; ++a2) {
      if (tM.at(a2, a).is_zero()) continue;
      for (int b = 0; b < N.dim; ++b) tauI.at(a2 * N.dim + b, a * N.dim + b) = tM.at(a2, a);
    }
  return MN_t.q.projection() * tauI * MN.sub.inclusion();
}

Matrix theta2_inv_map(const Trimodule& M, const Trimodule& N, const CotensorH& MN,
                      const TensorOverH& MN_t) {
  const auto& H = *M.over;
  const Field& F = H.field();
  // m⊗_H n ↦ m₀n₋₁ □ m₁n₀
  Expr e = Expr::identity_map(F, {{"m", M.dim}, {"n", N.dim}});
  M.coactR(e, "m", "m0", "m1");
  N.coactL(e, "n", "nm", "n0");
  M.actR(e, "m0", "nm", "a");
  N.actL(e, "m1", "n0", "b");
  SparseTensor T = fuse_axes(fuse_axes(e.extract({"m.in", "n.in", "a", "b"}), 0, 2), 1, 2);
  for (const auto& rel : MN_t.q.relations().basis()) {
    SparseTensor w = contract(from_vector(F, rel), T, {{0, 0}});
    if (!w.empty()) throw Error("theta2 inverse: not well defined on the quotient");
  }
  SparseTensor Tq = contract(MN_t.q.section().to_map_tensor(), T, {{1, 0}});  // (q, amb)
  SparseTensor w = contract(Tq, MN.sub.retraction().to_map_tensor(), {{1, 0}});
  SparseTensor back = contract(w, subspace_inclusion_tensor(MN.sub), {{1, 0}});
  if (!(back == Tq)) throw Error("theta2 inverse: image leaves the cotensor product");
  return tensor_to_matrix(w, 1);
}

Matrix kappa_map(const Trimodule& FU, const Trimodule& FV, const CotensorH& cot,
                 const TensorOverH& tens) {
  return theta2_inv_map(FU, FV, cot, tens);
}

Matrix kappa_inv_map(const Comodule& U, const Comodule& V, const CotensorH& cot,
                     const TensorOverH& tens) {
  const auto& H = *U.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"u", U.dim}, {"h", H.dim()}, {"v", V.dim}, {"k", H.dim()}});
  H.counit_weight(e, "h");
  e.append(H.unit_tensor(), "one");
  SparseTensor T = e.extract({"u.in", "h.in", "v.in", "k.in", "u", "one", "v", "k"});
  T = fuse_axes(fuse_axes(T, 0, 4), 1, 4);
  return tens.q.projection() * tensor_to_matrix(T, 1) * cot.sub.inclusion();
}

Matrix trimodule_braiding(const Trimodule& M, const Trimodule& N, const Matrix& S,
                          const TensorOverH& MN, const TensorOverH& NM) {
  // H itself is not known to be a Yetter-Drinfeld module, so c_{H,M} is only
  // a bicomodule map; the braiding below is built through tau instead.
  const auto& H = *M.over;
  const Field& F = H.field();
  Matrix tN = tau_map(N, S);
  Expr e = Expr::identity_map(F, {{"m", M.dim}, {"n", N.dim}});
  M.coactL(e, "m", "mm2", "ma");
  M.coactL(e, "ma", "mm1", "m0");
  N.coactR(e, "n", "na", "n2");
  N.coactR(e, "na", "n0", "n1");
  e.apply(tN.to_map_tensor(), {"n0"}, {0}, {"t"});
  N.coactL(e, "t", "tm", "t0");
  N.actL(e, "mm1", "t0", "z");
  e.apply(tN.to_map_tensor(), {"z"}, {0}, {"x"});
  H.omega_weight(e, "mm2", "tm", "n1");
  SparseTensor T = e.extract({"m.in", "n.in", "x", "m0", "n2"});
  T = fuse_axes(fuse_axes(T, 0, 2), 1, 2);            // (in, xm0, n2)
  T = contract(T, NM.q.projection().to_map_tensor(), {{1, 0}});  // (in, n2, q')
  T = contract(T, NM.tri.r_action, {{2, 0}, {1, 1}});            // (in, q'')
  return tensor_to_matrix(induce_in_only(T, 0, MN.q, "trimodule braiding"), 1);
}

Matrix eta_map(const Comodule& V, const Subspace& coinv_FV) {
  const auto& H = *V.over;
  const Field& F = H.field();
  int n = H.dim();
  Matrix out(F, coinv_FV.dim(), V.dim);
  for (int v = 0; v < V.dim; ++v) {
    Vec w(V.dim * n, Scalar::zero(F));
    for (int h = 0; h < n; ++h) w[v * n + h] = H.unit[h];
    auto c = coinv_FV.coords(w);
    if (!c) throw Error("eta: v⊗1 is not coinvariant");
    for (int i = 0; i < coinv_FV.dim(); ++i) out.at(i, v) = (*c)[i];
  }
  return out;
}

Matrix counit_map(const Trimodule& M, const Subspace& GM) {
  const auto& H = *M.over;
  const Field& F = H.field();
  int n = H.dim();
  Matrix out(F, M.dim, GM.dim() * n);
  for (int i = 0; i < GM.dim(); ++i)
    for (int h = 0; h < n; ++h) {
      Expr e = Expr::one_hot(F, {{"h", n}}, {h});
      e.append(from_vector(F, GM.basis()[i]), "m");
      M.actR(e, "m", "h", "p");
      Vec col = to_vector(e.extract({"p"}));
      for (int r = 0; r < M.dim; ++r) out.at(r, i * n + h) = col[r];
    }
  return out;
}

Matrix counit_inv_map(const Trimodule& M, const Subspace& GM, const Matrix& tauM) {
  const auto& H = *M.over;
  const Field& F = H.field();
  Expr e = Expr::identity_map(F, {{"m", M.dim}});
  M.coactR(e, "m", "m0", "m1");
  e.apply(tauM.to_map_tensor(), {"m0"}, {0}, {"t"});
  SparseTensor T = e.extract({"m.in", "t", "m1"});
  T = corestrict_axis(T, 1, GM, "counit inverse");
  return tensor_to_matrix(fuse_axes(T, 1, 2), 1);
}

CoinvariantYD yd_on_coinvariants(const Trimodule& M, const Matrix& S) {
  if (!M.four()) throw Error("yd_on_coinvariants: four-structure trimodule required");
  const auto& H = *M.over;
  const Field& F = H.field();
  int n = H.dim();
  CoinvariantYD out;
  out.emb = coinvariants(M);
  const Subspace& GM = out.emb;
  YDModule& V = out.yd;
  V.com.over = M.over;
  V.com.dim = GM.dim();
  for (int i = 0; i < GM.dim(); ++i) V.com.labels.push_back("g" + std::to_string(i));
  {  // restricted left coaction
    SparseTensor T = corestrict_on_subspace(M.l_coaction, 0, 2, GM, "coinvariant coaction");
    V.com.coaction = T;
  }
  {  // h ⊳ x = τ(hx)
    Matrix tM = tau_map(M, S);
    SparseTensor act(F, {n, GM.dim(), GM.dim()});
    for (int h = 0; h < n; ++h)
      for (int i = 0; i < GM.dim(); ++i) {
        Expr e = Expr::one_hot(F, {{"h", n}}, {h});
        e.append(from_vector(F, GM.basis()[i]), "m");
        M.actL(e, "h", "m", "p");
        e.apply(tM.to_map_tensor(), {"p"}, {0}, {"t"});
        Vec w = to_vector(e.extract({"t"}));
        auto c = GM.coords(w);
        if (!c) throw Error("yd_on_coinvariants: action leaves the coinvariants");
        for (int j = 0; j < GM.dim(); ++j)
          if (!(*c)[j].is_zero()) act.set({h, i, j}, (*c)[j]);
      }
    V.action = act;
  }
  return out;
}

Report adjunction_suite(const Comodule& V, const Trimodule& M, const Matrix* S) {
  Report rep;
  rep.subject = "adjunction (F,G)";
  const auto& H = *V.over;
  const Field& F = H.field();
  int n = H.dim();

  Trimodule FV = F_build(V);
  Subspace coinv = coinvariants(FV);
  if (coinv.dim() != V.dim) {
    rep.fail("eta isomorphism", "coinvariants of F(V) have dimension " +
                                    std::to_string(coinv.dim()) + " != dim V");
    return rep;
  }
  Matrix eta = eta_map(V, coinv);
  auto eta_inv = eta.inverse();
  if (!eta_inv) {
    rep.fail("eta isomorphism", "eta not invertible");
    return rep;
  }
  rep.pass("eta isomorphism");
  {  // η is a comodule morphism
    SparseTensor gfv = corestrict_on_subspace(FV.l_coaction, 0, 2, coinv, "GF(V) coaction");
    Expr lhs = Expr::identity_map(F, {{"v", V.dim}});
    lhs.apply(eta.to_map_tensor(), {"v"}, {0}, {"x"});
    lhs.apply(gfv, {"x"}, {0}, {"hm", "x0"});
    Expr rhs = Expr::identity_map(F, {{"v", V.dim}});
    V.coact(rhs, "v", "hm", "v0");
    rhs.apply(eta.to_map_tensor(), {"v0"}, {0}, {"x0"});
    rep.add(compare_maps("eta colinear", lhs.extract({"v.in", "hm", "x0"}),
                         rhs.extract({"v.in", "hm", "x0"}), 1, {V.labels}, {}));
  }
  if (!S) {
    rep.pass("counit: no preantipode supplied; equivalence not certified");
    return rep;
  }
  if (!check_preantipode(H, *S).ok()) {
    rep.fail("counit", "supplied S is not a preantipode; equivalence not certified");
    return rep;
  }
  Matrix tM = tau_map(M, *S);
  Subspace GM = coinvariants(M);
  Matrix eps = counit_map(M, GM);
  Matrix eps_inv = counit_inv_map(M, GM, tM);
  if ((eps * eps_inv).is_identity() && (eps_inv * eps).is_identity())
    rep.pass("counit isomorphism (inverse m -> tau(m0)⊗m1)");
  else
    rep.fail("counit isomorphism (inverse m -> tau(m0)⊗m1)", "composites differ from identity");

  if (M.four()) {  // ε is a morphism of all four structures
    CoinvariantYD gm = yd_on_coinvariants(M, *S);
    Trimodule FGM = F_build(gm.yd);
    SparseTensor et = eps.to_map_tensor();
    auto check_mor = [&](const char* name, const SparseTensor& lhsT, const SparseTensor& rhsT) {
      rep.add(compare_maps(name, lhsT, rhsT, 1, {FGM.labels}, {}));
    };
    {
      Expr lhs = Expr::identity_map(F, {{"x", FGM.dim}});
      lhs.apply(et, {"x"}, {0}, {"m"});
      M.coactL(lhs, "m", "hm", "m0");
      Expr rhs = Expr::identity_map(F, {{"x", FGM.dim}});
      FGM.coactL(rhs, "x", "hm", "x0");
      rhs.apply(et, {"x0"}, {0}, {"m0"});
      check_mor("counit left colinear", lhs.extract({"x.in", "hm", "m0"}),
                rhs.extract({"x.in", "hm", "m0"}));
    }
    {
      Expr lhs = Expr::identity_map(F, {{"x", FGM.dim}});
      lhs.apply(et, {"x"}, {0}, {"m"});
      M.coactR(lhs, "m", "m0", "hm");
      Expr rhs = Expr::identity_map(F, {{"x", FGM.dim}});
      FGM.coactR(rhs, "x", "x0", "hm");
      rhs.apply(et, {"x0"}, {0}, {"m0"});
      check_mor("counit right colinear", lhs.extract({"x.in", "m0", "hm"}),
                rhs.extract({"x.in", "m0", "hm"}));
    }
    {
      Expr lhs = Expr::identity_map(F, {{"x", FGM.dim}, {"h", n}});
      FGM.actR(lhs, "x", "h", "xh");
      lhs.apply(et, {"xh"}, {0}, {"m"});
      Expr rhs = Expr::identity_map(F, {{"x", FGM.dim}, {"h", n}});
      rhs.apply(et, {"x"}, {0}, {"mx"});
      M.actR(rhs, "mx", "h", "m");
      rep.add(compare_maps("counit right linear", lhs.extract({"x.in", "h.in", "m"}),
                           rhs.extract({"x.in", "h.in", "m"}), 2, {FGM.labels, H.co.labels}, {}));
    }
    {
      Expr lhs = Expr::identity_map(F, {{"h", n}, {"x", FGM.dim}});
      FGM.actL(lhs, "h", "x", "hx");
      lhs.apply(et, {"hx"}, {0}, {"m"});
      Expr rhs = Expr::identity_map(F, {{"h", n}, {"x", FGM.dim}});
      rhs.apply(et, {"x"}, {0}, {"mx"});
      M.actL(rhs, "h", "mx", "m");
      rep.add(compare_maps("counit left linear", lhs.extract({"h.in", "x.in", "m"}),
                           rhs.extract({"h.in", "x.in", "m"}), 2, {H.co.labels, FGM.labels}, {}));
    }
  }
  return rep;
}

}  // namespace qk
