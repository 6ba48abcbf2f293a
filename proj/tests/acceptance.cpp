// Acceptance suite: one line per criterion, exact arithmetic, zero tolerance.
// A criterion only passes when every one of its sub-checks holds; failures
// print the mathematical reason.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "qk/cli.hpp"

using namespace qk;
using Clock = std::chrono::steady_clock;

namespace {

Field Q = Field::rationals();
Field F5 = Field::prime(5);

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// the impossible pair: the Sweedler diagram data over the twisted base
std::string twisted_pair_obstruction(const DualQuasiBialgebra& H2) {
  BraidedBialgebra Rt = qkt::sweedler_R(&H2);
  Report rep = check_braided_bialgebra(Rt);
  if (rep.ok()) return "";
  const CheckRecord* f = rep.first_failure();
  return f->name + " [" + f->witness + "]";
}

}  // namespace

int main() {
  std::vector<Criterion> results;

  // shared fixtures
  DualQuasiBialgebra H1 = qkt::make_kz2(Q);
  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(Q);
  DualQuasiBialgebra H2f5 = qkt::make_kz2_twisted(F5);
  DualQuasiBialgebra M5 = qkt::make_monoid2(Q);
  BraidedBialgebra R1 = qkt::sweedler_R(&H1);
  Bosonization H4 = bosonize(H1, R1);

  {  // 1. axiom suite on the five fixtures, runtime < 1 s each
    Criterion c{1, "axiom suite on the fixture family (load + check_dqb < 1s each)"};
    struct Item {
      const char* file;
      const char* name;
    };
    for (auto [file, name] : {Item{"kz2.qk", "H"}, Item{"kz2_twisted.qk", "H"},
                              Item{"sweedler4.qk", "H4"}, Item{"idempotent_monoid.qk", "M"}}) {
      auto t0 = Clock::now();
      try {
        Workspace ws = qkt::load_fixture(file);
        Report rep = check_dqb(*ws.get(name, "dqb").dqb);
        c.require(rep.ok(), std::string(file) + " check_dqb");
      } catch (const Error& e) {
        c.require(false, std::string(file) + ": " + e.what());
      }
      double dt = seconds_since(t0);
      c.require(dt < 1.0, std::string(file) + " under one second");
    }
    // the fourth fixture of the family: bosonize(k^theta Z2, sweedler diagram)
    auto t0 = Clock::now();
    try {
      Bosonization b = bosonize(H2, qkt::sweedler_R(&H2));
      (void)b;
      c.note("twisted bosonization unexpectedly constructed");
      c.require(false, "expected obstruction vanished");
    } catch (const Error& e) {
      c.require(false, std::string("bosonize(k^theta Z2, sweedler diagram): ") + e.what());
      c.note("no 2-dim braided bialgebra exists over k^theta Z2: quasi-associativity forces "
             "action(g)^2 = -id on the odd component while Delta-multiplicativity forces "
             "action(g) = -id; the fixture pair is mathematically empty");
    }
    c.require(seconds_since(t0) < 1.0, "twisted bosonization attempt under one second");
    results.push_back(c);
  }

  {  // 2. preantipode solving
    Criterion c{2, "preantipode: solver + derived identities; monoid refusal; closed form"};
    auto check_solved = [&](const DualQuasiBialgebra& H, const std::string& name) {
      auto sol = solve_preantipode(H);
      if (!sol) {
        c.require(false, name + ": no preantipode found");
        return;
      }
      c.require(check_preantipode(H, sol->S).ok(), name + ": solution passes check_preantipode");
      c.require(check_derived_identities(H, sol->S).ok(), name + ": (3S) and omegasbis hold");
    };
    check_solved(H1, "kz2");
    check_solved(H2, "kz2_twisted");
    check_solved(H4.B, "sweedler4");
    c.require(false,
              "bosonize(k^theta Z2, sweedler diagram): fixture does not exist (see criterion 1)");
    c.require(!solve_preantipode(M5), "idempotent monoid algebra must have no preantipode");
    for (auto* hp : {&H1, &H2}) {
      GroupCocycleData d = qkt::z2_data(Q, hp == &H2);
      auto closed = group_preantipode(d, *hp);
      c.require(closed && check_preantipode(*hp, *closed).ok(),
                "closed form S(g) = omega(g,g^-1,g)^-1 g^-1 is a solution");
    }
    results.push_back(c);
  }

  {  // 3. cocommutative theorem on the twisted group algebra
    Criterion c{3, "cocommutative-to-Hopf conversion on k^theta Z2"};
    auto sol = solve_preantipode(H2);
    if (!sol) {
      c.require(false, "no preantipode");
    } else {
      QuasiHopfData qd = cocommutative_to_hopf(H2, sol->S);
      c.require(qd.alpha == H2.co.counit, "alpha = eps");
      Vec epsS(2, Scalar::zero(Q));
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) epsS[j] += H2.co.counit[i] * sol->S.at(i, j);
      c.require(qd.beta == epsS, "beta = eps o S");
      c.require(check_quasi_hopf(H2, qd).ok(), "(s, alpha, beta) passes check_quasi_hopf");
      c.require(check_ordinary_antipode(H2, qd.s).ok(), "s is an ordinary antipode");
      c.require(beta_conv_s(H2, qd) == sol->S, "S = beta * s exactly");
    }
    results.push_back(c);
  }

  {  // 4. fundamental theorem for V in {k, sweedler} over both bases
    Criterion c{4, "fundamental theorem: eta/counit inverse isos and tau laws on F(V)"};
    struct Case {
      const DualQuasiBialgebra* H;
      Comodule V;
      std::string name;
    };
    std::vector<Case> cases;
    cases.push_back({&H1, Comodule::trivial(&H1), "k over kz2"});
    cases.push_back({&H1, qkt::sweedler_R(&H1).carrier.com, "sweedler over kz2"});
    cases.push_back({&H2, Comodule::trivial(&H2), "k over kz2_twisted"});
    cases.push_back({&H2, qkt::sweedler_R(&H2).carrier.com, "sweedler comodule over kz2_twisted"});
    for (const auto& cs : cases) {
      Matrix S = solve_preantipode(*cs.H)->S;
      Trimodule FV = F_build(cs.V);
      Subspace GM = coinvariants(FV);
      Matrix eta = eta_map(cs.V, GM);
      Matrix tauM = tau_map(FV, S);
      Matrix eps = counit_map(FV, GM);
      Matrix eps_inv = counit_inv_map(FV, GM, tauM);
      c.require(GM.dim() == cs.V.dim && eta.inverse().has_value(),
                cs.name + ": eta is an isomorphism");
      c.require((eps * eps_inv).is_identity() && (eps_inv * eps).is_identity(),
                cs.name + ": counit and m -> tau(m0)⊗m1 are mutually inverse");
      TauLaws laws = tau_laws(FV, tauM);
      c.require(laws.image_coinvariant && laws.tau_mh && laws.col_sx_eps && laws.inv_eps &&
                    laws.tau_mh_simple,
                cs.name + ": (Tau mh), (col sx eps), (inv eps), (Tau mh simple)");
      c.require(adjunction_suite(cs.V, FV, &S).ok(), cs.name + ": adjunction suite");
    }
    results.push_back(c);
  }

  {  // 5. monoidal coherence of the structure maps
    Criterion c{5, "structure maps: inverses, tetaphipsi, kappa, mon-funct diagrams"};
    for (int which = 0; which < 2; ++which) {
      const DualQuasiBialgebra& H = which == 0 ? H1 : H2f5;
      std::string base = which == 0 ? "kz2" : "kz2_twisted/F5";
      Matrix S = solve_preantipode(H)->S;
      YDModule U, V;
      if (which == 0) {
        U = qkt::sweedler_R(&H).carrier;
        V = yd_tensor(U, U);
      } else {
        U = qkt::semion(&H, Scalar::from_int(F5, 2));
        V = yd_tensor(U, U);
      }
      Trimodule FU = F_build(U), FV = F_build(V);
      TensorOverH tens = tensor_over_H(FU, FV);
      CotensorH cot = cotensor_H(FU, FV);
      Matrix xi = xi_map(U.com, FV, tens), xii = xi_inv_map(U.com, FV, tens);
      c.require((xi * xii).is_identity() && (xii * xi).is_identity(), base + ": xi invertible");
      Matrix al = alpha_map(U.com, V.com), ali = alpha_inv_map(U.com, V.com);
      c.require((al * ali).is_identity() && (ali * al).is_identity(), base + ": alpha invertible");
      Matrix be = beta_map(U.com, FV, cot), bei = beta_inv_map(U.com, FV, cot);
      c.require((be * bei).is_identity() && (bei * be).is_identity(), base + ": beta invertible");
      Matrix p2 = phi2_map(U, V, tens), p2i = phi2_inv_map(U, V, tens);
      c.require((p2 * p2i).is_identity() && (p2i * p2).is_identity(), base + ": phi2 invertible");
      Matrix s2 = psi2_map(U, V, cot), s2i = psi2_inv_map(U, V, cot);
      c.require((s2 * s2i).is_identity() && (s2i * s2).is_identity(), base + ": psi2 invertible");
      Matrix t2 = theta2_map(FU, FV, cot, tens, S), t2i = theta2_inv_map(FU, FV, cot, tens);
      c.require((t2 * t2i).is_identity() && (t2i * t2).is_identity(), base + ": theta2 invertible");
      Matrix ka = kappa_map(FU, FV, cot, tens), kai = kappa_inv_map(U.com, V.com, cot, tens);
      c.require((ka * kai).is_identity() && (kai * ka).is_identity(), base + ": kappa invertible");
      Subspace GU = coinvariants(FU), GV = coinvariants(FV), GMN = coinvariants(cot.tri);
      Matrix pg = psi2G_map(FU, FV, cot, GU, GV, GMN);
      Matrix pgi = psi2G_inv_map(FU, FV, cot, GU, GV, GMN, S);
      c.require((pg * pgi).is_identity() && (pgi * pg).is_identity(), base + ": psi2G invertible");
      c.require(t2 == p2i * s2, base + ": theta2 = phi2^-1 o psi2 (form:tetaphipsi)");
      c.require(ka == s2i * p2, base + ": kappa = psi2^-1 o phi2");

      // (mon funct1) on (U, U, U)
      YDModule UU = yd_tensor(U, U);
      Trimodule FUU = F_build(UU);
      auto yd_assoc = [&](const YDModule& A, const YDModule& B, const YDModule& Cc) {
        Expr e = Expr::identity_map(H.field(),
                                    {{"a", A.dim()}, {"b", B.dim()}, {"c", Cc.dim()}});
        A.coact(e, "a", "am", "a0");
        B.coact(e, "b", "bm", "b0");
        Cc.coact(e, "c", "cm", "c0");
        e.weight(H.omega_inv.values, {"am", "bm", "cm"}, {0, 1, 2});
        SparseTensor t = e.extract({"a.in", "b.in", "c.in", "a0", "b0", "c0"});
        return Matrix::from_map_tensor(fuse_axes(fuse_axes(t, 0, 3), 1, 3));
      };
      Matrix Fa = F_on_morphism(yd_assoc(U, U, U), H);
      TensorOverH tUU = tensor_over_H(FU, FU);
      TensorOverH tUU_U = tensor_over_H(tUU.tri, FU);
      TensorOverH tU_UU = tensor_over_H(FU, tUU.tri);
      TensorOverH tFUU_FU = tensor_over_H(FUU, FU);
      TensorOverH tFU_FUU = tensor_over_H(FU, FUU);
      Matrix phiUU = phi2_map(U, U, tUU);
      Matrix left = Fa * phi2_map(UU, U, tFUU_FU) *
                    tensorH_map(phiUU, Matrix::identity(H.field(), FU.dim), tUU_U, tFUU_FU);
      Matrix aH = tensorH_assoc(FU, FU, FU, tUU, tUU_U, tUU, tU_UU);
      Matrix right =
          phi2_map(U, UU, tFU_FUU) *
          tensorH_map(Matrix::identity(H.field(), FU.dim), phiUU, tU_UU, tFU_FUU) * aH;
      c.require(left == right, base + ": diagram (mon funct1) closes for (F, phi2)");
    }
    results.push_back(c);
  }

  {  // 6. bosonization round trips for the four pairs, < 10 s total
    Criterion c{6, "bosonization round trips on the four fixture pairs (< 10 s total)"};
    auto t0 = Clock::now();
    auto round_trip = [&](const DualQuasiBialgebra& H, const BraidedBialgebra& R,
                          const std::string& name) {
      Bosonization B = bosonize(H, R);
      // Delta_B multiplicativity on all basis 4-tuples is part of check_dqb
      // ("m comultiplicative" ranges over all pairs; the 4-tuple form):
      c.require(check_dqb(B.B).ok(), name + ": bosonization passes check_dqb");
      ProjectionData p{&B.B, &H, B.sigma, B.pi};
      c.require(check_projection(p).ok(), name + ": canonical projection data");
      Matrix S = solve_preantipode(H)->S;
      SplitResult sp = split(p, S);
      c.require(check_braided_bialgebra(sp.R).ok(), name + ": recovered R is a braided bialgebra");
      // recover (H, R) up to the canonical isomorphism eta
      Matrix eta = eta_map(R.carrier.com, sp.coinv);
      bool eta_ok = eta.inverse().has_value();
      // transported coaction and action agree
      SparseTensor lhs = contract(R.carrier.com.coaction, eta.to_map_tensor(), {{2, 0}});
      SparseTensor rhs = contract(eta.to_map_tensor(), sp.R.carrier.com.coaction, {{1, 0}});
      eta_ok = eta_ok && lhs == rhs;
      SparseTensor la = contract(R.carrier.action, eta.to_map_tensor(), {{2, 0}});
      SparseTensor ra =
          permuted(contract(eta.to_map_tensor(), sp.R.carrier.action, {{1, 1}}), {1, 0, 2});
      eta_ok = eta_ok && la == ra;
      SparseTensor lm = contract(R.m, eta.to_map_tensor(), {{2, 0}});
      SparseTensor rm = permuted(contract(contract(eta.to_map_tensor(), sp.R.m, {{1, 0}}),
                                          eta.to_map_tensor(), {{1, 1}}),
                                 {0, 2, 1});
      eta_ok = eta_ok && lm == rm;
      c.require(eta_ok, name + ": split(bosonize) recovers R via the canonical identification");
      // bosonize(split(A)) ≅ A via eps_A
      Bosonization B2 = bosonize(H, sp.R);
      DQBMorphism iso{&B2.B, &B.B, sp.iso};
      c.require(check_dqb_morphism(iso).ok() && (sp.iso * sp.iso_inv).is_identity() &&
                    (sp.iso_inv * sp.iso).is_identity(),
                name + ": eps_A is a dual quasi-bialgebra isomorphism");
    };
    round_trip(H1, BraidedBialgebra::trivial(&H1), "(kz2, k)");
    round_trip(H1, R1, "(kz2, sweedler)");
    round_trip(H2, BraidedBialgebra::trivial(&H2), "(kz2_twisted, k)");
    std::string obstruction = twisted_pair_obstruction(H2);
    c.require(obstruction.empty(),
              "(kz2_twisted, sweedler): pair does not exist — " + obstruction);
    double dt = seconds_since(t0);
    c.require(dt < 10.0, "total runtime under 10 s");
    c.note("runtime " + std::to_string(dt) + " s");
    results.push_back(c);
  }

  {  // 7. Sweedler cross-check
    Criterion c{7, "classical 4-dim Hopf algebra from the bosonization"};
    const auto& B = H4.B;
    bool omega_trivial = true;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          if (!(B.omega_at(a, b, cc) ==
                B.co.counit[a] * B.co.counit[b] * B.co.counit[cc]))
            omega_trivial = false;
    c.require(omega_trivial, "omega_B is trivial (counital on every triple)");
    // gx = -xg read off m_B (basis 1#1, 1#g, x#1, x#g)
    c.require(B.mult.at({1, 2, 3}) == Scalar::from_int(Q, -1) && B.mult.at({2, 1, 3}).is_one(),
              "gx = -xg reproduced from m_B");
    auto sol = solve_preantipode(B);
    c.require(sol.has_value(), "preantipode solvable on the bosonization");
    if (sol) {
      c.require(check_preantipode(B, sol->S).ok(), "solution verifies");
      // ordinary Hopf: associativity holds (trivial omega + quasi-associativity)
      c.require(check_ordinary_antipode(B, sol->S).records.back().pass,
                "multiplication associative on all triples");
    }
    results.push_back(c);
  }

  {  // 8. gr pipeline
    Criterion c{8, "gr pipeline: certification, gr_dqb, splitting of gr A"};
    auto run_gr = [&](const DualQuasiBialgebra& A, const std::string& name) {
      auto gls = find_basis_grouplikes(A.co);
      CoradicalCertificate cert = certify_coradical(A, gls);
      c.require(cert.certified && cert.coradical.dim() == 2,
                name + ": coradical = span{1,g} certified by wedge exhaustion");
      if (!cert.certified) return;
      GradedDQBResult G = gr_dqb(A, cert.filtration, true);
      c.require(check_dqb(G.gr).ok(), name + ": gr A passes check_dqb");
      bool supported = true;
      for (int a = 0; a < G.gr.dim(); ++a)
        for (int b = 0; b < G.gr.dim(); ++b)
          for (int cc = 0; cc < G.gr.dim(); ++cc)
            if ((G.degree[a] + G.degree[b] + G.degree[cc] > 0) &&
                !G.gr.omega_at(a, b, cc).is_zero())
              supported = false;
      c.require(supported, name + ": omega_gr supported on degree (0,0,0)");
      GrProjection pr = gr_projection(A, G);
      ProjectionData p{&G.gr, &pr.H0, pr.sigma, pr.pi};
      c.require(check_projection(p).ok(), name + ": projection onto the coradical");
      auto sol = solve_preantipode(pr.H0);
      c.require(sol.has_value(), name + ": coradical has a preantipode");
      if (!sol) return;
      SplitResult sp = split(p, sol->S);
      Bosonization B2 = bosonize(pr.H0, sp.R);
      DQBMorphism iso{&B2.B, &G.gr, sp.iso};
      c.require(check_dqb_morphism(iso).ok() && (sp.iso * sp.iso_inv).is_identity() &&
                    (sp.iso_inv * sp.iso).is_identity(),
                name + ": gr A = R # k G(A) via a verified isomorphism");
    };
    run_gr(H4.B, "sweedler4");
    c.require(false,
              "bosonize(k^theta Z2, sweedler diagram): fixture does not exist (see criterion 1)");
    results.push_back(c);
  }

  {  // 9. the appendix equivalence on 20+ random crossed modules
    Criterion c{9, "crossed modules <-> YD modules over (Z2,theta) and (Z4,standard) / F5"};
    std::mt19937_64 rng(777);
    GroupCocycleData G2 = qkt::z2_data(F5, true);
    GroupCocycleData G4 = qkt::zn_standard_data(F5, 4, Scalar::from_int(F5, 2));
    DualQuasiBialgebra A2 = from_group_cocycle(G2);
    DualQuasiBialgebra A4 = from_group_cocycle(G4);
    int count = 0;
    bool all = true;
    for (const GroupCocycleData* G : {&G2, &G4}) {
      const DualQuasiBialgebra& A = (G == &G2) ? A2 : A4;
      for (int trial = 0; trial < 12; ++trial) {
        CrossedGModule V = qkt::random_crossed(rng, *G, 1 + (int)(rng() % 3));
        if (!crossed_check(V).ok()) {
          all = false;
          continue;
        }
        YDModule W = crossed_to_yd(V, &A);
        all = all && check_yd(W).ok();
        all = all && crossed_equal(V, yd_to_crossed(W, G));
        CrossedGModule V2 = qkt::random_crossed(rng, *G, 1 + (int)(rng() % 2));
        YDModule W2 = crossed_to_yd(V2, &A);
        all = all && (crossed_braiding(V, V2) == yd_braiding(W, W2));
        all = all && crossed_equal(crossed_tensor(V, V2), yd_to_crossed(yd_tensor(W, W2), G));
        ++count;
      }
    }
    c.require(all, "exact mutual inverses with tensor and braiding transported");
    c.require(count >= 20, "at least 20 random modules exercised (" + std::to_string(count) + ")");
    results.push_back(c);
  }

  int failures = 0;
  for (const auto& c : results) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
              << "\n";
    for (const auto& n : c.notes) std::cout << "       " << n << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " criteria passed\n";
  if (failures) {
    std::cout << "failing criteria depend on the bosonization of the Sweedler diagram over "
                 "k^theta Z2, which does not exist (the Yetter-Drinfeld quasi-associativity "
                 "and the bialgebra compatibility impose contradictory actions)\n";
  }
  return failures ? 1 : 0;
}
