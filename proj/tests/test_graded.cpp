#include <doctest.h>

#include "fixtures.hpp"

using namespace qk;
using qkt::basis_vec;
using qkt::q;

namespace {
Field F = Field::rationals();
}

TEST_CASE("coradical certification on the 4-dim bosonization") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  Bosonization B = bosonize(H1, qkt::sweedler_R(&H1));
  auto gls = find_basis_grouplikes(B.B.co);
  REQUIRE(gls.size() == 2);  // 1#1 and 1#g
  CoradicalCertificate cert = certify_coradical(B.B, gls);
  CHECK(cert.certified);
  CHECK(cert.filtration.layers.size() == 2);
  CHECK(cert.filtration.layers[0].dim() == 2);

  // a non-grouplike declaration is refused
  CoradicalCertificate bad = certify_coradical(B.B, {basis_vec(F, 4, 2)});
  CHECK(!bad.certified);
  CHECK(bad.note.find("not grouplike") != std::string::npos);

  // declaring only {1} fails exhaustion
  CoradicalCertificate partial = certify_coradical(B.B, {basis_vec(F, 4, 0)});
  CHECK(!partial.certified);
  CHECK(partial.note.find("exhaustion failed") != std::string::npos);
}

TEST_CASE("gr of a cosemisimple algebra is itself") {
  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  CoradicalCertificate cert = certify_coradical(H2, find_basis_grouplikes(H2.co));
  REQUIRE(cert.certified);
  GradedDQBResult G = gr_dqb(H2, cert.filtration, true);
  CHECK(check_dqb(G.gr).ok());
  CHECK(G.gr.mult == H2.mult);
  CHECK(G.gr.co.delta == H2.co.delta);
  CHECK(G.gr.omega.values == H2.omega.values);
}

TEST_CASE("gr pipeline on the coradically graded bosonization") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  BraidedBialgebra R = qkt::sweedler_R(&H1);
  Bosonization B = bosonize(H1, R);
  CoradicalCertificate cert = certify_coradical(B.B, find_basis_grouplikes(B.B.co));
  REQUIRE(cert.certified);
  GradedDQBResult G = gr_dqb(B.B, cert.filtration, true);
  CHECK(check_dqb(G.gr).ok());

  // ω_gr is supported on degree (0,0,0)
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (G.degree[a] + G.degree[b] + G.degree[c] > 0)
          CHECK(G.gr.omega_at(a, b, c).is_zero());

  // explicit iso gr A ≅ A from the grading (A is coradically graded): the
  // representative matrix intertwines all structures
  Matrix phi = Matrix::from_columns(F, 4, G.reps);
  REQUIRE(phi.inverse());
  DQBMorphism iso{&G.gr, &B.B, phi};
  CHECK(check_dqb_morphism(iso).ok());

  GrProjection pr = gr_projection(B.B, G);
  CHECK(check_dqb(pr.H0).ok());
  ProjectionData p{&G.gr, &pr.H0, pr.sigma, pr.pi};
  CHECK(check_projection(p).ok());

  auto sol = solve_preantipode(pr.H0);
  REQUIRE(sol);
  SplitResult sp = split(p, sol->S);
  CHECK(check_braided_bialgebra(sp.R).ok());
  CHECK(sp.R.dim() == 2);
  // the diagram recovers the Sweedler data: odd generator with x² = 0 and
  // action by −1
  Bosonization B2 = bosonize(pr.H0, sp.R);
  DQBMorphism iso2{&B2.B, &G.gr, sp.iso};
  CHECK(check_dqb_morphism(iso2).ok());
  CHECK((sp.iso * sp.iso_inv).is_identity());
  CHECK((sp.iso_inv * sp.iso).is_identity());
}

TEST_CASE("gr with a declared (non-certified) filtration and precondition failures") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  Bosonization B = bosonize(H1, qkt::sweedler_R(&H1));
  // declared filtration equal to the coradical one
  Filtration filt;
  filt.layers.push_back(Subspace::span(F, 4, {basis_vec(F, 4, 0), basis_vec(F, 4, 1)}));
  filt.layers.push_back(Subspace::full(F, 4));
  GradedDQBResult G = gr_dqb(B.B, filt, false);
  CHECK(!G.certified);
  CHECK(check_dqb(G.gr).ok());

  // a filtration whose layer 0 is not closed under multiplication
  Filtration badf;
  badf.layers.push_back(Subspace::span(F, 4, {basis_vec(F, 4, 0), basis_vec(F, 4, 2)}));
  badf.layers.push_back(Subspace::full(F, 4));
  CHECK_THROWS_AS(gr_dqb(B.B, badf, false), Error);
}

TEST_CASE("grouplikes of a pointed dual quasi-Hopf fixture form a group") {
  // k^θZ2 is pointed with G(A) = {1, g}: closure and inverses in the table
  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  auto gls = find_basis_grouplikes(H2.co);
  REQUIRE(gls.size() == 2);
  // closure under multiplication and existence of inverses
  for (const auto& a : gls)
    for (const auto& b : gls) {
      Vec ab = H2.multiply(a, b);
      bool found = false;
      for (const auto& c : gls)
        if (ab == c) found = true;
      CHECK(found);
    }
  for (const auto& a : gls) {
    bool has_inverse = false;
    for (const auto& b : gls)
      if (H2.multiply(a, b) == H2.unit && H2.multiply(b, a) == H2.unit) has_inverse = true;
    CHECK(has_inverse);
  }
  // while the idempotent monoid fixture has a grouplike without inverse
  DualQuasiBialgebra M = qkt::make_monoid2(F);
  auto mg = find_basis_grouplikes(M.co);
  REQUIRE(mg.size() == 2);
  bool e_invertible = false;
  for (const auto& b : mg)
    if (M.multiply(mg[1], b) == M.unit) e_invertible = true;
  CHECK(!e_invertible);
}
