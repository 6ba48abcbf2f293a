#include <doctest.h>

#include "fixtures.hpp"

using namespace qk;
using qkt::q;

namespace {
Field F = Field::rationals();

Matrix closed_form_S(const Field& f, const Scalar& sg) {
  // S(1) = 1, S(g) = sg·g on the kZ2 basis
  Matrix S(f, 2, 2);
  S.at(0, 0) = Scalar::one(f);
  S.at(1, 1) = sg;
  return S;
}
}  // namespace

TEST_CASE("check_preantipode: closed forms for the group algebras") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  CHECK(check_preantipode(H1, closed_form_S(F, q(F, 1))).ok());  // S(g) = g⁻¹ = g

  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  CHECK(check_preantipode(H2, closed_form_S(F, q(F, -1))).ok());  // S(g) = -g

  // closed form from the group lemma matches
  GroupCocycleData d1 = qkt::z2_data(F, false), d2 = qkt::z2_data(F, true);
  auto S1 = group_preantipode(d1, H1);
  auto S2 = group_preantipode(d2, H2);
  REQUIRE(S1);
  REQUIRE(S2);
  CHECK(check_preantipode(H1, *S1).ok());
  CHECK(check_preantipode(H2, *S2).ok());
  CHECK(S2->at(1, 1) == q(F, -1));
}

TEST_CASE("check_preantipode: solver-confirmed failing witness") {
  // S(1) = 1, S(g) = 1 fails (col 1 S) at h = g: lhs g⊗1, rhs 1⊗1
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  Matrix S(F, 2, 2);
  S.at(0, 0) = Scalar::one(F);
  S.at(0, 1) = Scalar::one(F);
  Report rep = check_preantipode(H1, S);
  CHECK(!rep.ok());
  const CheckRecord* fail = rep.first_failure();
  CHECK(fail->name == "col 1 S");
  CHECK(fail->witness.find("(g)") != std::string::npos);
}

TEST_CASE("solve_preantipode: group algebras succeed, idempotent monoid does not") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  auto sol1 = solve_preantipode(H1);
  REQUIRE(sol1);
  CHECK(sol1->S == closed_form_S(F, q(F, 1)));
  CHECK(sol1->solution_space_dim == 0);

  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  auto sol2 = solve_preantipode(H2);
  REQUIRE(sol2);
  CHECK(sol2->S == closed_form_S(F, q(F, -1)));

  // monoid algebra of {1, e} has no preantipode: the underlying monoid is not
  // a group
  DualQuasiBialgebra M = qkt::make_monoid2(F);
  CHECK(!solve_preantipode(M));
  CHECK(!qkt::idempotent_monoid_data(F).inverse_table());
}

TEST_CASE("round trip: solver output passes the checker on every fixture") {
  for (bool twisted : {false, true}) {
    DualQuasiBialgebra H = twisted ? qkt::make_kz2_twisted(F) : qkt::make_kz2(F);
    auto sol = solve_preantipode(H);
    REQUIRE(sol);
    CHECK(check_preantipode(H, sol->S).ok());
    CHECK(check_derived_identities(H, sol->S).ok());
  }
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  Bosonization B = bosonize(H1, qkt::sweedler_R(&H1));
  auto sol = solve_preantipode(B.B);
  REQUIRE(sol);
  CHECK(check_preantipode(B.B, sol->S).ok());
  CHECK(check_derived_identities(B.B, sol->S).ok());
}

TEST_CASE("derived identities reject a perturbed S as a precondition violation") {
  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  Matrix bad = closed_form_S(F, q(F, 2));  // not a preantipode
  Report rep = check_derived_identities(H2, bad);
  CHECK(!rep.ok());
  CHECK(rep.first_failure()->name == "precondition");
}

TEST_CASE("ordinary Hopf antipodes pass check_preantipode when omega is trivial") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  CHECK(check_preantipode(H1, closed_form_S(F, q(F, 1))).ok());

  // Sweedler's H4: s(1)=1, s(g)=g, s(x)=-gx, s(gx)=... basis {1#1,1#g,x#1,x#g}
  Bosonization B = bosonize(H1, qkt::sweedler_R(&H1));
  const auto& H4 = B.B;
  // find the antipode via the solver and confirm the classical values
  auto sol = solve_preantipode(H4);
  REQUIRE(sol);
  // the solver's S need not be the antipode itself; only check it is a
  // preantipode, then verify the honest antipode below
  CHECK(check_preantipode(H4, sol->S).ok());

  // build the classical antipode by solving s(h1)h2 = eps(h)1 as a linear
  // system: s = (id)⁻¹ in the convolution algebra End(H4)
  int n = H4.dim();
  Matrix conv(F, n * n, n * n);
  // coefficient of s[i][j] in (s*id)(h) at output k: sum over Δ(h)=(a,b):
  // [a==j] mult[i][b][k]
  for (int h = 0; h < n; ++h)
    for (const auto& [dk, dv] : H4.co.delta.entries()) {
      if (dk[0] != h) continue;
      int a = dk[1], b = dk[2];
      for (int i = 0; i < n; ++i)
        for (const auto& [mk, mv] : H4.mult.entries()) {
          if (mk[0] != i || mk[1] != b) continue;
          conv.at(h * n + mk[2], a * n + i) += dv * mv;
        }
    }
  Vec rhs(n * n, Scalar::zero(F));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) rhs[h * n + k] = H4.co.counit[h] * H4.unit[k];
  auto sv = solve_linear(conv, rhs);
  REQUIRE(sv);
  Matrix anti(F, n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) anti.at(i, j) = (*sv)[j * n + i];
  CHECK(check_ordinary_antipode(H4, anti).ok());
  CHECK(check_preantipode(H4, anti).ok());
}

TEST_CASE("cocommutative_to_hopf on both group algebras") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  auto S1 = solve_preantipode(H1);
  REQUIRE(S1);
  QuasiHopfData q1 = cocommutative_to_hopf(H1, S1->S);
  CHECK(q1.s == closed_form_S(F, q(F, 1)));  // s(g) = g
  CHECK(q1.beta == H1.co.counit);  // β = ε since S = id-on-g
  CHECK(check_ordinary_antipode(H1, q1.s).ok());
  CHECK(check_quasi_hopf(H1, q1).ok());
  CHECK(beta_conv_s(H1, q1) == S1->S);

  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  auto S2 = solve_preantipode(H2);
  REQUIRE(S2);
  QuasiHopfData q2 = cocommutative_to_hopf(H2, S2->S);
  CHECK(q2.s == closed_form_S(F, q(F, 1)));  // s(g) = g
  CHECK(q2.beta[0] == q(F, 1));
  CHECK(q2.beta[1] == q(F, -1));  // β(g) = εS(g) = -1
  CHECK(check_ordinary_antipode(H2, q2.s).ok());
  CHECK(check_quasi_hopf(H2, q2).ok());
  CHECK(beta_conv_s(H2, q2) == S2->S);  // S = β∗s

  // non-cocommutative input is a precondition error
  Bosonization B = bosonize(H1, qkt::sweedler_R(&H1));
  auto SB = solve_preantipode(B.B);
  REQUIRE(SB);
  CHECK_THROWS_AS(cocommutative_to_hopf(B.B, SB->S), Error);
}

TEST_CASE("check_quasi_hopf: trivial Hopf data passes; beta = eps over the twist fails ant 3") {
  DualQuasiBialgebra H1 = qkt::make_kz2(F);
  QuasiHopfData qd;
  qd.s = closed_form_S(F, q(F, 1));
  qd.alpha = H1.co.counit;
  qd.beta = H1.co.counit;
  CHECK(check_quasi_hopf(H1, qd).ok());

  DualQuasiBialgebra H2 = qkt::make_kz2_twisted(F);
  Report rep = check_quasi_hopf(H2, qd);  // same data over the twisted algebra
  CHECK(!rep.ok());
  // oracle pins the first failing condition: (ant 1) and (ant 2) hold since
  // g·g = 1 = β(g)1; the ω-side of (ant 3) sees ω(g,g,g) = −1 ≠ 1
  const CheckRecord* fail = rep.first_failure();
  CHECK(fail->name == "ant 3 (omega side)");
  CHECK(fail->witness.find("(g)") != std::string::npos);
}
