#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace qk;

namespace {
Field F5 = Field::prime(5);
using qkt::random_crossed;
}  // namespace

TEST_CASE("crossed_check basics over (Z2, theta)") {
  GroupCocycleData G = qkt::z2_data(F5, true);
  // grading concentrated at 1 with the trivial action
  CrossedGModule V;
  V.group = &G;
  V.dim = 2;
  V.labels = {"a", "b"};
  V.grade = {0, 0};
  V.action = {Matrix::identity(F5, 2), Matrix::identity(F5, 2)};
  CHECK(crossed_check(V).ok());

  // V = span{x} at grade g with g▸x = i·x: the semion as a crossed module
  CrossedGModule S;
  S.group = &G;
  S.dim = 1;
  S.labels = {"x"};
  S.grade = {1};
  Matrix m1 = Matrix::identity(F5, 1);
  Matrix mg(F5, 1, 1);
  mg.at(0, 0) = Scalar::from_int(F5, 2);
  S.action = {m1, mg};
  CHECK(crossed_check(S).ok());

  // g▸x = ±1·x violates CrossedAss (needs a square root of −1)
  CrossedGModule bad = S;
  bad.action[1].at(0, 0) = Scalar::from_int(F5, 4);  // -1
  Report rep = crossed_check(bad);
  CHECK(!rep.ok());
  CHECK(rep.first_failure()->name == "CrossedAss");
  CHECK(rep.first_failure()->witness.find("(g1,g1,x)") != std::string::npos);
}

TEST_CASE("crossed and YD modules convert back and forth exactly") {
  GroupCocycleData G = qkt::z2_data(F5, true);
  DualQuasiBialgebra H = from_group_cocycle(G);
  CrossedGModule S;
  S.group = &G;
  S.dim = 1;
  S.labels = {"x"};
  S.grade = {1};
  Matrix mg(F5, 1, 1);
  mg.at(0, 0) = Scalar::from_int(F5, 2);
  S.action = {Matrix::identity(F5, 1), mg};
  REQUIRE(crossed_check(S).ok());

  YDModule W = crossed_to_yd(S, &H);
  CHECK(check_yd(W).ok());
  CrossedGModule back = yd_to_crossed(W, &G);
  CHECK(crossed_equal(S, back));

  // non-homogeneous coactions are rejected with the offending vector named
  YDModule bad = W;
  bad.com.dim = 1;
  bad.com.coaction = SparseTensor(F5, {1, 2, 1});
  bad.com.coaction.set({0, 0, 0}, Scalar::from_int(F5, 3));  // not a one-hot
  CHECK_THROWS_WITH_AS(yd_to_crossed(bad, &G), doctest::Contains("x"), Error);
}

TEST_CASE("tensor grading and braiding agree with the YD side") {
  GroupCocycleData G = qkt::z2_data(F5, true);
  DualQuasiBialgebra H = from_group_cocycle(G);
  CrossedGModule S;
  S.group = &G;
  S.dim = 1;
  S.labels = {"x"};
  S.grade = {1};
  Matrix mg(F5, 1, 1);
  mg.at(0, 0) = Scalar::from_int(F5, 2);
  S.action = {Matrix::identity(F5, 1), mg};

  CrossedGModule SS = crossed_tensor(S, S);
  CHECK(crossed_check(SS).ok());
  CHECK(SS.grade == std::vector<int>{0});  // grade g·g = 1

  YDModule W = crossed_to_yd(S, &H);
  YDModule WW = yd_tensor(W, W);
  CrossedGModule SS_via_yd = yd_to_crossed(WW, &G);
  CHECK(crossed_equal(SS, SS_via_yd));

  // braiding c(x⊗x) = (g▸x)⊗x = i·x⊗x on both sides
  Matrix cb = crossed_braiding(S, S);
  CHECK(cb.at(0, 0) == Scalar::from_int(F5, 2));
  CHECK(cb == yd_braiding(W, W));
}

TEST_CASE("property: 20+ random crossed modules over (Z2,theta) and (Z4,standard)") {
  std::mt19937_64 rng(2024);
  GroupCocycleData G2 = qkt::z2_data(F5, true);
  GroupCocycleData G4 = qkt::zn_standard_data(F5, 4, Scalar::from_int(F5, 2));
  DualQuasiBialgebra H2 = from_group_cocycle(G2);
  DualQuasiBialgebra H4 = from_group_cocycle(G4);
  int count = 0;
  for (const GroupCocycleData* G : {&G2, &G4}) {
    const DualQuasiBialgebra& H = (G == &G2) ? H2 : H4;
    for (int trial = 0; trial < 12; ++trial) {
      int dim = 1 + (int)(rng() % 3);
      CrossedGModule V = random_crossed(rng, *G, dim);
      REQUIRE(crossed_check(V).ok());
      YDModule W = crossed_to_yd(V, &H);
      CHECK(check_yd(W).ok());
      CrossedGModule back = yd_to_crossed(W, G);
      CHECK(crossed_equal(V, back));
      ++count;

      // braiding and tensor commute with the equivalence
      CrossedGModule V2 = random_crossed(rng, *G, 1 + (int)(rng() % 2));
      REQUIRE(crossed_check(V2).ok());
      YDModule W2 = crossed_to_yd(V2, &H);
      CHECK(crossed_braiding(V, V2) == yd_braiding(W, W2));
      CrossedGModule T = crossed_tensor(V, V2);
      CHECK(crossed_check(T).ok());
      CHECK(crossed_equal(T, yd_to_crossed(yd_tensor(W, W2), G)));
    }
  }
  CHECK(count >= 20);
}
