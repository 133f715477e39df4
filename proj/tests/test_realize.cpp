#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pocfrob/realize.hpp"

using namespace pocfrob;

namespace {

bool solves_intertwine(const Mat& X, const Mat& A, const Mat& B) {
  return mat_mul(X, A) == mat_mul(B, X);  // X A = B X
}

}  // namespace

TEST_CASE("element_of_order") {
  auto m = element_of_order(4, 1, 5);
  REQUIRE(m);
  CHECK(m->at(0, 0) == 2);  // first unit of order 4 in the scan

  CHECK(element_of_order(1, 2, 3) == Mat::identity(2, 3));

  auto c = element_of_order(8, 2, 3);
  REQUIRE(c);
  CHECK(mat_has_order(*c, 8));
  // companion shape: subdiagonal 1, first column otherwise 0
  CHECK(c->at(1, 0) == 1);
  CHECK(c->at(0, 0) == 0);
  // deterministic
  CHECK(element_of_order(8, 2, 3) == c);

  CHECK_THROWS_AS(element_of_order(5, 1, 5), std::domain_error);
  CHECK_FALSE(element_of_order(7, 1, 5));   // 7 does not divide |GL(1,5)| = 4
  CHECK_FALSE(element_of_order(16, 2, 3));  // 16 does not divide |GL(2,3)| = 48
}

TEST_CASE("conjugator_space") {
  // identity, gamma = 1: the whole matrix space
  CHECK(conjugator_space(Mat::identity(2, 5), 1).size() == 4);
  CHECK(conjugator_space(Mat::identity(3, 3), 1).size() == 9);

  // A of order 3 in GL(2,5), gamma = 2: dimension 2, verified against a scan
  // of all 625 matrices
  auto a3 = element_of_order(3, 2, 5);
  REQUIRE(a3);
  const auto basis = conjugator_space(*a3, 2);
  CHECK(basis.size() == 2);
  const Mat target = mat_pow(*a3, 2);
  u64 solutions = 0;
  Mat x(2, 5);
  for (u64 code = 0; code < 625; ++code) {
    u64 t = code;
    for (auto& e : x.a) {
      e = t % 5;
      t /= 5;
    }
    if (solves_intertwine(x, *a3, target)) ++solutions;
  }
  CHECK(solutions == 25);  // 5^dim
  for (const Mat& b : basis) CHECK(solves_intertwine(b, *a3, target));

  // A of order 25 in GL(4,7) (companion), gamma = 7: dimension 4
  auto a25 = element_of_order(25, 4, 7);
  REQUIRE(a25);
  const auto basis4 = conjugator_space(*a25, 7);
  CHECK(basis4.size() == 4);
  const Mat t7 = mat_pow(*a25, 7);
  for (const Mat& b : basis4) CHECK(solves_intertwine(b, *a25, t7));
}

TEST_CASE("metacyclic realization") {
  // C3 x| C8 inside GL(2,5)
  auto w = realize_complement(ComplementSpec::metacyclic(3, 8, 2), 2, 5);
  REQUIRE(w);
  auto els = action_elements(*w);
  CHECK(els.size() == 24);

  // the same shape does not embed where the orders do not fit
  CHECK_FALSE(realize_complement(ComplementSpec::metacyclic(5, 24, 2), 2, 11));
  CHECK_FALSE(realize_complement(ComplementSpec::metacyclic(15, 8, 2), 2, 11));
  CHECK_THROWS_AS(realize_complement(ComplementSpec::metacyclic(3, 8, 2), 2, 3),
                  std::domain_error);  // p divides the order
}

TEST_CASE("SL(2,3) and SL(2,5) realization") {
  auto s3 = realize_complement(ComplementSpec::sl2_3(), 2, 5);
  REQUIRE(s3);
  CHECK(action_elements(*s3).size() == 24);
  const OrderCensus c = order_census_bruteforce(group_from_matrices(5, action_elements(*s3)));
  CHECK(c.entries == std::map<u64, u64>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});

  auto s5 = realize_complement(ComplementSpec::sl2_5(), 2, 11);
  REQUIRE(s5);
  const OrderCensus c5 = order_census_bruteforce(group_from_matrices(11, action_elements(*s5)));
  CHECK(c5.entries ==
        std::map<u64, u64>{{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}});

  // only probed in dimension 2
  CHECK_FALSE(realize_complement(ComplementSpec::sl2_5(), 4, 11));
}

TEST_CASE("quaternion-times-cyclic realization") {
  // Q16 x C5 in GL(2,41); census must match the symbolic product
  auto w = realize_complement(ComplementSpec::quat_cyclic(4, 5), 2, 41);
  REQUIRE(w);
  const OrderCensus brute = order_census_bruteforce(group_from_matrices(41, action_elements(*w)));
  CHECK(brute == product_census(genquat_census(4), cyclic_census(5)));

  // Q8 x C3 has no embedding in GL(2,5): the centralizer of an irreducible
  // quaternion group is scalar, and F5 has no scalar of order 3
  CHECK_FALSE(realize_complement(ComplementSpec::quat_cyclic(3, 3), 2, 5));
  // Q16 x C5 has no embedding in GL(4,3)
  CHECK_FALSE(realize_complement(ComplementSpec::quat_cyclic(4, 5), 4, 3));
  // bare Q8 inside GL(2,5)
  auto q8 = realize_complement(ComplementSpec::quat_cyclic(3, 1), 2, 5);
  REQUIRE(q8);
  CHECK(action_elements(*q8).size() == 8);
}

TEST_CASE("cyclic realization matches Singer cycles") {
  for (const auto& [n, r, p] : {std::tuple<u64, u32, u64>{8, 2, 3},
                                {24, 2, 5},
                                {48, 2, 7},
                                {80, 4, 3}}) {
    auto w = realize_complement(ComplementSpec::cyclic(n), r, p);
    REQUIRE(w);
    CHECK(is_fixed_point_free(*w));
    CHECK(action_elements(*w).size() == n);
  }
  CHECK_FALSE(realize_complement(ComplementSpec::cyclic(7), 1, 5));
}

TEST_CASE("lift_action") {
  // identity action lifts to the identity action
  {
    MatrixAction a;
    a.modulus = 5;
    a.prime = 5;
    a.k = 1;
    a.dim = 1;
    a.spec = ComplementSpec::cyclic(1);
    a.generators = {{"g", Mat::identity(1, 5)}};
    const MatrixAction lifted = lift_action(a, 2);
    CHECK(lifted.generators.front().second == Mat::identity(1, 25));
  }

  // (2) mod 5 lifted to mod 25 must give (7): 7 = 2 mod 5 and 7^4 = 1 mod 25
  {
    Mat g(1, 5);
    g.at(0, 0) = 2;
    MatrixAction a;
    a.modulus = 5;
    a.prime = 5;
    a.k = 1;
    a.dim = 1;
    a.spec = ComplementSpec::cyclic(4);
    a.generators = {{"g", g}};
    const MatrixAction lifted = lift_action(a, 2);
    CHECK(lifted.generators.front().second.at(0, 0) == 7);
    // oracle: the unique unit of order 4 mod 25 reducing to 2
    u64 expected = 0;
    for (u64 u = 1; u < 25; ++u) {
      if (u % 5 == 2 && pow_mod(u, 4, 25) == 1 && pow_mod(u, 2, 25) != 1) expected = u;
    }
    CHECK(expected == 7);
  }

  // order-8 companion mod 3 lifted to mod 9 keeps order 8 and reduces back
  {
    auto singer = element_of_order(8, 2, 3);
    REQUIRE(singer);
    MatrixAction a;
    a.modulus = 3;
    a.prime = 3;
    a.k = 1;
    a.dim = 2;
    a.spec = ComplementSpec::cyclic(8);
    a.generators = {{"g", *singer}};
    const MatrixAction lifted = lift_action(a, 2);
    const Mat& m = lifted.generators.front().second;
    CHECK(m.mod == 9);
    CHECK(mat_has_order(m, 8));
    CHECK(mat_reduce(m, 3) == *singer);
  }

  // multi-generator lifts with relations: SL(2,3) and C3 x| C8 to mod 25,
  // Q8 to mod 9
  struct LiftCase {
    ComplementSpec spec;
    u64 p;
    bool expect_fpf;
  };
  const LiftCase cases[] = {
      {ComplementSpec::sl2_3(), 5, true},
      {ComplementSpec::metacyclic(3, 8, 2), 5, true},
      {ComplementSpec::quat_cyclic(3, 1), 3, true},
  };
  for (const auto& c : cases) {
    auto act = realize_complement(c.spec, 2, c.p);
    REQUIRE(act);
    const MatrixAction lifted = lift_action(*act, 2);
    CHECK(lifted.modulus == c.p * c.p);
    verify_action(lifted);  // orders, relations, closure
    for (std::size_t i = 0; i < lifted.generators.size(); ++i) {
      CHECK(mat_reduce(lifted.generators[i].second, c.p) == act->generators[i].second);
    }
    CHECK(is_fixed_point_free(lifted) == c.expect_fpf);
  }
}
