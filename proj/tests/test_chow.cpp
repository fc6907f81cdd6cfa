#include <doctest.h>

#include <random>

#include "qcp2/chow.hpp"

using namespace qcp2;

namespace {
ClassI random_class(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  ClassI x;
  for (int i = 0; i < 6; ++i) x.t[i] = Rational(num(rng), den(rng));
  return x;
}
}  // namespace

TEST_CASE("plane cup product") {
  CHECK(cup_p2(ClassP2::h(), ClassP2::h()) == ClassP2::h2());
  CHECK(cup_p2(ClassP2::h(), ClassP2::h2()).is_zero());
  const ClassP2 x = ClassP2::h().scaled(Rational(3)) + ClassP2::h2();
  CHECK(cup_p2(ClassP2::one(), x) == x);
}

TEST_CASE("plane degree map") {
  CHECK(integrate_p2(ClassP2::h2()) == Rational(1));
  CHECK(integrate_p2(ClassP2::h()) == Rational(0));
  const ClassP2 x =
      ClassP2::h2().scaled(Rational(3)) + ClassP2::h().scaled(Rational(5));
  CHECK(integrate_p2(x) == Rational(3));
}

TEST_CASE("incidence-variety cup product") {
  validate_chow_table();  // throws on any oracle failure
  // h * hv = h^2 + hv^2
  CHECK(cup_i(ClassI::basis(1), ClassI::basis(3)) ==
        ClassI::basis(2) + ClassI::basis(4));
  // h^2 * hv is the point class
  CHECK(cup_i(ClassI::basis(2), ClassI::basis(3)) == ClassI::basis(5));
  // h * h^2 = h^3 = 0
  CHECK(cup_i(ClassI::basis(1), ClassI::basis(2)).is_zero());
}

TEST_CASE("anti-diagonal pairing") {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(integrate_i(cup_i(ClassI::basis(i), ClassI::basis(j))) ==
            Rational(i + j == 5 ? 1 : 0));
}

TEST_CASE("integration picks the point class") {
  CHECK(integrate_i(ClassI::basis(5)) == Rational(1));
  CHECK(integrate_i(ClassI::basis(2)) == Rational(0));
  CHECK(integrate_i(cup_i(ClassI::basis(1), ClassI::basis(4))) == Rational(1));
}

TEST_CASE("cup_i associativity and commutativity on all basis triples") {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(cup_i(ClassI::basis(i), ClassI::basis(j)) ==
            cup_i(ClassI::basis(j), ClassI::basis(i)));
      for (int k = 0; k < 6; ++k) {
        const ClassI lhs =
            cup_i(cup_i(ClassI::basis(i), ClassI::basis(j)), ClassI::basis(k));
        const ClassI rhs =
            cup_i(ClassI::basis(i), cup_i(ClassI::basis(j), ClassI::basis(k)));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("bundle maps") {
  CHECK(pullback_p(ClassP2::h()) == ClassI::basis(1));
  CHECK(pullback_p(ClassP2::one()) == ClassI::basis(0));
  const ClassP2 x =
      ClassP2::h().scaled(Rational(2)) + ClassP2::h2().scaled(Rational(3));
  CHECK(pullback_p(x) ==
        ClassI::basis(1).scaled(Rational(2)) +
            ClassI::basis(2).scaled(Rational(3)));

  CHECK(pushforward_p(ClassI::basis(1)).is_zero());
  CHECK(pushforward_p(ClassI::basis(3)) == ClassP2::one());
  CHECK(pushforward_p(ClassI::basis(4)) == ClassP2::h());

  // kernel characterization: p_* p^* = 0, and p_* is bijective on the
  // complementary span
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(-9, 9);
  for (int rep = 0; rep < 50; ++rep) {
    ClassP2 x2;
    for (int i = 0; i < 3; ++i) x2.c[i] = Rational(num(rng), 1);
    CHECK(pushforward_p(pullback_p(x2)).is_zero());
  }
  for (int i = 0; i < 3; ++i)
    CHECK(pushforward_p(ClassI::basis(3 + i)) == ClassP2::basis(i));
}

TEST_CASE("projection formula on basis classes") {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      const ClassP2 x = ClassP2::basis(i);
      const ClassI y = ClassI::basis(j);
      const Rational lhs =
          integrate_p2(pushforward_p(cup_i(pullback_p(x), y)));
      const Rational rhs = integrate_p2(cup_p2(x, pushforward_p(y)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("diagonal reconstruction") {
  for (int i = 0; i < 6; ++i)
    CHECK(diagonal_decompose(ClassI::basis(i)) == ClassI::basis(i));
  std::mt19937 rng(29);
  for (int rep = 0; rep < 100; ++rep) {
    const ClassI x = random_class(rng);
    CHECK(diagonal_decompose(x) == x);
  }
}

TEST_CASE("curve class") {
  CHECK(curve_class(1) == ClassI::basis(4));
  CHECK(curve_class(2) ==
        ClassI::basis(4).scaled(Rational(2)) +
            ClassI::basis(2).scaled(Rational(2)));
  CHECK_THROWS_AS(curve_class(0), InvalidDegree);
  // divisor pairing against the curve class: h gives d, hv gives 2d-2
  for (int d = 1; d <= 5; ++d) {
    CHECK(integrate_i(cup_i(ClassI::basis(1), curve_class(d))) == Rational(d));
    CHECK(integrate_i(cup_i(ClassI::basis(3), curve_class(d))) ==
          Rational(2 * d - 2));
  }
}
