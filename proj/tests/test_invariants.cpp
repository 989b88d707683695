#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/invariants.hpp"
#include "hitchin/lie.hpp"
#include "hitchin/matrix.hpp"

using namespace hitchin;

TEST_CASE("group parsing and validation") {
  CHECK(parse_group("gl") == GroupKind::GL);
  CHECK(parse_group("so_even") == GroupKind::SO_even);
  CHECK_THROWS_AS(parse_group("e8"), domain_error);
  CHECK_THROWS_AS(validate({GroupKind::SL, 1}), domain_error);
  CHECK_THROWS_AS(validate({GroupKind::SO_even, 1}), domain_error);
  CHECK_THROWS_AS(validate({GroupKind::GL, 0}), domain_error);
}

TEST_CASE("invariant degrees per family") {
  CHECK(invariant_degrees({GroupKind::GL, 3}) == std::vector<int>{1, 2, 3});
  CHECK(invariant_degrees({GroupKind::SL, 3}) == std::vector<int>{2, 3});
  CHECK(invariant_degrees({GroupKind::Sp, 2}) == std::vector<int>{2, 4});
  CHECK(invariant_degrees({GroupKind::SO_odd, 2}) == std::vector<int>{2, 4});
  // the last entry for SO(2n) is the Pfaffian degree n
  CHECK(invariant_degrees({GroupKind::SO_even, 3}) == std::vector<int>{2, 4, 3});
}

TEST_CASE("section spaces of k-differentials") {
  CHECK(section_space_dim(1, 2) == 2);   // holomorphic differentials, genus 2
  CHECK(section_space_dim(2, 2) == 3);   // quadratic differentials, genus 2
  CHECK(section_space_dim(4, 2) == 7);
  CHECK(section_space_dim(0, 2) == 1);
  CHECK_THROWS_AS(section_space_dim(-1, 2), domain_error);
}

TEST_CASE("dimension reports on frozen examples") {
  const DimensionReport gl2 = dimensions({GroupKind::GL, 2}, 2);
  CHECK(gl2.base_dim == 5);
  CHECK(gl2.moduli_dim == 10);
  CHECK(gl2.half_dim_ok);
  CHECK(gl2.degree_sum_ok);

  const DimensionReport sp4 = dimensions({GroupKind::Sp, 2}, 2);
  CHECK(sp4.degrees == std::vector<int>{2, 4});
  CHECK(sp4.base_dim == 10);
  CHECK(sp4.moduli_dim == 20);
  CHECK(sp4.half_dim_ok);
  CHECK(sp4.degree_sum_ok);

  const DimensionReport sl2g3 = dimensions({GroupKind::SL, 2}, 3);
  CHECK(sl2g3.base_dim == 6);
  CHECK(sl2g3.moduli_dim == 12);

  const DimensionReport so4 = dimensions({GroupKind::SO_even, 2}, 2);
  CHECK(so4.base_dim == 6);  // dim so(4) = 6, g - 1 = 1
  CHECK(so4.moduli_dim == 12);
}

TEST_CASE("characteristic structure of an actual sp(4) element") {
  const AlgebraBasis basis = standard_basis({Family::sp, 2});
  RatMat x(4, 4);
  Rational s(1);
  for (const auto& e : basis.elements) {
    x = x + e.scaled(s);
    s += Rational(1, 3);
  }
  const UniPoly cp = char_poly(x);
  const CharStructureReport rep = validate_char_structure({GroupKind::Sp, 2}, cp);
  CHECK(rep.ok);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "odd_coefficients_vanish");
}

TEST_CASE("characteristic structure rejects an off-pattern polynomial") {
  // eta^4 + eta^3 + 1 has a nonzero odd coefficient
  UniPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(1), Rational(1)});
  CHECK_FALSE(validate_char_structure({GroupKind::Sp, 2}, p).ok);
  // trace coefficient must vanish for sl
  UniPoly q(std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  CHECK_FALSE(validate_char_structure({GroupKind::SL, 2}, q).ok);
  UniPoly tr0(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  CHECK(validate_char_structure({GroupKind::SL, 2}, tr0).ok);
}

TEST_CASE("so(2n) constant term is a perfect square with the pfaffian as root") {
  const AlgebraBasis basis = standard_basis({Family::so_even, 2});
  RatMat x(4, 4);
  Rational s(1, 2);
  for (const auto& e : basis.elements) {
    x = x + e.scaled(s);
    s += Rational(2, 5);
  }
  const CharStructureReport rep = validate_char_structure({GroupKind::SO_even, 2}, char_poly(x));
  CHECK(rep.ok);
  REQUIRE(rep.pfaffian_sqrt.has_value());
  const Rational root = rep.pfaffian_sqrt->coeff(0);
  const Rational pf = pfaffian(x);
  CHECK((root == pf || root == -pf));
}

TEST_CASE("slope, pushforward degree, toledo") {
  CHECK(slope(3, 6) == Rational(1, 2));
  CHECK(slope(4, 2) == Rational(2));
  CHECK(slope(-4, 6) == Rational(-2, 3));
  CHECK_THROWS_AS(slope(1, 0), domain_error);
  // deg pi_* L = deg L - n(n-1)(g-1) for the degree-n cover
  CHECK(pushforward_degree(0, 2, 2) == -2);
  CHECK(pushforward_degree(3, 3, 2) == -3);
  CHECK(toledo(3, 1) == 2);
  CHECK(toledo(0, 4) == -4);
}
