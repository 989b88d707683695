#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/divisors.hpp"

using namespace hitchin;

namespace {

const UniPoly w = UniPoly::variable();

SpectralAlgebra split_conic() {
  // eta^2 = w^2, rational sheets eta = w and eta = -w
  return SpectralAlgebra(BiSpectralPolynomial(2, {-(w * w), UniPoly{}}));
}

}  // namespace

TEST_CASE("points must lie on the curve") {
  Divisor d{split_conic(), {}};
  add_point(d, {Rational(2), Rational(2)}, 1);
  add_point(d, {Rational(2), Rational(-2)}, 3);
  CHECK(degree(d) == 4);
  CHECK_THROWS_AS(add_point(d, {Rational(2), Rational(1)}, 1), domain_error);
  // multiplicities merge and cancel
  add_point(d, {Rational(2), Rational(2)}, -1);
  CHECK(degree(d) == 3);
  CHECK(d.support.size() == 1);
}

TEST_CASE("fibers enumerate rational points with multiplicity") {
  const SpectralAlgebra a = split_conic();
  const FiberReport f = fiber_points(a, Rational(3));
  CHECK(f.irreducible_factors.empty());
  CHECK(f.total_degree == 2);
  REQUIRE(f.points.size() == 2);

  const Divisor d = fiber_divisor(a, Rational(3));
  CHECK(degree(d) == 2);

  // the fiber over w = 0 is the double point eta = 0
  const Divisor origin = fiber_divisor(a, Rational(0));
  CHECK(degree(origin) == 2);
  REQUIRE(origin.support.size() == 1);
  CHECK(origin.support.begin()->second == 2);
}

TEST_CASE("fibers with irrational points are refused at divisor level") {
  const SpectralAlgebra a(BiSpectralPolynomial(2, {-w, UniPoly{}}));  // eta^2 = w
  const FiberReport f = fiber_points(a, Rational(2));  // eta = +-sqrt(2)
  CHECK_FALSE(f.irreducible_factors.empty());
  CHECK_THROWS_AS(fiber_divisor(a, Rational(2)), domain_error);
  const Divisor ok = fiber_divisor(a, Rational(4));  // eta = +-2
  CHECK(degree(ok) == 2);
}

TEST_CASE("norm aggregates sheet points to the base") {
  const SpectralAlgebra a = split_conic();
  Divisor d{a, {}};
  add_point(d, {Rational(1), Rational(1)}, 2);
  add_point(d, {Rational(1), Rational(-1)}, 1);
  add_point(d, {Rational(5), Rational(5)}, -1);
  const BaseDivisor nd = norm(d);
  REQUIRE(nd.support.size() == 2);
  CHECK(nd.support.at(Rational(1)) == 3);
  CHECK(nd.support.at(Rational(5)) == -1);
  CHECK(degree(nd) == degree(d));

  // the full fiber norms to n times the base point
  const BaseDivisor fiber_norm = norm(fiber_divisor(a, Rational(7)));
  CHECK(fiber_norm.support.at(Rational(7)) == 2);
}

TEST_CASE("sigma respects the norm") {
  const SpectralAlgebra a = split_conic();
  REQUIRE(a.sigma_defined());
  Divisor d{a, {}};
  add_point(d, {Rational(2), Rational(2)}, 1);
  add_point(d, {Rational(3), Rational(-3)}, 2);
  const Divisor sd = sigma_divisor(d);
  CHECK(degree(sd) == degree(d));
  CHECK(sd.support.at({Rational(2), Rational(-2)}) == 1);
  CHECK(norm(sd).support == norm(d).support);
}

TEST_CASE("degree-level prym conditions") {
  const SpectralAlgebra a = split_conic();
  Divisor d{a, {}};
  add_point(d, {Rational(1), Rational(1)}, 1);
  add_point(d, {Rational(1), Rational(-1)}, -1);
  const PrymReport rep = prym_membership_degreewise(d);
  CHECK(rep.degree == 0);
  CHECK(rep.norm_degree == 0);
  CHECK(rep.prym_representative);
  CHECK(rep.order_two_necessary);
  CHECK_FALSE(rep.caveat.empty());

  Divisor off{a, {}};
  add_point(off, {Rational(1), Rational(1)}, 1);
  const PrymReport bad = prym_membership_degreewise(off);
  CHECK_FALSE(bad.prym_representative);
}

TEST_CASE("parity invariant for U(p,p)") {
  CHECK(parity_invariant(4, 2, std::nullopt).pass);
  CHECK(parity_invariant(3, 1, std::nullopt).pass);
  CHECK_FALSE(parity_invariant(3, 2, std::nullopt).pass);
  CHECK(parity_invariant(0, 0, std::nullopt).pass);
  CHECK(parity_invariant(-2, 4, std::nullopt).pass);
  CHECK_THROWS_AS(parity_invariant(2, -1, std::nullopt), domain_error);

  const ParityReport with_toledo = parity_invariant(5, 1, std::make_pair(3, 1));
  REQUIRE(with_toledo.toledo.has_value());
  CHECK(*with_toledo.toledo == 2);
}
