#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/curves.hpp"

using namespace hitchin;

TEST_CASE("spectral genus closed forms") {
  CHECK(spectral_genus({{GroupKind::GL, 2}, 2, std::nullopt}) == 5);
  CHECK(spectral_genus({{GroupKind::SL, 2}, 2, std::nullopt}) == 5);
  CHECK(spectral_genus({{GroupKind::GL, 3}, 2, std::nullopt}) == 10);
  CHECK(spectral_genus({{GroupKind::Sp, 2}, 2, std::nullopt}) == 17);
  CHECK(spectral_genus({{GroupKind::SO_odd, 2}, 2, std::nullopt}) == 17);
  CHECK(spectral_genus({{GroupKind::GL, 2}, 3, std::nullopt}) == 9);
  CHECK_THROWS_AS(spectral_genus({{GroupKind::GL, 2}, 1, std::nullopt}), domain_error);
}

TEST_CASE("ramification counts are top-degree zeros") {
  CHECK(ramification_count({{GroupKind::GL, 2}, 2, std::nullopt}) == 4);
  CHECK(ramification_count({{GroupKind::Sp, 2}, 2, std::nullopt}) == 8);
  CHECK(ramification_count({{GroupKind::SO_even, 2}, 2, std::nullopt}) == 4);
}

TEST_CASE("so(2n) desingularization for n = 2, genus 2") {
  const GenusReport rep = so_even_desingularization(2, 2);
  CHECK(rep.spectral_genus == 17);
  CHECK(rep.ramification_count == 4);
  REQUIRE(rep.desing_genus.has_value());
  CHECK(*rep.desing_genus == 13);
  REQUIRE(rep.quotient_genus.has_value());
  CHECK(*rep.quotient_genus == 7);
  REQUIRE(rep.prym_dim.has_value());
  CHECK(*rep.prym_dim == 6);
  CHECK(rep.notes.find("n(2n-1)(g-1)") != std::string::npos);
}

TEST_CASE("quotient genus under an involution with fixed points") {
  CHECK(quotient_genus_ramified(17, 8) == 7);
  CHECK(quotient_genus_ramified(3, 0) == 2);
  CHECK(quotient_genus_ramified(5, 4) == 2);
  CHECK_THROWS_AS(quotient_genus_ramified(4, 3), domain_error);  // odd branch count
  CHECK_THROWS_AS(quotient_genus_ramified(2, 8), domain_error);  // negative quotient genus
}

TEST_CASE("affine smoothness detects repeated fibers") {
  const UniPoly w = UniPoly::variable();
  const BiSpectralPolynomial smooth_conic(2, {-w, UniPoly{}});
  const SmoothnessReport ok = affine_smoothness(smooth_conic);
  CHECK(ok.smooth);
  CHECK_FALSE(ok.disc_zero);
  CHECK(ok.scope == "affine chart only");

  const BiSpectralPolynomial split(2, {-(w * w), UniPoly{}});  // eta^2 = w^2
  const SmoothnessReport bad = affine_smoothness(split);
  CHECK_FALSE(bad.smooth);
  CHECK_FALSE(bad.disc_zero);
  REQUIRE(bad.singular_w.size() == 1);
  CHECK(bad.singular_w[0] == Rational(0));

  const BiSpectralPolynomial doubled(2, {w * w, w.scaled(Rational(-2))});  // (eta - w)^2
  const SmoothnessReport degenerate = affine_smoothness(doubled);
  CHECK_FALSE(degenerate.smooth);
  CHECK(degenerate.disc_zero);
}

TEST_CASE("model equations build the defining polynomial from invariant coefficients") {
  const UniPoly w = UniPoly::variable();
  const CurveModel m{{GroupKind::Sp, 2}, 2, std::vector<UniPoly>{w, w + UniPoly::constant(Rational(1))}};
  const BiSpectralPolynomial p = model_equation(m);
  // eta^4 + w eta^2 + (w + 1)
  CHECK(p.n() == 4);
  CHECK(p.coeff(2) == w);
  CHECK(p.coeff(0) == w + UniPoly::constant(Rational(1)));
  CHECK(p.has_sigma_symmetry());

  const BiSpectralPolynomial q = quotient_equation(p);
  CHECK(q.n() == 2);
  CHECK(q.coeff(1) == w);

  // the SO_even top coefficient enters squared
  const CurveModel so{{GroupKind::SO_even, 2}, 2, std::vector<UniPoly>{w, UniPoly::constant(Rational(2))}};
  const BiSpectralPolynomial sp = model_equation(so);
  CHECK(sp.coeff(0) == UniPoly::constant(Rational(4)));
}
