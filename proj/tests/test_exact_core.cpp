#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/hermite.hpp"
#include "hitchin/matrix.hpp"
#include "hitchin/prng.hpp"

using namespace hitchin;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(1, -2) < Rational(0));
  CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(5, 7).inv() == Rational(7, 5));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational::parse("-22/7").str() == "-22/7");
  CHECK(Rational::parse("10/5").str() == "2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational square roots are exact or refused") {
  Rational r;
  CHECK(Rational(9, 4).exact_sqrt(r));
  CHECK(r == Rational(3, 2));
  CHECK(Rational(0).exact_sqrt(r));
  CHECK(r == Rational(0));
  CHECK_FALSE(Rational(2).exact_sqrt(r));
  CHECK_FALSE(Rational(-1).exact_sqrt(r));
}

TEST_CASE("polynomial division and gcd") {
  const UniPoly x = UniPoly::variable();
  const UniPoly p = x.pow(3) - UniPoly::constant(Rational(1));
  const UniPoly d = x - UniPoly::constant(Rational(1));
  const auto dm = p.divmod(d);
  CHECK(dm.rem.degree() == -1);
  CHECK(dm.quot == x.pow(2) + x + UniPoly::constant(Rational(1)));
  CHECK(p.exact_divide(d) == dm.quot);

  const UniPoly a = (x - UniPoly::constant(Rational(2))).pow(2) * (x + UniPoly::constant(Rational(1)));
  const UniPoly b = (x - UniPoly::constant(Rational(2))) * x;
  CHECK(poly_gcd(a, b) == x - UniPoly::constant(Rational(2)));
  CHECK_FALSE(is_squarefree(a));
  CHECK(is_squarefree(b));
}

TEST_CASE("polynomial square root") {
  const UniPoly x = UniPoly::variable();
  const UniPoly s = x.pow(2) + UniPoly::constant(Rational(3));
  UniPoly r;
  CHECK((s * s).exact_sqrt(r));
  CHECK(r == s);
  CHECK_FALSE((s * s + UniPoly::constant(Rational(1))).exact_sqrt(r));
}

TEST_CASE("quadratic and cubic discriminants") {
  // eta^2 - w has discriminant 4w; eta^3 + w eta + 1 has -4w^3 - 27.
  const UniPoly w = UniPoly::variable();
  const BiSpectralPolynomial conic(2, {-w, UniPoly{}});
  CHECK(discriminant(conic) == w.scaled(Rational(4)));

  const BiSpectralPolynomial cubic(3, {UniPoly::constant(Rational(1)), w, UniPoly{}});
  const UniPoly expect = w.pow(3).scaled(Rational(-4)) - UniPoly::constant(Rational(27));
  CHECK(discriminant(cubic) == expect);
}

TEST_CASE("discriminant agrees with the eta-resultant against the derivative") {
  Prng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<UniPoly> low;
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> cs;
      for (int j = 0; j <= static_cast<int>(rng.below(3)); ++j) cs.push_back(rng.rational());
      low.push_back(UniPoly(cs));
    }
    const BiSpectralPolynomial p(n, low);
    const BiPoly f = p.to_bipoly();
    const UniPoly res = resultant_eta(f, f.derivative_eta());
    const int sign_flip = (n * (n - 1) / 2) % 2;
    CHECK(discriminant(p) == (sign_flip ? res.scaled(Rational(-1)) : res));
  }
}

TEST_CASE("sigma symmetry predicates") {
  const UniPoly w = UniPoly::variable();
  const BiSpectralPolynomial even(4, {w.pow(3), UniPoly{}, w, UniPoly{}});
  CHECK(even.even_in_eta());
  CHECK(even.has_sigma_symmetry());
  const BiSpectralPolynomial odd5(5, {UniPoly{}, w, UniPoly{}, w, UniPoly{}});
  CHECK_FALSE(odd5.even_in_eta());
  CHECK(odd5.has_sigma_symmetry());
  const BiSpectralPolynomial generic(2, {w, UniPoly::constant(Rational(1))});
  CHECK_FALSE(generic.has_sigma_symmetry());
}

TEST_CASE("characteristic data of a polynomial matrix") {
  const UniPoly w = UniPoly::variable();
  PolyMat phi(2, 2);
  phi.at(0, 1) = w;
  phi.at(1, 0) = UniPoly::constant(Rational(1));
  const BiSpectralPolynomial cp = char_poly(phi);
  CHECK(cp == BiSpectralPolynomial(2, {-w, UniPoly{}}));

  const BiMat em = eta_minus(phi);
  const auto cd = char_data(em);
  // adjugate of [[eta, -w], [-1, eta]] is [[eta, w], [1, eta]]
  CHECK(cd.adjugate.at(0, 0) == BiPoly::eta());
  CHECK(cd.adjugate.at(0, 1) == BiPoly::constant(w));
  CHECK(cd.adjugate.at(1, 0) == BiPoly::scalar(Rational(1)));
  CHECK(cd.adjugate.at(1, 1) == BiPoly::eta());
  CHECK(cd.det == cd.adjugate.at(0, 0) * BiPoly::eta() - cd.adjugate.at(0, 1));
}

TEST_CASE("companion matrices realize their characteristic polynomial") {
  const UniPoly w = UniPoly::variable();
  const BiSpectralPolynomial p(3, {UniPoly::constant(Rational(1)), w, UniPoly{}});
  CHECK(char_poly(companion(p)) == p);
}

TEST_CASE("pfaffian on small skew matrices") {
  RatMat two(2, 2);
  two.at(0, 1) = Rational(5);
  two.at(1, 0) = Rational(-5);
  CHECK(pfaffian(two) == Rational(5));

  // pf of the generic 4x4 skew matrix is af - be + cd
  RatMat four(4, 4);
  const Rational a(1), b(2), c(3), d(4), e(5), f(6);
  four.at(0, 1) = a; four.at(0, 2) = b; four.at(0, 3) = c;
  four.at(1, 2) = d; four.at(1, 3) = e; four.at(2, 3) = f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) four.at(i, j) = -four.at(j, i);
  CHECK(pfaffian(four) == a * f - b * e + c * d);

  const auto cd4 = char_data(four);
  CHECK(cd4.det == pfaffian(four) * pfaffian(four));

  RatMat odd_entry(2, 2);
  odd_entry.at(0, 1) = Rational(1);
  CHECK_THROWS(pfaffian(odd_entry));
}

TEST_CASE("hermite basis is idempotent and solves membership") {
  const UniPoly w = UniPoly::variable();
  Prng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<std::vector<UniPoly>> gens;
    for (int r = 0; r < n + 1; ++r) {
      std::vector<UniPoly> row;
      for (int c = 0; c < n; ++c) {
        std::vector<Rational> cs;
        for (int j = 0; j <= static_cast<int>(rng.below(2)); ++j) cs.push_back(rng.rational());
        row.push_back(UniPoly(cs));
      }
      gens.push_back(row);
    }
    const HermiteBasis h = hermite_basis_full(gens, n);
    std::vector<std::vector<UniPoly>> rows;
    for (int r = 0; r < h.rows.rows(); ++r) {
      std::vector<UniPoly> row;
      for (int c = 0; c < n; ++c) row.push_back(h.rows.at(r, c));
      rows.push_back(row);
    }
    const HermiteBasis again = hermite_basis_full(rows, n);
    CHECK(again.rows == h.rows);
    CHECK(again.pivot_cols == h.pivot_cols);
  }

  // x * w^2 + y * w^3 spans w^2 Q[w]; w is outside, w^2 inside.
  std::vector<std::vector<UniPoly>> gens{{w.pow(2)}, {w.pow(3)}};
  const HermiteBasis h = hermite_basis_full(gens, 1);
  CHECK(h.rows.rows() == 1);
  CHECK(h.rows.at(0, 0) == w.pow(2));
  const auto sol_in = hermite_solve(h, {w.pow(5)});
  CHECK(sol_in.in_module);
  const auto sol_out = hermite_solve(h, {w});
  CHECK_FALSE(sol_out.in_module);
}
