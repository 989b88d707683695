#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/correspondence.hpp"
#include "hitchin/prng.hpp"

using namespace hitchin;

namespace {

const UniPoly w = UniPoly::variable();

SpectralAlgebra conic() { return SpectralAlgebra(BiSpectralPolynomial(2, {-w, UniPoly{}})); }

}  // namespace

TEST_CASE("spectral algebras track smoothness") {
  const SpectralAlgebra a = conic();
  CHECK(a.smooth);
  CHECK(a.disc == w.scaled(Rational(4)));

  const SpectralAlgebra split(BiSpectralPolynomial(2, {-(w * w), UniPoly{}}));
  CHECK_FALSE(split.smooth);
}

TEST_CASE("algebra arithmetic reduces modulo the defining polynomial") {
  const SpectralAlgebra a = conic();
  // eta * eta = w inside Q[w][eta]/(eta^2 - w)
  const AlgebraElement sq = elem_mul(a, elem_eta(a), elem_eta(a));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == w);
  CHECK(sq[1].is_zero());
}

TEST_CASE("free module pushes forward to the companion form") {
  const SpectralAlgebra a = conic();
  const FractionalIdeal free_module{a, {elem_one(a)}, Rational(0)};
  const PushforwardResult r = pushforward_line(free_module);
  CHECK(r.warnings.empty());
  CHECK(r.higgs.phi.at(0, 0).is_zero());
  CHECK(r.higgs.phi.at(0, 1) == w);
  CHECK(r.higgs.phi.at(1, 0) == UniPoly::constant(Rational(1)));
  CHECK(r.higgs.phi.at(1, 1).is_zero());
  CHECK(r.higgs.char_poly == a.p);

  // the eigenline of the companion matrix generates the full algebra back
  const FractionalIdeal back = eigenline(a, r.higgs);
  const PushforwardResult again = pushforward_line(back);
  CHECK(again.higgs.phi == r.higgs.phi);
}

TEST_CASE("principal ideal twists the matrix form") {
  const SpectralAlgebra a = conic();
  const FractionalIdeal ideal_eta{a, {elem_eta(a)}, Rational(0)};
  const PushforwardResult r = pushforward_line(ideal_eta);
  CHECK(r.higgs.phi.at(0, 1) == UniPoly::constant(Rational(1)));
  CHECK(r.higgs.phi.at(1, 0) == w);
  CHECK(r.higgs.char_poly == a.p);
}

TEST_CASE("pushforward then eigenline is the identity on the matrix side") {
  Prng rng(101);
  for (int n = 2; n <= 4; ++n) {
    int produced = 0;
    int guard = 0;
    while (produced < 5 && guard < 500) {
      ++guard;
      PolyMat phi(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<Rational> cs;
          const int d = static_cast<int>(rng.below(3));
          for (int k = 0; k <= d; ++k) cs.push_back(rng.rational());
          phi.at(i, j) = UniPoly(cs);
        }
      const HiggsMatrix h = higgs_from_phi(phi);
      const SpectralAlgebra a(h.char_poly);
      if (!a.smooth) continue;
      ++produced;
      const PushforwardResult r = pushforward_line(eigenline(a, h));
      CHECK(r.higgs.char_poly == h.char_poly);
      const PushforwardResult r2 = pushforward_line(eigenline(a, r.higgs));
      CHECK(r2.higgs.phi == r.higgs.phi);
      CHECK(r2.basis.rows == r.basis.rows);
    }
    CHECK(produced == 5);
  }
}

TEST_CASE("non-reduced spectra are refused") {
  const BiSpectralPolynomial doubled(2, {w * w, w.scaled(Rational(-2))});  // (eta - w)^2
  const SpectralAlgebra a(doubled);
  CHECK_FALSE(a.smooth);
  CHECK(a.disc.is_zero());
  PolyMat phi(2, 2);
  phi.at(0, 0) = w;
  phi.at(1, 1) = w;
  const HiggsMatrix h = higgs_from_phi(phi);
  CHECK_THROWS_AS(eigenline(h), domain_error);
}

TEST_CASE("sigma action on ideals distinguishes invariant from generic") {
  // eta^2 - w^2 is sigma-symmetric but split; use the smooth sigma-symmetric
  // curve eta^2 - (w^2 + 1) instead.
  const UniPoly c = w * w + UniPoly::constant(Rational(1));
  const SpectralAlgebra a(BiSpectralPolynomial(2, {-c, UniPoly{}}));
  REQUIRE(a.smooth);
  REQUIRE(a.sigma_defined());

  const FractionalIdeal free_module{a, {elem_one(a)}, Rational(0)};
  const SigmaTestReport inv = ideal_sigma_test(free_module);
  CHECK(inv.cls == SigmaClass::invariant);

  // 1 + eta generates an ideal not fixed by eta -> -eta
  AlgebraElement g = elem_one(a);
  g[1] = UniPoly::constant(Rational(1));
  const FractionalIdeal generic{a, {g}, Rational(0)};
  const SigmaTestReport gen = ideal_sigma_test(generic);
  CHECK(gen.cls != SigmaClass::invariant);
}

TEST_CASE("fixed point check finds a symmetric intertwiner for the split form") {
  PolyMat phi(2, 2);
  phi.at(0, 1) = w;
  phi.at(1, 0) = UniPoly::constant(Rational(1));
  const HiggsMatrix h = higgs_from_phi(phi);
  const FixedPointReport rep =
      fixed_point_check(parse_real_form("SL(n,R)", {2}), h, std::nullopt);
  CHECK(rep.status == "pass");
  CHECK(rep.witness.has_value());
  CHECK(rep.failures.empty());
}
