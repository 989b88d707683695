#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitchin/lie.hpp"
#include "hitchin/prng.hpp"

using namespace hitchin;

namespace {

RatMat random_element(const AlgebraBasis& basis, Prng& rng) {
  RatMat x(basis.elements[0].rows(), basis.elements[0].cols());
  for (const auto& e : basis.elements) x = x + e.scaled(rng.rational(5, 2));
  return x;
}

}  // namespace

TEST_CASE("algebra dimensions and ranks") {
  CHECK(algebra_dimension({Family::gl, 3}) == 9);
  CHECK(algebra_dimension({Family::sl, 3}) == 8);
  CHECK(algebra_dimension({Family::so_odd, 2}) == 10);   // so(5)
  CHECK(algebra_dimension({Family::so_even, 3}) == 15);  // so(6)
  CHECK(algebra_dimension({Family::sp, 2}) == 10);       // sp(4)
  CHECK(algebra_rank({Family::gl, 3}) == 3);
  CHECK(algebra_rank({Family::sp, 2}) == 2);
  CHECK(matrix_size({Family::so_odd, 2}) == 5);
}

TEST_CASE("standard bases have the right size and close under bracket") {
  for (const AlgebraDescriptor d : {AlgebraDescriptor{Family::sl, 2},
                                    AlgebraDescriptor{Family::sp, 2},
                                    AlgebraDescriptor{Family::so_odd, 2},
                                    AlgebraDescriptor{Family::so_even, 2}}) {
    const AlgebraBasis basis = standard_basis(d);
    REQUIRE(basis.dimension() == algebra_dimension(d));
    const SpanSolver span(basis.elements);
    for (size_t i = 0; i < basis.elements.size(); ++i)
      for (size_t j = i + 1; j < basis.elements.size(); ++j)
        CHECK(span.coords(commutator(basis.elements[i], basis.elements[j])).has_value());
  }
}

TEST_CASE("jacobi identity on random triples") {
  const AlgebraBasis basis = standard_basis({Family::sp, 2});
  Prng rng(5);
  for (int t = 0; t < 8; ++t) {
    const RatMat x = random_element(basis, rng);
    const RatMat y = random_element(basis, rng);
    const RatMat z = random_element(basis, rng);
    const RatMat lhs = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                       commutator(z, commutator(x, y));
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("killing form on sl(2)") {
  // On sl(2) the Killing form is 4 tr(XY); H = diag(1,-1) gives B(H,H) = 8.
  const AlgebraBasis basis = standard_basis({Family::sl, 2});
  const BilinearFormMatrix form = killing_gram(basis);
  int h_index = -1;
  for (size_t i = 0; i < basis.elements.size(); ++i) {
    const RatMat& e = basis.elements[i];
    if (e.at(0, 0) == Rational(1) && e.at(1, 1) == Rational(-1) && e.at(0, 1).is_zero() &&
        e.at(1, 0).is_zero())
      h_index = static_cast<int>(i);
  }
  REQUIRE(h_index >= 0);
  CHECK(form.gram.at(h_index, h_index) == Rational(8));
  CHECK(classify_gram(form.gram) == Definiteness::indefinite);
}

TEST_CASE("killing form is ad-invariant") {
  const AlgebraBasis basis = standard_basis({Family::so_odd, 2});
  const SpanSolver span(basis.elements);
  const BilinearFormMatrix form = killing_gram(basis);
  auto killing = [&](const RatMat& a, const RatMat& b) {
    const auto ca = span.coords(a);
    const auto cb = span.coords(b);
    REQUIRE(ca.has_value());
    REQUIRE(cb.has_value());
    Rational out;
    for (int i = 0; i < form.gram.rows(); ++i)
      for (int j = 0; j < form.gram.cols(); ++j)
        out += (*ca)[i] * form.gram.at(i, j) * (*cb)[j];
    return out;
  };
  Prng rng(17);
  const RatMat x = random_element(basis, rng);
  const RatMat y = random_element(basis, rng);
  const RatMat z = random_element(basis, rng);
  CHECK(killing(commutator(x, y), z) == killing(x, commutator(y, z)));
}

TEST_CASE("killing gram degenerates exactly for the reductive center") {
  CHECK(classify_gram(killing_gram(standard_basis({Family::sl, 2})).gram) ==
        Definiteness::indefinite);
  CHECK(classify_gram(killing_gram(standard_basis({Family::gl, 2})).gram) ==
        Definiteness::degenerate);
}

TEST_CASE("ad matrices represent the bracket") {
  const AlgebraBasis basis = standard_basis({Family::sl, 2});
  const SpanSolver span(basis.elements);
  Prng rng(29);
  const RatMat x = random_element(basis, rng);
  const RatMat y = random_element(basis, rng);
  const RatMat ad_x = ad_matrix(x, basis, span);
  const auto cy = span.coords(y);
  REQUIRE(cy.has_value());
  std::vector<Rational> image(cy->size());
  for (int i = 0; i < ad_x.rows(); ++i)
    for (int j = 0; j < ad_x.cols(); ++j) image[i] += ad_x.at(i, j) * (*cy)[j];
  const auto direct = span.coords(commutator(x, y));
  REQUIRE(direct.has_value());
  CHECK(image == *direct);
}
