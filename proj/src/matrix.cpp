#include "hitchin/matrix.hpp"

namespace hitchin {

BiSpectralPolynomial char_poly(const PolyMat& m) {
  CharData<UniPoly> cd = char_data(m);
  const int n = m.rows();
  std::vector<UniPoly> low(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) low[static_cast<size_t>(n - k)] = cd.coeffs[static_cast<size_t>(k - 1)];
  return BiSpectralPolynomial(n, low);
}

UniPoly char_poly(const RatMat& m) {
  CharData<Rational> cd = char_data(m);
  const int n = m.rows();
  std::vector<Rational> c(static_cast<size_t>(n + 1));
  c[static_cast<size_t>(n)] = Rational(1);
  for (int k = 1; k <= n; ++k) c[static_cast<size_t>(n - k)] = cd.coeffs[static_cast<size_t>(k - 1)];
  return UniPoly(std::move(c));
}

PolyMat companion(const BiSpectralPolynomial& p) {
  const int n = p.n();
  PolyMat m(n, n);
  for (int j = 0; j + 1 < n; ++j) m.at(j + 1, j) = UniPoly::constant(Rational(1));
  for (int k = 0; k < n; ++k) m.at(k, n - 1) = -p.coeff(k);
  return m;
}

BiMat eta_minus(const PolyMat& m) {
  require(m.is_square(), "eta * I - m needs a square matrix");
  const int n = m.rows();
  BiMat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.at(i, j) = -BiPoly::constant(m.at(i, j));
      if (i == j) r.at(i, j) += BiPoly::eta();
    }
  return r;
}

}  // namespace hitchin
