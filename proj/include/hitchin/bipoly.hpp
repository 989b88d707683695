#pragma once
#include <string>
#include <vector>

#include "hitchin/unipoly.hpp"

namespace hitchin {

// Element of Q[w][eta]: dense in eta, coefficients in Q[w], ascending.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> coeffs);

  static BiPoly constant(const UniPoly& c);
  static BiPoly scalar(const Rational& c) { return constant(UniPoly::constant(c)); }
  static BiPoly eta(int deg = 1, const Rational& c = Rational(1));

  int eta_degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  UniPoly coeff(int k) const;
  const std::vector<UniPoly>& coeffs() const { return c_; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly scaled(const Rational& s) const;
  BiPoly scaled_poly(const UniPoly& s) const;
  BiPoly subst_eta_neg() const;            // eta -> -eta
  UniPoly eval_w(const Rational& w0) const;  // polynomial in eta with rational coefficients
  BiPoly derivative_eta() const;

  Rational eval(const Rational& eta0, const Rational& w0) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<UniPoly> c_;
};

// Characteristic-polynomial shape: monic of degree n >= 1 in eta,
// eta^n + c_{n-1}(w) eta^{n-1} + ... + c_0(w).
class BiSpectralPolynomial {
 public:
  // low[k] is the coefficient of eta^k, k = 0 .. n-1 (ascending).
  BiSpectralPolynomial(int n, std::vector<UniPoly> low);
  // Coefficients ordered c_{n-1}, ..., c_0 as in the interchange schema.
  static BiSpectralPolynomial from_descending(int n, std::vector<UniPoly> desc);

  int n() const { return n_; }
  // coefficient of eta^k; returns 1 at k = n
  UniPoly coeff(int k) const;
  const std::vector<UniPoly>& low() const { return low_; }

  BiPoly to_bipoly() const;
  BiPoly derivative_eta() const { return to_bipoly().derivative_eta(); }
  Rational eval(const Rational& eta0, const Rational& w0) const;
  UniPoly eval_w(const Rational& w0) const { return to_bipoly().eval_w(w0); }

  bool even_in_eta() const;  // c_k = 0 for k of parity opposite to n? see has_sigma
  // p(-eta) = p(eta) (n even, odd coefficients vanish) or p(-eta) = -p(eta)
  // (n odd, even coefficients vanish); either way eta -> -eta preserves the curve.
  bool has_sigma_symmetry() const;

  friend bool operator==(const BiSpectralPolynomial& a, const BiSpectralPolynomial& b) {
    return a.n_ == b.n_ && a.low_ == b.low_;
  }
  friend bool operator!=(const BiSpectralPolynomial& a, const BiSpectralPolynomial& b) {
    return !(a == b);
  }

  std::string str() const { return to_bipoly().str(); }

 private:
  int n_;
  std::vector<UniPoly> low_;
};

// Resultant of f and g with respect to eta (Sylvester determinant over Q[w]).
UniPoly resultant_eta(const BiPoly& f, const BiPoly& g);

// (-1)^{n(n-1)/2} Res_eta(p, dp/deta) for monic p; degree-1 input gives 1.
UniPoly discriminant(const BiSpectralPolynomial& p);

// Primitive gcd in eta over the fraction field Q(w), monic in eta.
BiPoly gcd_eta(BiPoly a, BiPoly b);

}  // namespace hitchin
