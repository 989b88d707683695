#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "hitchin/rational.hpp"

namespace hitchin {

// Dense univariate polynomial over the rationals, coefficients ascending.
// Normal form strips trailing zeros; the zero polynomial has no coefficients
// and degree -1. The indeterminate is nameless: the same type serves for
// polynomials in the base coordinate w and for fiber polynomials in eta.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int deg, const Rational& c = Rational(1));
  static UniPoly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly scaled(const Rational& s) const;
  UniPoly shifted(int k) const;  // multiply by x^k

  // Field-coefficient division: *this = q * d + r with deg r < deg d.
  struct DivMod;
  DivMod divmod(const UniPoly& d) const;
  // Division that must be exact; throws internal_error when a remainder survives.
  UniPoly exact_divide(const UniPoly& d) const;

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly monic() const;
  UniPoly pow(int e) const;

  // Exact polynomial square root when one exists.
  bool exact_sqrt(UniPoly& out) const;

  std::string str(const std::string& var = "w") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct UniPoly::DivMod {
  UniPoly quot, rem;
};

// Monic gcd; gcd(0, 0) is an error.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// True when gcd(q, q') is constant. Zero polynomial is a domain error.
bool is_squarefree(const UniPoly& q);

}  // namespace hitchin
