#include "hitchin/unipoly.hpp"

#include <sstream>
#include <utility>

namespace hitchin {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) {
  UniPoly p;
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

UniPoly UniPoly::monomial(int deg, const Rational& c) {
  UniPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(deg + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational UniPoly::leading() const {
  require(!is_zero(), "leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return UniPoly();
  UniPoly r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return k >= 0 ? *this : UniPoly();
  require(k > 0, "negative shift");
  UniPoly r;
  r.c_.assign(c_.size() + k, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& d) const {
  require(!d.is_zero(), "division by zero polynomial");
  UniPoly r(*this), q;
  const Rational lc = d.leading();
  const int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    Rational f = r.leading() / lc;
    int k = r.degree() - dd;
    q += UniPoly::monomial(k, f);
    r -= d.scaled(f).shifted(k);
  }
  return {q, r};
}

UniPoly UniPoly::exact_divide(const UniPoly& d) const {
  auto dm = divmod(d);
  ensure(dm.rem.is_zero(), "inexact polynomial division");
  return dm.quot;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  require(!is_zero(), "monic form of zero polynomial");
  return scaled(leading().inv());
}

UniPoly UniPoly::pow(int e) const {
  require(e >= 0, "negative polynomial power");
  UniPoly acc = UniPoly::constant(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

bool UniPoly::exact_sqrt(UniPoly& out) const {
  if (is_zero()) {
    out = UniPoly();
    return true;
  }
  if (degree() % 2 != 0) return false;
  Rational lr;
  if (!leading().exact_sqrt(lr)) return false;
  const int h = degree() / 2;
  std::vector<Rational> s(h + 1, Rational(0));
  s[h] = lr;
  // Match coefficients from the top down: coeff(2h - k) determines s[h - k].
  for (int k = 1; k <= h; ++k) {
    Rational acc(0);
    for (int i = 1; i < k; ++i) acc += s[h - i] * s[h - k + i];
    // 2 s[h] s[h-k] + acc = coeff(2h - k)
    s[h - k] = (coeff(2 * h - k) - acc) / (Rational(2) * s[h]);
  }
  UniPoly cand{std::vector<Rational>(s)};
  if (cand * cand != *this) {
    return false;
  }
  out = cand;
  return true;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    if (k == 0 || !a.is_one()) os << a.str();
    if (k > 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

// Scale to coprime integer coefficients. Keeps the Euclidean remainder
// sequence from exploding the way monic normalization does.
UniPoly primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = 0, l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational scale(mpq_class(l, g));
  if (p.leading().num() < 0) scale = -scale;
  return p.scaled(scale);
}

// lc(b)^k a - (...) b with only ring operations; exact when a, b are integral.
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int da = a.degree();
    a = a.scaled(lb) - b.scaled(a.leading()).shifted(da - db);
  }
  return a;
}

}  // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  require(!a.is_zero() || !b.is_zero(), "gcd of zero polynomials");
  a = primitive(a);
  b = primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = primitive(pseudo_rem(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UniPoly& q) {
  require(!q.is_zero(), "zero input");
  if (q.degree() == 0) return true;
  return poly_gcd(q, q.derivative()).degree() == 0;
}

}  // namespace hitchin
