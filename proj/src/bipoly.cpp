#include "hitchin/bipoly.hpp"

#include <sstream>

#include "hitchin/matrix.hpp"

namespace hitchin {

BiPoly::BiPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { normalize(); }

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const UniPoly& c) {
  BiPoly p;
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

BiPoly BiPoly::eta(int deg, const Rational& c) {
  BiPoly p;
  if (c.is_zero()) return p;
  require(deg >= 0, "negative eta degree");
  p.c_.assign(static_cast<size_t>(deg) + 1, UniPoly());
  p.c_.back() = UniPoly::constant(c);
  return p;
}

UniPoly BiPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return UniPoly();
  return c_[static_cast<size_t>(k)];
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<UniPoly> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::scaled(const Rational& s) const {
  BiPoly r(*this);
  for (auto& x : r.c_) x = x.scaled(s);
  r.normalize();
  return r;
}

BiPoly BiPoly::scaled_poly(const UniPoly& s) const {
  BiPoly r(*this);
  for (auto& x : r.c_) x = x * s;
  r.normalize();
  return r;
}

BiPoly BiPoly::subst_eta_neg() const {
  BiPoly r(*this);
  for (size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

UniPoly BiPoly::eval_w(const Rational& w0) const {
  std::vector<Rational> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].eval(w0);
  return UniPoly(std::move(out));
}

BiPoly BiPoly::derivative_eta() const {
  if (c_.size() <= 1) return BiPoly();
  std::vector<UniPoly> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k].scaled(Rational(static_cast<long>(k)));
  return BiPoly(std::move(out));
}

Rational BiPoly::eval(const Rational& eta0, const Rational& w0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * eta0 + it->eval(w0);
  return acc;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = eta_degree(); k >= 0; --k) {
    const UniPoly c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool plain = c.is_constant() && c.coeff(0).is_one();
    if (k == 0) {
      os << c.str();
    } else {
      if (!plain) {
        if (c.is_constant()) os << c.str() << "*";
        else os << "(" << c.str() << ")*";
      }
      os << "eta";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

BiSpectralPolynomial::BiSpectralPolynomial(int n, std::vector<UniPoly> low)
    : n_(n), low_(std::move(low)) {
  require(n_ >= 1, "spectral polynomial needs degree at least 1");
  require(static_cast<int>(low_.size()) == n_, "spectral polynomial coefficient count mismatch");
}

BiSpectralPolynomial BiSpectralPolynomial::from_descending(int n, std::vector<UniPoly> desc) {
  require(static_cast<int>(desc.size()) == n, "spectral polynomial coefficient count mismatch");
  std::vector<UniPoly> low(desc.rbegin(), desc.rend());
  return BiSpectralPolynomial(n, std::move(low));
}

UniPoly BiSpectralPolynomial::coeff(int k) const {
  ensure(k >= 0 && k <= n_, "spectral coefficient index out of range");
  if (k == n_) return UniPoly::constant(Rational(1));
  return low_[static_cast<size_t>(k)];
}

BiPoly BiSpectralPolynomial::to_bipoly() const {
  std::vector<UniPoly> c(low_);
  c.push_back(UniPoly::constant(Rational(1)));
  return BiPoly(std::move(c));
}

Rational BiSpectralPolynomial::eval(const Rational& eta0, const Rational& w0) const {
  return to_bipoly().eval(eta0, w0);
}

bool BiSpectralPolynomial::even_in_eta() const {
  if (n_ % 2 != 0) return false;
  for (int k = 1; k < n_; k += 2)
    if (!low_[static_cast<size_t>(k)].is_zero()) return false;
  return true;
}

bool BiSpectralPolynomial::has_sigma_symmetry() const {
  const int start = (n_ % 2 == 0) ? 1 : 0;
  for (int k = start; k < n_; k += 2)
    if (!low_[static_cast<size_t>(k)].is_zero()) return false;
  return true;
}

UniPoly resultant_eta(const BiPoly& f, const BiPoly& g) {
  require(!f.is_zero() && !g.is_zero(), "resultant of zero polynomial");
  const int m = f.eta_degree();
  const int n = g.eta_degree();
  if (m == 0 && n == 0) return UniPoly::constant(Rational(1));
  if (m == 0) return f.coeff(0).pow(n);
  if (n == 0) return g.coeff(0).pow(m);
  PolyMat s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s.at(i, i + j) = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = g.coeff(n - j);
  return determinant(s);
}

UniPoly discriminant(const BiSpectralPolynomial& p) {
  const int n = p.n();
  if (n == 1) return UniPoly::constant(Rational(1));
  // Power sums of the eta-roots by Newton's identities, then the Hankel
  // determinant det[s_{i+j}] = prod_{i<j} (r_i - r_j)^2. Agrees with the
  // signed Sylvester resultant but stays in n x n matrices.
  std::vector<UniPoly> c(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) c[static_cast<size_t>(k)] = p.coeff(n - k);
  std::vector<UniPoly> s(static_cast<size_t>(2 * n - 1));
  s[0] = UniPoly::constant(Rational(n));
  for (int k = 1; k <= 2 * n - 2; ++k) {
    UniPoly acc;
    if (k <= n) acc = c[static_cast<size_t>(k)].scaled(Rational(k));
    for (int i = 1; i < k && i <= n; ++i)
      acc = acc + c[static_cast<size_t>(i)] * s[static_cast<size_t>(k - i)];
    s[static_cast<size_t>(k)] = acc.scaled(Rational(-1));
  }
  PolyMat h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = s[static_cast<size_t>(i + j)];
  return determinant(h);
}

namespace {

// Content over Q[w]: monic gcd of the eta-coefficients.
UniPoly w_content(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  const UniPoly g = w_content(p);
  std::vector<UniPoly> out;
  out.reserve(static_cast<size_t>(p.eta_degree()) + 1);
  for (const auto& c : p.coeffs()) out.push_back(c.is_zero() ? UniPoly() : c.exact_divide(g));
  return BiPoly(std::move(out));
}

// lc(b)*a - lc(a)*eta^(da-db)*b repeatedly, until deg_eta a < deg_eta b.
BiPoly pseudo_rem(BiPoly a, const BiPoly& b) {
  const int db = b.eta_degree();
  const UniPoly lb = b.coeff(db);
  while (!a.is_zero() && a.eta_degree() >= db) {
    const int da = a.eta_degree();
    BiPoly t = BiPoly::eta(da - db).scaled_poly(a.coeff(da));
    a = a.scaled_poly(lb) - t * b;
  }
  return a;
}

}  // namespace

BiPoly gcd_eta(BiPoly a, BiPoly b) {
  require(!a.is_zero() || !b.is_zero(), "gcd of zero polynomials");
  if (!a.is_zero()) a = primitive_part(a);
  if (!b.is_zero()) b = primitive_part(b);
  if (a.is_zero()) std::swap(a, b);
  while (!b.is_zero()) {
    if (a.eta_degree() < b.eta_degree()) std::swap(a, b);
    BiPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? BiPoly() : primitive_part(r);
  }
  if (a.eta_degree() == 0) return BiPoly::scalar(Rational(1));
  const UniPoly lc = a.coeff(a.eta_degree());
  return a.scaled(lc.leading().inv());
}

}  // namespace hitchin
