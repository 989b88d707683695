#include "hitchin/factor.hpp"

#include <algorithm>
#include <set>

namespace hitchin {

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      mpz_class e = n / d;
      if (e != d) out.push_back(e);
    }
  return out;
}

// p with denominators cleared and content removed, as exact integers.
std::vector<mpz_class> integer_model(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

// q(x + s)
UniPoly compose_shift(const UniPoly& q, const Rational& s) {
  UniPoly lin{s, Rational(1)};
  UniPoly acc;
  for (int k = q.degree(); k >= 0; --k) acc = acc * lin + UniPoly::constant(q.coeff(k));
  return acc;
}

// Split a monic squarefree quartic with no rational roots into two monic
// quadratics, when possible over Q. Exhaustive: any such factorization makes
// the square of the depressed linear coefficient a rational root of the
// resolvent cubic.
bool quartic_split(const UniPoly& f, UniPoly& f1, UniPoly& f2) {
  const Rational a = f.coeff(3);
  const Rational shift = -a / Rational(4);
  UniPoly g = compose_shift(f, shift);  // y^4 + q y^2 + r y + s
  const Rational q = g.coeff(2), r = g.coeff(1), s = g.coeff(0);

  auto undepress_pair = [&](const UniPoly& q1, const UniPoly& q2, UniPoly& o1, UniPoly& o2) {
    o1 = compose_shift(q1, -shift);
    o2 = compose_shift(q2, -shift);
  };

  if (r.is_zero()) {
    // Biquadratic: (y^2 + alpha)(y^2 + beta) or (y^2 + ty + u)(y^2 - ty + u).
    Rational droot;
    if ((q * q - Rational(4) * s).exact_sqrt(droot)) {
      Rational alpha = (q + droot) / Rational(2);
      Rational beta = (q - droot) / Rational(2);
      undepress_pair(UniPoly{alpha, Rational(0), Rational(1)},
                     UniPoly{beta, Rational(0), Rational(1)}, f1, f2);
      return true;
    }
    Rational u;
    if (s.exact_sqrt(u)) {
      for (const Rational& uu : {u, -u}) {
        Rational t2 = Rational(2) * uu - q;
        Rational t;
        if (t2.sign() >= 0 && t2.exact_sqrt(t)) {
          undepress_pair(UniPoly{uu, t, Rational(1)}, UniPoly{uu, -t, Rational(1)}, f1, f2);
          return true;
        }
      }
    }
    return false;
  }

  UniPoly resolvent{-(r * r), q * q - Rational(4) * s, Rational(2) * q, Rational(1)};
  for (const auto& [z, mult] : rational_roots(resolvent)) {
    (void)mult;
    Rational t;
    if (z.sign() <= 0 || !z.exact_sqrt(t)) continue;
    const Rational v = (q + z + r / t) / Rational(2);
    const Rational u = (q + z - r / t) / Rational(2);
    if (u * v != s) continue;
    undepress_pair(UniPoly{u, t, Rational(1)}, UniPoly{v, -t, Rational(1)}, f1, f2);
    return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
  require(!p.is_zero(), "rational roots of zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  if (p.degree() == 0) return out;

  int k = 0;
  while (p.coeff(k).is_zero()) ++k;
  UniPoly q = (k > 0) ? p.divmod(UniPoly::monomial(k)).quot : p;
  if (k > 0) out.emplace_back(Rational(0), k);

  if (q.degree() > 0) {
    const std::vector<mpz_class> c = integer_model(q);
    std::set<Rational> candidates;
    for (const auto& pn : positive_divisors(c.front()))
      for (const auto& qd : positive_divisors(c.back())) {
        mpq_class v(pn, qd);
        v.canonicalize();
        candidates.insert(Rational(mpq_class(v)));
        candidates.insert(Rational(mpq_class(-v)));
      }
    for (const auto& r : candidates) {
      if (!q.eval(r).is_zero()) continue;
      const UniPoly lin{-r, Rational(1)};
      int mult = 0;
      UniPoly rem = q;
      while (true) {
        auto dm = rem.divmod(lin);
        if (!dm.rem.is_zero()) break;
        ++mult;
        rem = dm.quot;
        if (rem.degree() < 1) break;
      }
      out.emplace_back(r, mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  require(!p.is_zero(), "zero input");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = p.monic();
  if (f.degree() == 0) return out;
  UniPoly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UniPoly b = f.exact_divide(g);
  UniPoly c = f.derivative().exact_divide(g);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b.exact_divide(a);
    c = d.exact_divide(a);
    d = c - b.derivative();
  }
  return out;
}

Factorization factor_rational(const UniPoly& p) {
  require(!p.is_zero(), "zero input");
  Factorization out;
  out.unit = p.leading();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    UniPoly rest = part;
    for (const auto& [root, rmult] : rational_roots(part)) {
      ensure(rmult == 1, "squarefree part with repeated root");
      const UniPoly lin{-root, Rational(1)};
      out.terms.push_back({lin, mult, true});
      rest = rest.exact_divide(lin);
    }
    if (rest.degree() <= 0) continue;
    if (rest.degree() <= 3) {
      out.terms.push_back({rest, mult, true});
    } else if (rest.degree() == 4) {
      UniPoly f1, f2;
      if (quartic_split(rest, f1, f2)) {
        out.terms.push_back({f1, mult, true});
        out.terms.push_back({f2, mult, true});
      } else {
        out.terms.push_back({rest, mult, true});
      }
    } else {
      out.terms.push_back({rest, mult, false});
    }
  }
  return out;
}

}  // namespace hitchin
