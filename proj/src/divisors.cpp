#include "hitchin/divisors.hpp"

#include "hitchin/factor.hpp"

namespace hitchin {

void add_point(Divisor& d, const SpectralPoint& pt, long mult) {
  require(d.algebra.p.eval(pt.eta0, pt.w0).is_zero(), "point not on the spectral curve");
  if (mult == 0) return;
  auto it = d.support.find(pt);
  if (it == d.support.end()) {
    d.support.emplace(pt, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) d.support.erase(it);
}

long degree(const Divisor& d) {
  long sum = 0;
  for (const auto& [pt, m] : d.support) sum += m;
  return sum;
}

long degree(const BaseDivisor& d) {
  long sum = 0;
  for (const auto& [w, m] : d.support) sum += m;
  return sum;
}

FiberReport fiber_points(const SpectralAlgebra& algebra, const Rational& w0) {
  FiberReport rep;
  const UniPoly fiber = algebra.p.eval_w(w0);
  const Factorization f = factor_rational(fiber);
  for (const auto& t : f.terms) {
    if (t.factor.degree() == 1) {
      rep.points.push_back({SpectralPoint{w0, -t.factor.coeff(0)}, t.mult});
    } else {
      rep.irreducible_factors.push_back({t.factor, t.mult});
    }
    rep.total_degree += t.factor.degree() * t.mult;
  }
  ensure(rep.total_degree == algebra.degree(), "fiber degree bookkeeping failed");
  return rep;
}

Divisor fiber_divisor(const SpectralAlgebra& algebra, const Rational& w0) {
  const FiberReport rep = fiber_points(algebra, w0);
  require(rep.irreducible_factors.empty(), "fiber has irrational points");
  Divisor d{algebra, {}};
  for (const auto& [pt, m] : rep.points) add_point(d, pt, m);
  return d;
}

BaseDivisor norm(const Divisor& d) {
  BaseDivisor out;
  for (const auto& [pt, m] : d.support) {
    out.support[pt.w0] += m;
    if (out.support[pt.w0] == 0) out.support.erase(pt.w0);
  }
  return out;
}

Divisor sigma_divisor(const Divisor& d) {
  require(d.algebra.sigma_defined(), "sigma undefined on this algebra");
  Divisor out{d.algebra, {}};
  for (const auto& [pt, m] : d.support) out.support.emplace(SpectralPoint{pt.w0, -pt.eta0}, m);
  return out;
}

PrymReport prym_membership_degreewise(const Divisor& d) {
  PrymReport rep;
  rep.degree = degree(d);
  rep.norm_degree = degree(norm(d));
  rep.prym_representative = rep.norm_degree == 0;
  bool order_two = 2 * rep.degree == 0;
  if (d.algebra.sigma_defined()) {
    Divisor paired = d;
    for (const auto& [pt, m] : sigma_divisor(d).support) add_point(paired, pt, m);
    order_two = order_two && degree(paired) == 0;
  } else {
    order_two = false;
  }
  rep.order_two_necessary = order_two;
  rep.caveat =
      "degree-level necessary conditions on the affine chart; linear equivalence "
      "on the spectral curve is out of scope";
  return rep;
}

ParityReport parity_invariant(int deg_L, int minus_one_points,
                              std::optional<std::pair<int, int>> w_degrees) {
  require(minus_one_points >= 0, "point count must be nonnegative");
  ParityReport rep;
  rep.deg_L = deg_L;
  rep.minus_one_points = minus_one_points;
  rep.pass = ((deg_L - minus_one_points) % 2 + 2) % 2 == 0;
  if (w_degrees) rep.toledo = w_degrees->first - w_degrees->second;
  return rep;
}

}  // namespace hitchin
