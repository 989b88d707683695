#include "hitchin/curves.hpp"

#include <algorithm>

namespace hitchin {

void validate(const CurveModel& c) {
  validate(c.group);
  require(c.base_genus >= 2, "genus must be at least 2");
  if (c.coefficients)
    require(c.coefficients->size() == invariant_degrees(c.group).size(),
            "coefficient count disagrees with the invariant degrees");
}

int spectral_genus(const CurveModel& c) {
  validate(c);
  const int n = c.group.n, g = c.base_genus;
  if (c.group.kind == GroupKind::GL || c.group.kind == GroupKind::SL)
    return 1 + n * n * (g - 1);
  return 1 + 4 * n * n * (g - 1);
}

int ramification_count(const CurveModel& c) {
  validate(c);
  return invariant_degrees(c.group).back() * (2 * c.base_genus - 2);
}

GenusReport so_even_desingularization(int n, int g) {
  require(n >= 2, "so_even desingularization needs n >= 2");
  require(g >= 2, "genus must be at least 2");
  GenusReport rep;
  rep.spectral_genus = 1 + 4 * n * n * (g - 1);  // virtual genus of the singular model
  rep.ramification_count = 2 * n * (g - 1);      // double points along eta = 0
  rep.desing_genus = 1 + 2 * n * (2 * n - 1) * (g - 1);
  rep.quotient_genus = 1 + n * (2 * n - 1) * (g - 1);
  rep.prym_dim = *rep.desing_genus - *rep.quotient_genus;
  rep.notes =
      "double points assumed ordinary, count 2n(g-1); quotient genus from the "
      "unramified Riemann-Hurwitz relation 2g_S - 2 = 2(2g_q - 2), giving "
      "1 + n(2n-1)(g-1); the commonly quoted exercise value n(2n-1)(g-1) "
      "is off by one (exercise-discrepancy-flag); the Prym dimension "
      "n(2n-1)(g-1) is unaffected";
  return rep;
}

int quotient_genus_ramified(int g_S, int branch_points) {
  require(g_S >= 0 && branch_points >= 0, "inconsistent ramification data");
  const int num = 2 * g_S + 2 - branch_points;
  require(num >= 0 && num % 4 == 0, "inconsistent ramification data");
  return num / 4;
}

SmoothnessReport affine_smoothness(const BiSpectralPolynomial& p) {
  SmoothnessReport rep;
  rep.disc = discriminant(p);
  if (rep.disc.is_zero()) {
    rep.disc_zero = true;
    return rep;
  }
  if (is_squarefree(rep.disc)) {
    rep.smooth = true;
    return rep;
  }
  for (const auto& [part, mult] : squarefree_decomposition(rep.disc)) {
    if (mult < 2) continue;
    rep.repeated_factors.push_back(part);
    for (const auto& [root, rmult] : rational_roots(part)) {
      (void)rmult;
      rep.singular_w.push_back(root);
    }
  }
  std::sort(rep.singular_w.begin(), rep.singular_w.end());
  rep.singular_w.erase(std::unique(rep.singular_w.begin(), rep.singular_w.end()),
                       rep.singular_w.end());
  return rep;
}

BiSpectralPolynomial quotient_equation(const BiSpectralPolynomial& p) {
  require(p.even_in_eta(), "no eta -> -eta symmetry");
  const int m = p.n() / 2;
  std::vector<UniPoly> low(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) low[static_cast<size_t>(j)] = p.coeff(2 * j);
  return BiSpectralPolynomial(m, low);
}

BiSpectralPolynomial model_equation(const CurveModel& c) {
  validate(c);
  require(c.coefficients.has_value(), "curve model carries no coefficient data");
  const auto& cs = *c.coefficients;
  const int size = matrix_size(c.group);
  const int n = c.group.n;
  std::vector<UniPoly> low(static_cast<size_t>(size));
  switch (c.group.kind) {
    case GroupKind::GL:
      for (int i = 1; i <= n; ++i) low[static_cast<size_t>(n - i)] = cs[static_cast<size_t>(i - 1)];
      break;
    case GroupKind::SL:
      for (int i = 2; i <= n; ++i) low[static_cast<size_t>(n - i)] = cs[static_cast<size_t>(i - 2)];
      break;
    case GroupKind::Sp:
      for (int i = 1; i <= n; ++i)
        low[static_cast<size_t>(2 * n - 2 * i)] = cs[static_cast<size_t>(i - 1)];
      break;
    case GroupKind::SO_odd:
      for (int i = 1; i <= n; ++i)
        low[static_cast<size_t>(2 * n + 1 - 2 * i)] = cs[static_cast<size_t>(i - 1)];
      break;
    case GroupKind::SO_even:
      for (int i = 1; i <= n - 1; ++i)
        low[static_cast<size_t>(2 * n - 2 * i)] = cs[static_cast<size_t>(i - 1)];
      low[0] = cs[static_cast<size_t>(n - 1)] * cs[static_cast<size_t>(n - 1)];
      break;
  }
  return BiSpectralPolynomial(size, low);
}

}  // namespace hitchin
