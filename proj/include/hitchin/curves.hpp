#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hitchin/factor.hpp"
#include "hitchin/invariants.hpp"

namespace hitchin {

struct CurveModel {
  GroupDescriptor group;
  int base_genus = 2;
  std::optional<std::vector<UniPoly>> coefficients;
};

void validate(const CurveModel& c);

struct GenusReport {
  int spectral_genus = 0;
  int ramification_count = 0;
  std::optional<int> desing_genus;
  std::optional<int> quotient_genus;
  std::optional<int> prym_dim;
  std::string notes;
};

// GL/SL covers: 1 + n^2(g-1). Sp, SO covers of degree 2n (or 2n+1):
// 1 + 4n^2(g-1); for SO_even this is the virtual genus of the singular model.
int spectral_genus(const CurveModel& c);

// Zeros of the top invariant coefficient: (top degree) * (2g-2).
int ramification_count(const CurveModel& c);

GenusReport so_even_desingularization(int n, int g);

// Riemann-Hurwitz for the quotient by an involution with the given number of
// branch points: 2 g_S - 2 = 2(2 g_q - 2) + branch_points.
int quotient_genus_ramified(int g_S, int branch_points);

struct SmoothnessReport {
  bool smooth = false;
  UniPoly disc;
  bool disc_zero = false;
  std::vector<UniPoly> repeated_factors;
  std::vector<Rational> singular_w;  // rational roots of the repeated factors
  std::string scope = "affine chart only";
};

SmoothnessReport affine_smoothness(const BiSpectralPolynomial& p);

// For p even in eta, the curve in xi = eta^2.
BiSpectralPolynomial quotient_equation(const BiSpectralPolynomial& p);

// The affine model built from a coefficient list: eta^n + c_1 eta^{n-1} + ...
// (coefficients ordered as invariant_degrees, top one last; the SO_even top
// coefficient enters as its square).
BiSpectralPolynomial model_equation(const CurveModel& c);

}  // namespace hitchin
