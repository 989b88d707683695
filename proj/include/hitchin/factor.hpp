#pragma once
#include <utility>
#include <vector>

#include "hitchin/unipoly.hpp"

namespace hitchin {

// Rational roots of a nonzero polynomial, with multiplicities, sorted.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

struct FactorTerm {
  UniPoly factor;  // monic, positive degree
  int mult = 1;
  bool irreducible_known = false;  // degree <= 4 factors are fully resolved
};

struct Factorization {
  Rational unit;  // leading coefficient of the input
  std::vector<FactorTerm> terms;
};

// Factorization over Q: squarefree split, rational roots, quadratic-pair
// extraction for quartics. Degree >= 5 leftovers are reported unfactored
// with irreducible_known = false.
Factorization factor_rational(const UniPoly& p);

// Squarefree decomposition p = unit * prod_i part_i^i (Yun).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

}  // namespace hitchin
