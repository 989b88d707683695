#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/correspondence.hpp"

namespace hitchin {

struct SpectralPoint {
  Rational w0, eta0;

  friend bool operator==(const SpectralPoint& a, const SpectralPoint& b) {
    return a.w0 == b.w0 && a.eta0 == b.eta0;
  }
  friend bool operator<(const SpectralPoint& a, const SpectralPoint& b) {
    if (a.w0 != b.w0) return a.w0 < b.w0;
    return a.eta0 < b.eta0;
  }
};

struct Divisor {
  SpectralAlgebra algebra;
  std::map<SpectralPoint, long> support;  // nonzero multiplicities only
};

struct BaseDivisor {
  std::map<Rational, long> support;
};

// Throws when the point does not satisfy p(eta0, w0) = 0; merges and drops
// cancelled points.
void add_point(Divisor& d, const SpectralPoint& pt, long mult);

long degree(const Divisor& d);
long degree(const BaseDivisor& d);

struct FiberReport {
  std::vector<std::pair<SpectralPoint, int>> points;             // rational, with multiplicity
  std::vector<std::pair<UniPoly, int>> irreducible_factors;      // leftover degree >= 2 pieces
  int total_degree = 0;                                          // always the cover degree
};

FiberReport fiber_points(const SpectralAlgebra& algebra, const Rational& w0);

// The fully rational fiber over w0 as a divisor (error when an irrational
// factor remains).
Divisor fiber_divisor(const SpectralAlgebra& algebra, const Rational& w0);

BaseDivisor norm(const Divisor& d);

Divisor sigma_divisor(const Divisor& d);

struct PrymReport {
  long degree = 0;
  long norm_degree = 0;
  bool prym_representative = false;  // deg(norm) = 0
  bool order_two_necessary = false;  // deg(2D) = 0 and deg(D + sigma D) = 0
  std::string caveat;
};

PrymReport prym_membership_degreewise(const Divisor& d);

struct ParityReport {
  int deg_L = 0;
  int minus_one_points = 0;
  bool pass = false;
  std::optional<int> toledo;
};

ParityReport parity_invariant(int deg_L, int minus_one_points,
                              std::optional<std::pair<int, int>> w_degrees = std::nullopt);

}  // namespace hitchin
