#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hitchin/lie.hpp"

namespace hitchin {

enum class GroupKind { GL, SL, Sp, SO_odd, SO_even };

std::string group_name(GroupKind k);
GroupKind parse_group(const std::string& s);

// Complex group acting through its defining representation: GL(n) and SL(n)
// on C^n, Sp on C^{2n}, SO_odd on C^{2n+1}, SO_even on C^{2n}.
struct GroupDescriptor {
  GroupKind kind;
  int n;

  std::string display() const;
};

void validate(const GroupDescriptor& g);
int matrix_size(const GroupDescriptor& g);
AlgebraDescriptor algebra_of(const GroupDescriptor& g);

// Degrees of the basic invariant polynomials, ordered with the top
// coefficient last (for SO_even that is the Pfaffian, of degree n).
std::vector<int> invariant_degrees(const GroupDescriptor& g);

// dim H^0 of the d-th power of the canonical bundle on a genus-g curve.
int section_space_dim(int d, int g);

struct DimensionReport {
  GroupDescriptor group;
  int genus = 0;
  std::vector<int> degrees;
  int base_dim = 0;
  int moduli_dim = 0;
  bool half_dim_ok = false;    // moduli_dim == 2 * base_dim
  bool degree_sum_ok = false;  // semisimple: sum(2 d_i - 1) == dim g_c; GL: base == n^2(g-1)+1
};

DimensionReport dimensions(const GroupDescriptor& g, int genus);

struct CharCheck {
  std::string name;
  bool pass;
};

struct CharStructureReport {
  GroupDescriptor group;
  std::vector<CharCheck> checks;
  bool ok = false;
  // SO_even only: square root of the constant coefficient when it is one.
  std::optional<UniPoly> pfaffian_sqrt;
};

CharStructureReport validate_char_structure(const GroupDescriptor& g, const BiSpectralPolynomial& p);
CharStructureReport validate_char_structure(const GroupDescriptor& g, const UniPoly& char_poly);

Rational slope(long deg, long rank);

int pushforward_degree(int deg_L, int n, int g);

int toledo(int deg_W1, int deg_W2);

}  // namespace hitchin
