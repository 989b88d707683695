#pragma once
#include <vector>

#include "hitchin/matrix.hpp"

namespace hitchin {

// Canonical basis of a Q[w]-submodule of Q[w]^n, given by generator rows.
// Convention: the pivot of a row is its last nonzero coordinate, rows are
// ordered by pivot column ascending, pivots are monic, and every entry of
// another row in a pivot column has degree strictly below the pivot degree.
// Full-rank modules get a lower-triangular basis; two generating sets span
// the same module iff they produce equal bases.
struct HermiteBasis {
  PolyMat rows;  // rank x n
  std::vector<int> pivot_cols;
};

HermiteBasis hermite_basis_full(std::vector<std::vector<UniPoly>> gens, int n);
PolyMat hermite_basis(const std::vector<std::vector<UniPoly>>& gens, int n);

struct HermiteSolve {
  bool in_module = false;
  std::vector<UniPoly> coeffs;  // one per basis row when in_module
};

// Exact membership of v in the module spanned by the basis rows.
HermiteSolve hermite_solve(const HermiteBasis& b, std::vector<UniPoly> v);

}  // namespace hitchin
