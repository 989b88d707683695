#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hitchin/matrix.hpp"

namespace hitchin {

enum class Family { gl, sl, so_odd, so_even, sp };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Matrix-size conventions: gl/sl act on n, so_odd on 2n+1, so_even on 2n,
// sp on 2n. Orthogonal algebras use the symmetric form Id, so X^t = -X;
// symplectic uses J_n X + X^t J_n = 0.
struct AlgebraDescriptor {
  Family family;
  int n;
};

void validate(const AlgebraDescriptor& d);
int matrix_size(const AlgebraDescriptor& d);
int algebra_dimension(const AlgebraDescriptor& d);
int algebra_rank(const AlgebraDescriptor& d);

struct AlgebraBasis {
  AlgebraDescriptor desc;
  std::vector<RatMat> elements;
  int dimension() const { return static_cast<int>(elements.size()); }
};

AlgebraBasis standard_basis(const AlgebraDescriptor& d);

// Commuting, linearly independent diagonal (or rotation-block) elements
// spanning a Cartan subalgebra; length = algebra_rank.
std::vector<RatMat> standard_cartan(const AlgebraDescriptor& d);

RatMat commutator(const RatMat& a, const RatMat& b);

// Exact coordinates in the span of a fixed element list; the reduction is
// done once at construction, each query is a back-substitution.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<RatMat>& elements);
  std::optional<std::vector<Rational>> coords(const RatMat& x) const;
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  int m2_ = 0, d_ = 0;
  std::vector<std::vector<Rational>> rref_;
  std::vector<int> pivots_;
  std::vector<std::vector<Rational>> transform_;
};

// Matrix of ad X in the given basis; error "element outside algebra" when X
// is not in the span.
RatMat ad_matrix(const RatMat& x, const AlgebraBasis& basis);
RatMat ad_matrix(const RatMat& x, const AlgebraBasis& basis, const SpanSolver& solver);

struct BilinearFormMatrix {
  AlgebraBasis basis;
  RatMat gram;  // gram[i][j] = Tr(ad e_i ad e_j)
};

BilinearFormMatrix killing_gram(const AlgebraBasis& basis);

enum class Definiteness { positive, negative, indefinite, degenerate };

std::string definiteness_name(Definiteness d);

// Sign classification of a symmetric exact Gram matrix by congruence
// elimination (never by numeric eigenvalues).
Definiteness classify_gram(RatMat g);

// Restriction of the form to the span of the subspace elements.
Definiteness definiteness(const BilinearFormMatrix& form, const std::vector<RatMat>& subspace);

}  // namespace hitchin
