#pragma once
#include <array>
#include <string>
#include <vector>

#include "hitchin/lie.hpp"

namespace hitchin {

// Conjugation matrices I_{p,q} = diag(-I_p, I_q), J_n = [[0, I_n],[-I_n, 0]],
// K_{p,q} = diag(-I_p, I_q, -I_p, I_q).
RatMat mat_I(int p, int q);
RatMat mat_J(int n);
RatMat mat_K(int p, int q);
RatMat standard_matrix(const std::string& kind, int a, int b = 0);

enum class RealFormKind {
  SL_R,        // SL(n,R)
  SU_star,     // SU*(2m)
  SU_pq,       // SU(p,q)
  SO_pq_odd,   // SO(p,q), p+q odd
  Sp_R,        // Sp(2n,R)
  Sp_pq,       // Sp(2p,2q)
  SO_pq_even,  // SO(p,q), p+q even
  SO_star      // SO*(2m)
};

struct RealFormDescriptor {
  RealFormKind kind;
  int a = 0;  // n (SL_R, Sp_R), m (SU_star, SO_star), p (pq kinds)
  int b = 0;  // q (pq kinds)

  AlgebraDescriptor parent() const;
  std::string row_label() const;  // parameter-free table label, e.g. "SU(p,q)"
  std::string display() const;    // instance label, e.g. "SU(2,1)"
  std::vector<int> params() const;
};

void validate(const RealFormDescriptor& f);
RealFormDescriptor parse_real_form(const std::string& row_label, const std::vector<int>& params);
std::vector<RealFormDescriptor> all_real_forms(int max_parent_size);

// Element of the complexified parent algebra, X + iY with rational X, Y.
struct CElem {
  RatMat re, im;

  CElem() = default;
  CElem(RatMat r, RatMat i) : re(std::move(r)), im(std::move(i)) {}
  static CElem real(const RatMat& x) { return {x, RatMat(x.rows(), x.cols())}; }
  static CElem imag(const RatMat& y) { return {RatMat(y.rows(), y.cols()), y}; }

  CElem times_i() const { return {-im, re}; }
  CElem conj() const { return {re, -im}; }
  CElem transpose() const { return {re.transpose(), im.transpose()}; }
  CElem operator-() const { return {-re, -im}; }
  friend CElem operator+(const CElem& a, const CElem& b) { return {a.re + b.re, a.im + b.im}; }
  friend CElem operator-(const CElem& a, const CElem& b) { return {a.re - b.re, a.im - b.im}; }
  friend bool operator==(const CElem& a, const CElem& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const CElem& a, const CElem& b) { return !(a == b); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

CElem bracket(const CElem& a, const CElem& b);

enum class Involution { rho, tau, sigma, theta };

// The table formulas. rho is the compact conjugation Z -> -conj(Z)^t (equal to
// the per-family forms on each parent). theta applies sigma; callers restrict
// it to the compact form.
CElem apply_involution(const RealFormDescriptor& f, Involution which, const CElem& z);

struct RowCheck {
  std::string name;
  bool pass;
};

struct DecompositionReport {
  std::vector<CElem> h, m, im, ih;  // (rho, tau) eigenspaces (+,+), (-,+), (+,-), (-,-)
  std::array<int, 4> dims{};
  bool dims_sum_ok = false;
  bool brackets_ok = false;
  bool sigma_fixed_matches = false;  // fix(sigma) = h + ih as spans
};

struct RowReport {
  RealFormDescriptor form;
  std::vector<RowCheck> checks;
  bool all_pass = false;
  int compact_dim = -1;
  int expected_compact_dim = -1;
  std::array<int, 4> eigendims{};
};

// Exact verification of every identity of the row on a full complexified
// basis: involutivity, sigma = rho tau, commutation, (anti)linearity,
// algebra preservation, compact-form Killing negative definite, the Cartan
// property of rho, B_theta positive definite on the real form g^tau, theta
// preserving the compact form, eigenspace dimension sum, bracket inclusions,
// fix(sigma) = h + ih, and the closed-form maximal-compact dimension.
RowReport verify_row(const RealFormDescriptor& f);

DecompositionReport cartan_decomposition(const RealFormDescriptor& f);

int maximal_compact_dim(const RealFormDescriptor& f);
int expected_maximal_compact_dim(const RealFormDescriptor& f);

// For the split rows (SL(n,R), Sp(2n,R), SO(n,n), SO(n,n+1) with
// semisimple parent): a tau-invariant commuting family of rank-many elements
// on which the real Killing form is positive definite.
bool has_split_cartan_row(const RealFormDescriptor& f);
std::vector<CElem> split_cartan(const RealFormDescriptor& f);

// Full check of the exhibited family: rank-many tau-fixed elements, pairwise
// commuting, real Killing form positive definite on their span.
bool split_cartan_positive(const RealFormDescriptor& f);

}  // namespace hitchin
