#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hitchin/curves.hpp"
#include "hitchin/hermite.hpp"
#include "hitchin/real_forms.hpp"

namespace hitchin {

// Element of A = Q[w][eta]/(p), written in the power basis 1, eta, ...,
// eta^{n-1}; entry k is the coefficient of eta^k.
using AlgebraElement = std::vector<UniPoly>;

struct SpectralAlgebra {
  BiSpectralPolynomial p;
  UniPoly disc;
  bool smooth = false;

  explicit SpectralAlgebra(BiSpectralPolynomial poly);
  int degree() const { return p.n(); }
  bool sigma_defined() const { return p.has_sigma_symmetry(); }
};

AlgebraElement elem_zero(const SpectralAlgebra& a);
AlgebraElement elem_one(const SpectralAlgebra& a);
AlgebraElement elem_eta(const SpectralAlgebra& a);
bool elem_is_zero(const AlgebraElement& x);
AlgebraElement elem_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement elem_scale(const AlgebraElement& x, const UniPoly& c);
AlgebraElement mult_eta(const SpectralAlgebra& a, const AlgebraElement& x);
AlgebraElement elem_mul(const SpectralAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement reduce_mod_p(const SpectralAlgebra& a, const BiPoly& f);

// eta -> -eta on coordinates; needs p(-eta) = +-p(eta).
AlgebraElement sigma_on_algebra(const SpectralAlgebra& a, const AlgebraElement& x);

// Affine model of a line bundle on the spectral curve: a finitely generated
// rank-1 module over A. The twist field records the intended power of the
// pulled-back canonical bundle for global bookkeeping (half-integers allowed);
// it never enters the affine computation.
struct FractionalIdeal {
  SpectralAlgebra algebra;
  std::vector<AlgebraElement> generators;
  Rational twist = Rational(0);
};

void validate(const FractionalIdeal& ideal);

struct HiggsMatrix {
  int n = 0;
  PolyMat phi;
  BiSpectralPolynomial char_poly;  // always det(eta I - phi)
};

HiggsMatrix higgs_from_phi(const PolyMat& phi);

struct PushforwardResult {
  HiggsMatrix higgs;
  HermiteBasis basis;
  std::vector<std::string> warnings;
};

// Multiplication by eta in the canonical (Hermite) basis of the module.
PushforwardResult pushforward_line(const FractionalIdeal& ideal);

// Inverse construction: the module cut out by the adjugate of eta I - phi.
FractionalIdeal eigenline(const HiggsMatrix& m);

// Same construction with a ready-made algebra (must match m.char_poly);
// avoids recomputing the discriminant when the caller already holds it.
FractionalIdeal eigenline(const SpectralAlgebra& algebra, const HiggsMatrix& m);

struct Rank2Module {
  SpectralAlgebra algebra;
  FractionalIdeal first, second;
};

PushforwardResult pushforward_rank2(const Rank2Module& v);

enum class SigmaClass { invariant, anti_invariant_pairing, neither };

std::string sigma_class_name(SigmaClass c);

struct SigmaTestReport {
  SigmaClass cls = SigmaClass::neither;
  bool invariant = false;
  bool principal_pairing = false;
  std::optional<AlgebraElement> pairing_generator;
  std::string caveat;
};

SigmaTestReport ideal_sigma_test(const FractionalIdeal& ideal);

struct FixedPointReport {
  std::string status;  // "pass", "fail", "undetermined"
  std::optional<RatMat> witness;
  std::vector<std::string> identities;  // conditions the form demands
  std::vector<std::string> failures;    // subset failing for the given candidate
};

// Existence (or verification) of a constant intertwiner realizing the
// real-form involution on the Higgs field. Search space when no candidate is
// given: the form's standard conjugation matrices, then signed permutations.
FixedPointReport fixed_point_check(const RealFormDescriptor& form, const HiggsMatrix& m,
                                   const std::optional<RatMat>& candidate = std::nullopt);

}  // namespace hitchin
