#include "hitchin/correspondence.hpp"

#include <algorithm>
#include <numeric>

namespace hitchin {

SpectralAlgebra::SpectralAlgebra(BiSpectralPolynomial poly) : p(std::move(poly)), disc(discriminant(p)) {
  smooth = !disc.is_zero() && is_squarefree(disc);
}

AlgebraElement elem_zero(const SpectralAlgebra& a) {
  return AlgebraElement(static_cast<size_t>(a.degree()));
}

AlgebraElement elem_one(const SpectralAlgebra& a) {
  AlgebraElement e = elem_zero(a);
  e[0] = UniPoly::constant(Rational(1));
  return e;
}

AlgebraElement elem_eta(const SpectralAlgebra& a) {
  if (a.degree() == 1) return {-a.p.coeff(0)};
  AlgebraElement e = elem_zero(a);
  e[1] = UniPoly::constant(Rational(1));
  return e;
}

bool elem_is_zero(const AlgebraElement& x) {
  return std::all_of(x.begin(), x.end(), [](const UniPoly& c) { return c.is_zero(); });
}

namespace {

void check_len(const SpectralAlgebra& a, const AlgebraElement& x) {
  require(static_cast<int>(x.size()) == a.degree(), "element length mismatch");
}

}  // namespace

AlgebraElement elem_add(const AlgebraElement& x, const AlgebraElement& y) {
  require(x.size() == y.size(), "element length mismatch");
  AlgebraElement r(x.size());
  for (size_t k = 0; k < x.size(); ++k) r[k] = x[k] + y[k];
  return r;
}

AlgebraElement elem_scale(const AlgebraElement& x, const UniPoly& c) {
  AlgebraElement r(x.size());
  for (size_t k = 0; k < x.size(); ++k) r[k] = x[k] * c;
  return r;
}

AlgebraElement mult_eta(const SpectralAlgebra& a, const AlgebraElement& x) {
  check_len(a, x);
  const int n = a.degree();
  AlgebraElement r(static_cast<size_t>(n));
  const UniPoly& top = x[static_cast<size_t>(n - 1)];
  for (int k = 0; k < n; ++k) {
    UniPoly v = k > 0 ? x[static_cast<size_t>(k - 1)] : UniPoly();
    if (!top.is_zero()) v -= top * a.p.coeff(k);
    r[static_cast<size_t>(k)] = std::move(v);
  }
  return r;
}

AlgebraElement elem_mul(const SpectralAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  check_len(a, x);
  check_len(a, y);
  const int n = a.degree();
  AlgebraElement acc = elem_zero(a);
  AlgebraElement cur = y;
  for (int i = 0; i < n; ++i) {
    if (i > 0) cur = mult_eta(a, cur);
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    acc = elem_add(acc, elem_scale(cur, x[static_cast<size_t>(i)]));
  }
  return acc;
}

AlgebraElement reduce_mod_p(const SpectralAlgebra& a, const BiPoly& f) {
  const int n = a.degree();
  std::vector<UniPoly> c = f.coeffs();
  if (static_cast<int>(c.size()) < n) c.resize(static_cast<size_t>(n));
  for (int d = static_cast<int>(c.size()) - 1; d >= n; --d) {
    UniPoly lead = c[static_cast<size_t>(d)];
    if (lead.is_zero()) continue;
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(d - n + k)] -= lead * a.p.coeff(k);
  }
  c.resize(static_cast<size_t>(n));
  return c;
}

AlgebraElement sigma_on_algebra(const SpectralAlgebra& a, const AlgebraElement& x) {
  require(a.sigma_defined(), "sigma undefined on this algebra");
  check_len(a, x);
  AlgebraElement r = x;
  for (size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return r;
}

void validate(const FractionalIdeal& ideal) {
  require(!ideal.generators.empty(), "fractional ideal needs a nonzero generator");
  bool any = false;
  for (const auto& g : ideal.generators) {
    check_len(ideal.algebra, g);
    any = any || !elem_is_zero(g);
  }
  require(any, "fractional ideal needs a nonzero generator");
}

HiggsMatrix higgs_from_phi(const PolyMat& phi) {
  require(phi.is_square() && phi.rows() >= 1, "Higgs field must be a nonempty square matrix");
  return HiggsMatrix{phi.rows(), phi, char_poly(phi)};
}

namespace {

std::vector<std::vector<UniPoly>> eta_closure(const SpectralAlgebra& a,
                                              const std::vector<AlgebraElement>& gens) {
  const int n = a.degree();
  std::vector<std::vector<UniPoly>> rows;
  rows.reserve(gens.size() * static_cast<size_t>(n));
  for (const auto& g : gens) {
    AlgebraElement cur = g;
    rows.push_back(cur);
    for (int j = 1; j < n; ++j) {
      cur = mult_eta(a, cur);
      rows.push_back(cur);
    }
  }
  return rows;
}

AlgebraElement basis_row(const HermiteBasis& hb, int i) {
  AlgebraElement e(static_cast<size_t>(hb.rows.cols()));
  for (int j = 0; j < hb.rows.cols(); ++j) e[static_cast<size_t>(j)] = hb.rows.at(i, j);
  return e;
}

BiSpectralPolynomial spectral_from_bipoly(const BiPoly& f) {
  const int n = f.eta_degree();
  ensure(n >= 1 && f.coeff(n) == UniPoly::constant(Rational(1)),
         "expected a monic polynomial in eta");
  std::vector<UniPoly> low(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) low[static_cast<size_t>(k)] = f.coeff(k);
  return BiSpectralPolynomial(n, std::move(low));
}

BiPoly minor_det(const BiMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const size_t k = rows.size();
  if (k == 0) return BiPoly::constant(UniPoly::constant(Rational(1)));
  if (k == 1) return m.at(rows[0], cols[0]);
  BiPoly acc;
  std::vector<int> rest(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    if (m.at(rows[0], cols[j]).is_zero()) continue;
    std::vector<int> sub;
    sub.reserve(k - 1);
    for (size_t t = 0; t < k; ++t)
      if (t != j) sub.push_back(cols[t]);
    BiPoly term = m.at(rows[0], cols[j]) * minor_det(m, rest, sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Last row of adj(M): cofactors of the last column. Cofactor expansion beats
// the full Faddeev-LeVerrier adjugate for the sizes the eigenline sees.
std::vector<BiPoly> adjugate_last_row(const BiMat& m) {
  const int n = m.rows();
  std::vector<int> all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  std::vector<BiPoly> out;
  out.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> rows, cols;
    for (int i = 0; i < n; ++i) {
      if (i != j) rows.push_back(i);
      if (i != n - 1) cols.push_back(i);
    }
    BiPoly c = minor_det(m, rows, cols);
    if ((n - 1 + j) % 2 == 1) c = -c;
    out.push_back(std::move(c));
  }
  return out;
}

Rational det_at(const PolyMat& phi, const Rational& eta0, const Rational& w0) {
  const int n = phi.rows();
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = -phi.at(i, j).eval(w0);
      if (i == j) v += eta0;
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n && piv < 0; ++r)
      if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) piv = r;
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
      det = -det;
    }
    const Rational lead = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    det *= lead;
    const Rational inv = lead.inv();
    for (int r = c + 1; r < n; ++r) {
      const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)] * inv;
      if (f.is_zero()) continue;
      for (int k = c; k < n; ++k)
        m[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
            f * m[static_cast<size_t>(c)][static_cast<size_t>(k)];
    }
  }
  return det;
}

// Multiplication by eta on a full-rank lattice inside A has characteristic
// polynomial p (it is the regular representation of eta on A tensored up to
// the fraction field), so once the basis has rank n and every eta-image
// solved inside the module the identity is forced. The spot checks below
// guard the implementation without re-expanding the symbolic determinant.
bool char_poly_spot_check(const BiSpectralPolynomial& p, const PolyMat& phi) {
  const int n = phi.rows();
  UniPoly tr;
  for (int i = 0; i < n; ++i) tr += phi.at(i, i);
  if (tr != p.coeff(n - 1).scaled(Rational(-1))) return false;
  for (long t = 1; t <= 3; ++t) {
    const Rational w0(t);
    if (det_at(phi, Rational(0), w0) != p.eval(Rational(0), w0)) return false;
    if (det_at(phi, Rational(1), w0) != p.eval(Rational(1), w0)) return false;
  }
  return true;
}

PushforwardResult pushforwardline_impl(const FractionalIdeal& ideal,
                                       std::vector<std::string> warnings) {
  const SpectralAlgebra& alg = ideal.algebra;
  const int n = alg.degree();
  if (!alg.smooth)
    warnings.push_back("spectral model is not smooth on the affine chart; pushforward is formal");
  HermiteBasis hb = hermite_basis_full(eta_closure(alg, ideal.generators), n);
  require(hb.rows.rows() == n, "not a line bundle model");
  PolyMat phi(n, n);
  for (int i = 0; i < n; ++i) {
    HermiteSolve s = hermite_solve(hb, mult_eta(alg, basis_row(hb, i)));
    ensure(s.in_module, "eta image left the module");
    for (int r = 0; r < n; ++r) phi.at(r, i) = s.coeffs[static_cast<size_t>(r)];
  }
  ensure(char_poly_spot_check(alg.p, phi), "pushforward characteristic polynomial mismatch");
  HiggsMatrix h{n, phi, alg.p};
  return PushforwardResult{std::move(h), std::move(hb), std::move(warnings)};
}

}  // namespace

PushforwardResult pushforward_line(const FractionalIdeal& ideal) {
  validate(ideal);
  return pushforwardline_impl(ideal, {});
}

FractionalIdeal eigenline(const SpectralAlgebra& algebra, const HiggsMatrix& m) {
  require(algebra.p == m.char_poly, "eigenline algebra mismatch");
  require(!algebra.disc.is_zero(), "non-reduced spectrum: eigenline undefined");
  const int n = m.n;
  std::vector<AlgebraElement> gens;
  if (n == 1) {
    gens.push_back(elem_one(algebra));
  } else if (n <= 5) {
    std::vector<BiPoly> row = adjugate_last_row(eta_minus(m.phi));
    gens.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) gens.push_back(reduce_mod_p(algebra, row[static_cast<size_t>(j)]));
  } else {
    BiMat adj = adjugate(eta_minus(m.phi));
    gens.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) gens.push_back(reduce_mod_p(algebra, adj.at(n - 1, j)));
  }
  return FractionalIdeal{algebra, std::move(gens)};
}

FractionalIdeal eigenline(const HiggsMatrix& m) {
  return eigenline(SpectralAlgebra(m.char_poly), m);
}

PushforwardResult pushforward_rank2(const Rank2Module& v) {
  require(v.first.algebra.p == v.algebra.p && v.second.algebra.p == v.algebra.p,
          "twist ideals live over different algebras");
  validate(v.first);
  validate(v.second);
  PushforwardResult a = pushforwardline_impl(v.first, {});
  PushforwardResult b = pushforwardline_impl(v.second, {});
  const int m = v.algebra.degree();
  PolyMat phi(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      phi.at(i, j) = a.higgs.phi.at(i, j);
      phi.at(m + i, m + j) = b.higgs.phi.at(i, j);
    }
  HiggsMatrix h{2 * m, phi, char_poly(phi)};
  ensure(h.char_poly == spectral_from_bipoly(v.algebra.p.to_bipoly() * v.algebra.p.to_bipoly()),
         "rank-2 pushforward characteristic polynomial mismatch");

  HermiteBasis combined;
  const int ra = a.basis.rows.rows(), rb = b.basis.rows.rows();
  combined.rows = PolyMat(ra + rb, 2 * m);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < m; ++j) combined.rows.at(i, j) = a.basis.rows.at(i, j);
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < m; ++j) combined.rows.at(ra + i, m + j) = b.basis.rows.at(i, j);
  combined.pivot_cols = a.basis.pivot_cols;
  for (int c : b.basis.pivot_cols) combined.pivot_cols.push_back(m + c);

  std::vector<std::string> warnings = a.warnings;
  for (const auto& w : b.warnings)
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
  return PushforwardResult{std::move(h), std::move(combined), std::move(warnings)};
}

std::string sigma_class_name(SigmaClass c) {
  switch (c) {
    case SigmaClass::invariant: return "invariant";
    case SigmaClass::anti_invariant_pairing: return "anti-invariant-pairing";
    case SigmaClass::neither: return "neither";
  }
  throw internal_error("unknown sigma class");
}

SigmaTestReport ideal_sigma_test(const FractionalIdeal& ideal) {
  validate(ideal);
  const SpectralAlgebra& alg = ideal.algebra;
  require(alg.sigma_defined(), "sigma undefined on this algebra");
  const int n = alg.degree();

  SigmaTestReport rep;
  std::vector<AlgebraElement> sig_gens;
  sig_gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) sig_gens.push_back(sigma_on_algebra(alg, g));

  const PolyMat base = hermite_basis(eta_closure(alg, ideal.generators), n);
  const PolyMat sig = hermite_basis(eta_closure(alg, sig_gens), n);
  rep.invariant = base == sig;

  std::vector<AlgebraElement> prod_gens;
  for (const auto& g : ideal.generators)
    for (const auto& h : sig_gens) prod_gens.push_back(elem_mul(alg, g, h));
  HermiteBasis prod = hermite_basis_full(eta_closure(alg, prod_gens), n);

  std::vector<AlgebraElement> candidates = prod_gens;
  for (int i = 0; i < prod.rows.rows(); ++i) candidates.push_back(basis_row(prod, i));
  for (const auto& c : candidates) {
    if (elem_is_zero(c)) continue;
    if (hermite_basis(eta_closure(alg, {c}), n) == prod.rows) {
      rep.principal_pairing = true;
      rep.pairing_generator = c;
      break;
    }
  }

  rep.cls = rep.invariant
                ? SigmaClass::invariant
                : (rep.principal_pairing ? SigmaClass::anti_invariant_pairing : SigmaClass::neither);
  rep.caveat =
      "principality search covers generator products and canonical basis rows only; "
      "a miss is inconclusive";
  return rep;
}

namespace {

PolyMat lift_constant(const RatMat& f) {
  PolyMat r(f.rows(), f.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) r.at(i, j) = UniPoly::constant(f.at(i, j));
  return r;
}

bool intertwines_transpose(const PolyMat& phi, const RatMat& f) {
  const PolyMat fl = lift_constant(f);
  return fl * phi == phi.transpose() * fl;
}

bool anticommutes(const PolyMat& phi, const RatMat& f) {
  const PolyMat fl = lift_constant(f);
  return (fl * phi + phi * fl).is_zero();
}

std::vector<std::string> run_law(const RealFormDescriptor& form, const PolyMat& phi,
                                 const RatMat& f) {
  const int n = phi.rows();
  std::vector<std::string> failed;
  auto check = [&](const std::string& name, bool ok) {
    if (!ok) failed.push_back(name);
  };
  switch (form.kind) {
    case RealFormKind::SL_R:
      check("f_symmetric", f == f.transpose());
      check("f_invertible", !determinant(f).is_zero());
      check("intertwines_transpose", intertwines_transpose(phi, f));
      break;
    case RealFormKind::SU_star:
      check("f_skew", f.transpose() == -f);
      check("f_invertible", !determinant(f).is_zero());
      check("intertwines_transpose", intertwines_transpose(phi, f));
      break;
    case RealFormKind::SU_pq:
    case RealFormKind::SO_pq_odd:
    case RealFormKind::SO_pq_even:
      check("f_involutive", f * f == RatMat::identity(n));
      check("f_signature", f.trace() == Rational(form.b - form.a));
      check("anticommutes", anticommutes(phi, f));
      break;
    case RealFormKind::Sp_R: {
      const RatMat j = mat_J(n / 2);
      const RatMat t = f.transpose() * j * f;
      check("f_involutive", f * f == RatMat::identity(n));
      check("f_orthogonal", f.transpose() * f == RatMat::identity(n));
      check("f_normalizes_symplectic", t == j || t == -j);
      check("anticommutes", anticommutes(phi, f));
      break;
    }
    case RealFormKind::Sp_pq: {
      const RatMat j = mat_J(n / 2);
      check("f_involutive", f * f == RatMat::identity(n));
      check("f_signature", f.trace() == Rational(2 * (form.b - form.a)));
      check("f_symplectic", f.transpose() * j * f == j);
      check("anticommutes", anticommutes(phi, f));
      break;
    }
    case RealFormKind::SO_star: {
      check("f_orthogonal", f.transpose() * f == RatMat::identity(n));
      check("f_square_minus_identity", f * f == -RatMat::identity(n));
      check("anticommutes", anticommutes(phi, f));
      break;
    }
  }
  return failed;
}

std::vector<std::string> law_identity_names(const RealFormDescriptor& form) {
  switch (form.kind) {
    case RealFormKind::SL_R: return {"f_symmetric", "f_invertible", "intertwines_transpose"};
    case RealFormKind::SU_star: return {"f_skew", "f_invertible", "intertwines_transpose"};
    case RealFormKind::SU_pq:
    case RealFormKind::SO_pq_odd:
    case RealFormKind::SO_pq_even:
      return {"f_involutive", "f_signature", "anticommutes"};
    case RealFormKind::Sp_R:
      return {"f_involutive", "f_orthogonal", "f_normalizes_symplectic", "anticommutes"};
    case RealFormKind::Sp_pq:
      return {"f_involutive", "f_signature", "f_symplectic", "anticommutes"};
    case RealFormKind::SO_star:
      return {"f_orthogonal", "f_square_minus_identity", "anticommutes"};
  }
  throw internal_error("unknown real form kind");
}

std::vector<RatMat> search_candidates(const RealFormDescriptor& form, int n) {
  std::vector<RatMat> out;
  switch (form.kind) {
    case RealFormKind::SU_pq:
    case RealFormKind::SO_pq_odd:
    case RealFormKind::SO_pq_even:
      out.push_back(mat_I(form.a, form.b));
      break;
    case RealFormKind::Sp_pq:
      out.push_back(mat_K(form.a, form.b));
      break;
    case RealFormKind::Sp_R:
    case RealFormKind::SO_star:
      if (n % 2 == 0) out.push_back(mat_J(n / 2));
      break;
    default:
      break;
  }
  if (n > 6) return out;  // permutation search is bounded
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      RatMat f(n, n);
      for (int i = 0; i < n; ++i)
        f.at(i, perm[static_cast<size_t>(i)]) = Rational((mask >> i) & 1u ? -1 : 1);
      out.push_back(std::move(f));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

FixedPointReport fixed_point_check(const RealFormDescriptor& form, const HiggsMatrix& m,
                                   const std::optional<RatMat>& candidate) {
  validate(form);
  require(m.n == matrix_size(form.parent()), "size mismatch");
  FixedPointReport rep;
  rep.identities = law_identity_names(form);
  if (candidate) {
    require(candidate->rows() == m.n && candidate->cols() == m.n, "size mismatch");
    rep.failures = run_law(form, m.phi, *candidate);
    if (rep.failures.empty()) {
      rep.status = "pass";
      rep.witness = *candidate;
    } else {
      rep.status = "fail";
    }
    return rep;
  }
  for (const RatMat& f : search_candidates(form, m.n)) {
    if (run_law(form, m.phi, f).empty()) {
      rep.status = "pass";
      rep.witness = f;
      return rep;
    }
  }
  rep.status = "undetermined";
  return rep;
}

}  // namespace hitchin
