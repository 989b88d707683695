#include "hitchin/lie.hpp"

namespace hitchin {

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::so_odd: return "so_odd";
    case Family::so_even: return "so_even";
    case Family::sp: return "sp";
  }
  throw internal_error("unknown family");
}

Family parse_family(const std::string& s) {
  if (s == "gl") return Family::gl;
  if (s == "sl") return Family::sl;
  if (s == "so_odd") return Family::so_odd;
  if (s == "so_even") return Family::so_even;
  if (s == "sp") return Family::sp;
  throw domain_error("unknown algebra family: '" + s + "'");
}

void validate(const AlgebraDescriptor& d) {
  require(d.n >= 1, "algebra parameter must be positive");
  if (d.family == Family::sl) require(d.n >= 2, "sl needs parameter at least 2");
}

int matrix_size(const AlgebraDescriptor& d) {
  validate(d);
  switch (d.family) {
    case Family::gl:
    case Family::sl: return d.n;
    case Family::so_odd: return 2 * d.n + 1;
    case Family::so_even: return 2 * d.n;
    case Family::sp: return 2 * d.n;
  }
  throw internal_error("unknown family");
}

int algebra_dimension(const AlgebraDescriptor& d) {
  validate(d);
  switch (d.family) {
    case Family::gl: return d.n * d.n;
    case Family::sl: return d.n * d.n - 1;
    case Family::so_odd: return d.n * (2 * d.n + 1);
    case Family::so_even: return d.n * (2 * d.n - 1);
    case Family::sp: return d.n * (2 * d.n + 1);
  }
  throw internal_error("unknown family");
}

int algebra_rank(const AlgebraDescriptor& d) {
  validate(d);
  return d.family == Family::sl ? d.n - 1 : d.n;
}

namespace {

RatMat unit(int m, int i, int j, const Rational& v = Rational(1)) {
  RatMat e(m, m);
  e.at(i, j) = v;
  return e;
}

}  // namespace

AlgebraBasis standard_basis(const AlgebraDescriptor& d) {
  validate(d);
  const int m = matrix_size(d);
  AlgebraBasis b{d, {}};
  switch (d.family) {
    case Family::gl:
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b.elements.push_back(unit(m, i, j));
      break;
    case Family::sl: {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i != j) b.elements.push_back(unit(m, i, j));
      for (int i = 0; i + 1 < m; ++i) {
        RatMat h(m, m);
        h.at(i, i) = Rational(1);
        h.at(i + 1, i + 1) = Rational(-1);
        b.elements.push_back(h);
      }
      break;
    }
    case Family::so_odd:
    case Family::so_even:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          RatMat a(m, m);
          a.at(i, j) = Rational(1);
          a.at(j, i) = Rational(-1);
          b.elements.push_back(a);
        }
      break;
    case Family::sp: {
      const int n = d.n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          RatMat a(m, m);
          a.at(i, j) = Rational(1);
          a.at(n + j, n + i) = Rational(-1);
          b.elements.push_back(a);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          RatMat s(m, m);
          s.at(i, n + j) = Rational(1);
          s.at(j, n + i) = Rational(1);
          b.elements.push_back(s);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          RatMat s(m, m);
          s.at(n + i, j) = Rational(1);
          s.at(n + j, i) = Rational(1);
          b.elements.push_back(s);
        }
      break;
    }
  }
  ensure(b.dimension() == algebra_dimension(d), "basis size disagrees with dimension formula");
  return b;
}

std::vector<RatMat> standard_cartan(const AlgebraDescriptor& d) {
  validate(d);
  const int m = matrix_size(d);
  std::vector<RatMat> out;
  switch (d.family) {
    case Family::gl:
      for (int i = 0; i < m; ++i) out.push_back(unit(m, i, i));
      break;
    case Family::sl:
      for (int i = 0; i + 1 < m; ++i) {
        RatMat h(m, m);
        h.at(i, i) = Rational(1);
        h.at(i + 1, i + 1) = Rational(-1);
        out.push_back(h);
      }
      break;
    case Family::sp:
      for (int i = 0; i < d.n; ++i) {
        RatMat h(m, m);
        h.at(i, i) = Rational(1);
        h.at(d.n + i, d.n + i) = Rational(-1);
        out.push_back(h);
      }
      break;
    case Family::so_odd:
    case Family::so_even:
      for (int k = 0; k < d.n; ++k) {
        RatMat r(m, m);
        r.at(2 * k, 2 * k + 1) = Rational(1);
        r.at(2 * k + 1, 2 * k) = Rational(-1);
        out.push_back(r);
      }
      break;
  }
  ensure(static_cast<int>(out.size()) == algebra_rank(d), "cartan size disagrees with rank");
  return out;
}

RatMat commutator(const RatMat& a, const RatMat& b) { return a * b - b * a; }

SpanSolver::SpanSolver(const std::vector<RatMat>& elements) {
  require(!elements.empty(), "empty element list");
  const int r = elements.front().rows(), c = elements.front().cols();
  m2_ = r * c;
  d_ = static_cast<int>(elements.size());
  std::vector<std::vector<Rational>> a(static_cast<size_t>(d_));
  std::vector<std::vector<Rational>> t(static_cast<size_t>(d_),
                                       std::vector<Rational>(static_cast<size_t>(d_)));
  for (int i = 0; i < d_; ++i) {
    require(elements[static_cast<size_t>(i)].rows() == r &&
                elements[static_cast<size_t>(i)].cols() == c,
            "element shape mismatch");
    a[static_cast<size_t>(i)].resize(static_cast<size_t>(m2_));
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < c; ++q)
        a[static_cast<size_t>(i)][static_cast<size_t>(p * c + q)] =
            elements[static_cast<size_t>(i)].at(p, q);
    t[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
  }

  size_t row = 0;
  for (int col = 0; col < m2_ && row < a.size(); ++col) {
    size_t sel = row;
    while (sel < a.size() && a[sel][static_cast<size_t>(col)].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    std::swap(t[row], t[sel]);
    const Rational inv = a[row][static_cast<size_t>(col)].inv();
    for (auto& x : a[row]) x *= inv;
    for (auto& x : t[row]) x *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row) continue;
      const Rational f = a[i][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int k = 0; k < m2_; ++k) a[i][static_cast<size_t>(k)] -= f * a[row][static_cast<size_t>(k)];
      for (int k = 0; k < d_; ++k) t[i][static_cast<size_t>(k)] -= f * t[row][static_cast<size_t>(k)];
    }
    pivots_.push_back(col);
    ++row;
  }
  rref_.assign(a.begin(), a.begin() + static_cast<long>(row));
  transform_.assign(t.begin(), t.begin() + static_cast<long>(row));
}

std::optional<std::vector<Rational>> SpanSolver::coords(const RatMat& x) const {
  require(x.rows() * x.cols() == m2_, "element shape mismatch");
  std::vector<Rational> b(static_cast<size_t>(m2_));
  for (int p = 0; p < x.rows(); ++p)
    for (int q = 0; q < x.cols(); ++q) b[static_cast<size_t>(p * x.cols() + q)] = x.at(p, q);
  std::vector<Rational> c(rref_.size());
  for (size_t i = 0; i < rref_.size(); ++i) {
    c[i] = b[static_cast<size_t>(pivots_[i])];
    if (c[i].is_zero()) continue;
    for (int k = 0; k < m2_; ++k)
      if (!rref_[i][static_cast<size_t>(k)].is_zero())
        b[static_cast<size_t>(k)] -= c[i] * rref_[i][static_cast<size_t>(k)];
  }
  for (const auto& v : b)
    if (!v.is_zero()) return std::nullopt;
  std::vector<Rational> out(static_cast<size_t>(d_));
  for (size_t i = 0; i < rref_.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (int k = 0; k < d_; ++k) out[static_cast<size_t>(k)] += c[i] * transform_[i][static_cast<size_t>(k)];
  }
  return out;
}

RatMat ad_matrix(const RatMat& x, const AlgebraBasis& basis) {
  SpanSolver solver(basis.elements);
  return ad_matrix(x, basis, solver);
}

RatMat ad_matrix(const RatMat& x, const AlgebraBasis& basis, const SpanSolver& solver) {
  require(solver.coords(x).has_value(), "element outside algebra");
  const int d = basis.dimension();
  RatMat ad(d, d);
  for (int j = 0; j < d; ++j) {
    auto col = solver.coords(commutator(x, basis.elements[static_cast<size_t>(j)]));
    require(col.has_value(), "element outside algebra");
    for (int i = 0; i < d; ++i) ad.at(i, j) = (*col)[static_cast<size_t>(i)];
  }
  return ad;
}

BilinearFormMatrix killing_gram(const AlgebraBasis& basis) {
  const int d = basis.dimension();
  SpanSolver solver(basis.elements);
  std::vector<RatMat> ads;
  ads.reserve(static_cast<size_t>(d));
  for (const auto& e : basis.elements) ads.push_back(ad_matrix(e, basis, solver));
  RatMat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational tr(0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          tr += ads[static_cast<size_t>(i)].at(a, b) * ads[static_cast<size_t>(j)].at(b, a);
      gram.at(i, j) = tr;
      gram.at(j, i) = tr;
    }
  return {basis, gram};
}

std::string definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  throw internal_error("unknown definiteness");
}

Definiteness classify_gram(RatMat g) {
  require(g.is_square(), "gram matrix must be square");
  const int k = g.rows();
  require(k >= 1, "empty subspace");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) require(g.at(i, j) == g.at(j, i), "gram matrix not symmetric");

  std::vector<bool> done(static_cast<size_t>(k), false);
  int pos = 0, neg = 0, null = 0;
  for (int step = 0; step < k; ++step) {
    int piv = -1;
    for (int i = 0; i < k; ++i)
      if (!done[static_cast<size_t>(i)] && !g.at(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int oi = -1, oj = -1;
      for (int i = 0; i < k && oi < 0; ++i) {
        if (done[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < k; ++j)
          if (!done[static_cast<size_t>(j)] && j != i && !g.at(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      }
      if (oi < 0) {
        for (int i = 0; i < k; ++i)
          if (!done[static_cast<size_t>(i)]) ++null;
        break;
      }
      // Make the (oi, oi) entry nonzero by the congruence adding row/col oj.
      for (int c = 0; c < k; ++c) g.at(oi, c) += g.at(oj, c);
      for (int r = 0; r < k; ++r) g.at(r, oi) += g.at(r, oj);
      piv = oi;
    }
    const Rational d0 = g.at(piv, piv);
    (d0.sign() > 0 ? pos : neg) += 1;
    done[static_cast<size_t>(piv)] = true;
    for (int r = 0; r < k; ++r) {
      if (done[static_cast<size_t>(r)] || g.at(r, piv).is_zero()) continue;
      const Rational f = g.at(r, piv) / d0;
      for (int c = 0; c < k; ++c) g.at(r, c) -= f * g.at(piv, c);
      for (int c = 0; c < k; ++c) g.at(c, r) = g.at(r, c);
    }
  }
  if (null > 0) return Definiteness::degenerate;
  if (pos > 0 && neg > 0) return Definiteness::indefinite;
  return pos > 0 ? Definiteness::positive : Definiteness::negative;
}

Definiteness definiteness(const BilinearFormMatrix& form, const std::vector<RatMat>& subspace) {
  require(!subspace.empty(), "empty subspace");
  SpanSolver solver(form.basis.elements);
  const int d = form.basis.dimension();
  const int k = static_cast<int>(subspace.size());
  RatMat coords(d, k);
  for (int j = 0; j < k; ++j) {
    auto c = solver.coords(subspace[static_cast<size_t>(j)]);
    require(c.has_value(), "element outside algebra");
    for (int i = 0; i < d; ++i) coords.at(i, j) = (*c)[static_cast<size_t>(i)];
  }
  return classify_gram(coords.transpose() * form.gram * coords);
}

}  // namespace hitchin
