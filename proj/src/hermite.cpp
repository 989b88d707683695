#include "hitchin/hermite.hpp"

#include <algorithm>

namespace hitchin {

namespace {

using Row = std::vector<UniPoly>;

int trailing_index(const Row& r) {
  for (int j = static_cast<int>(r.size()) - 1; j >= 0; --j)
    if (!r[j].is_zero()) return j;
  return -1;
}

void sub_scaled(Row& a, const UniPoly& q, const Row& b) {
  if (q.is_zero()) return;
  for (size_t j = 0; j < a.size(); ++j)
    if (!b[j].is_zero()) a[j] -= q * b[j];
}

// Scale a row to coprime integer coefficients. A unit multiple of a
// generator spans the same module, and small coefficients keep the
// elimination's division chains from drowning in rational growth.
void make_primitive(Row& r) {
  mpz_class g = 0, l = 1;
  for (const auto& p : r)
    for (const auto& c : p.coeffs()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
  if (g == 0) return;
  const Rational s{mpq_class(l, g)};
  for (auto& p : r) p = p.scaled(s);
}

}  // namespace

HermiteBasis hermite_basis_full(std::vector<std::vector<UniPoly>> gens, int n) {
  require(n >= 0, "negative ambient rank");
  for (const auto& g : gens)
    require(static_cast<int>(g.size()) == n, "generator length mismatch");

  std::vector<Row> work;
  for (auto& g : gens)
    if (trailing_index(g) >= 0) {
      make_primitive(g);
      work.push_back(std::move(g));
    }
  require(!work.empty(), "zero module");

  std::vector<Row> piv;
  std::vector<int> pcols;
  for (int j = n - 1; j >= 0; --j) {
    std::vector<Row> bucket;
    for (auto it = work.begin(); it != work.end();) {
      if (trailing_index(*it) == j) {
        bucket.push_back(std::move(*it));
        it = work.erase(it);
      } else {
        ++it;
      }
    }
    if (bucket.empty()) continue;
    while (bucket.size() > 1) {
      size_t best = 0;
      for (size_t i = 1; i < bucket.size(); ++i)
        if (bucket[i][j].degree() < bucket[best][j].degree()) best = i;
      std::vector<Row> keep{std::move(bucket[best])};
      for (size_t i = 0; i < bucket.size(); ++i) {
        if (i == best) continue;
        Row r = std::move(bucket[i]);
        sub_scaled(r, r[j].divmod(keep[0][j]).quot, keep[0]);
        int t = trailing_index(r);
        if (t >= 0) make_primitive(r);
        if (t == j) keep.push_back(std::move(r));
        else if (t >= 0) work.push_back(std::move(r));
      }
      bucket = std::move(keep);
    }
    Row r = std::move(bucket[0]);
    const Rational lead = r[j].leading();
    if (!lead.is_one())
      for (auto& c : r) c = c.scaled(lead.inv());
    piv.push_back(std::move(r));
    pcols.push_back(j);
  }
  std::reverse(piv.begin(), piv.end());
  std::reverse(pcols.begin(), pcols.end());

  // Reduce later rows against each pivot, highest pivot column first: a
  // reduction step only touches columns at or before its pivot, so walking
  // downward cannot disturb columns that were already reduced.
  for (size_t a = piv.size(); a-- > 0;) {
    const int ja = pcols[a];
    for (size_t b = a + 1; b < piv.size(); ++b) {
      if (piv[b][ja].is_zero()) continue;
      sub_scaled(piv[b], piv[b][ja].divmod(piv[a][ja]).quot, piv[a]);
    }
  }

  HermiteBasis out;
  out.rows = PolyMat(static_cast<int>(piv.size()), n);
  for (int i = 0; i < out.rows.rows(); ++i)
    for (int j = 0; j < n; ++j) out.rows.at(i, j) = piv[static_cast<size_t>(i)][static_cast<size_t>(j)];
  out.pivot_cols = std::move(pcols);
  return out;
}

PolyMat hermite_basis(const std::vector<std::vector<UniPoly>>& gens, int n) {
  return hermite_basis_full(gens, n).rows;
}

HermiteSolve hermite_solve(const HermiteBasis& b, std::vector<UniPoly> v) {
  require(static_cast<int>(v.size()) == b.rows.cols(), "vector length mismatch");
  HermiteSolve out;
  out.coeffs.assign(static_cast<size_t>(b.rows.rows()), UniPoly());
  for (int i = b.rows.rows() - 1; i >= 0; --i) {
    const int j = b.pivot_cols[static_cast<size_t>(i)];
    if (v[static_cast<size_t>(j)].is_zero()) continue;
    auto dm = v[static_cast<size_t>(j)].divmod(b.rows.at(i, j));
    if (!dm.rem.is_zero()) return out;
    for (int c = 0; c <= j; ++c)
      if (!b.rows.at(i, c).is_zero()) v[static_cast<size_t>(c)] -= dm.quot * b.rows.at(i, c);
    out.coeffs[static_cast<size_t>(i)] = dm.quot;
  }
  for (const auto& x : v)
    if (!x.is_zero()) return out;
  out.in_module = true;
  return out;
}

}  // namespace hitchin
