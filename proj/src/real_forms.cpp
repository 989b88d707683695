#include "hitchin/real_forms.hpp"

#include <map>
#include <mutex>

namespace hitchin {

RatMat mat_I(int p, int q) {
  require(p >= 1 && q >= 1, "I_pq needs p, q >= 1");
  RatMat m(p + q, p + q);
  for (int i = 0; i < p; ++i) m.at(i, i) = Rational(-1);
  for (int i = p; i < p + q; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMat mat_J(int n) {
  require(n >= 1, "J_n needs n >= 1");
  RatMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m.at(i, n + i) = Rational(1);
    m.at(n + i, i) = Rational(-1);
  }
  return m;
}

RatMat mat_K(int p, int q) {
  require(p >= 1 && q >= 1, "K_pq needs p, q >= 1");
  const int n = p + q;
  RatMat m(2 * n, 2 * n);
  auto put = [&](int off, int count, int sign) {
    for (int i = 0; i < count; ++i) m.at(off + i, off + i) = Rational(sign);
  };
  put(0, p, -1);
  put(p, q, 1);
  put(n, p, -1);
  put(n + p, q, 1);
  return m;
}

RatMat standard_matrix(const std::string& kind, int a, int b) {
  if (kind == "I_pq") return mat_I(a, b);
  if (kind == "J_n") return mat_J(a);
  if (kind == "K_pq") return mat_K(a, b);
  throw domain_error("unknown standard matrix kind: '" + kind + "'");
}

void validate(const RealFormDescriptor& f) {
  switch (f.kind) {
    case RealFormKind::SL_R: require(f.a >= 2, "SL(n,R) needs n >= 2"); return;
    case RealFormKind::SU_star: require(f.a >= 1, "SU*(2m) needs m >= 1"); return;
    case RealFormKind::SU_pq: require(f.a >= 1 && f.b >= 1, "SU(p,q) needs p, q >= 1"); return;
    case RealFormKind::SO_pq_odd:
      require(f.a >= 1 && f.b >= 1 && (f.a + f.b) % 2 == 1 && f.a + f.b >= 3,
              "SO(p,q) odd needs p, q >= 1 with p+q odd");
      return;
    case RealFormKind::Sp_R: require(f.a >= 1, "Sp(2n,R) needs n >= 1"); return;
    case RealFormKind::Sp_pq: require(f.a >= 1 && f.b >= 1, "Sp(2p,2q) needs p, q >= 1"); return;
    case RealFormKind::SO_pq_even:
      require(f.a >= 1 && f.b >= 1 && (f.a + f.b) % 2 == 0, "SO(p,q) even needs p, q >= 1 with p+q even");
      return;
    case RealFormKind::SO_star: require(f.a >= 1, "SO*(2m) needs m >= 1"); return;
  }
  throw internal_error("unknown real form kind");
}

AlgebraDescriptor RealFormDescriptor::parent() const {
  switch (kind) {
    case RealFormKind::SL_R: return {Family::sl, a};
    case RealFormKind::SU_star: return {Family::sl, 2 * a};
    case RealFormKind::SU_pq: return {Family::sl, a + b};
    case RealFormKind::SO_pq_odd: return {Family::so_odd, (a + b - 1) / 2};
    case RealFormKind::Sp_R: return {Family::sp, a};
    case RealFormKind::Sp_pq: return {Family::sp, a + b};
    case RealFormKind::SO_pq_even: return {Family::so_even, (a + b) / 2};
    case RealFormKind::SO_star: return {Family::so_even, a};
  }
  throw internal_error("unknown real form kind");
}

std::string RealFormDescriptor::row_label() const {
  switch (kind) {
    case RealFormKind::SL_R: return "SL(n,R)";
    case RealFormKind::SU_star: return "SU*(2m)";
    case RealFormKind::SU_pq: return "SU(p,q)";
    case RealFormKind::SO_pq_odd: return "SO(p,q)_odd";
    case RealFormKind::Sp_R: return "Sp(2n,R)";
    case RealFormKind::Sp_pq: return "Sp(2p,2q)";
    case RealFormKind::SO_pq_even: return "SO(p,q)_even";
    case RealFormKind::SO_star: return "SO*(2m)";
  }
  throw internal_error("unknown real form kind");
}

std::string RealFormDescriptor::display() const {
  switch (kind) {
    case RealFormKind::SL_R: return "SL(" + std::to_string(a) + ",R)";
    case RealFormKind::SU_star: return "SU*(" + std::to_string(2 * a) + ")";
    case RealFormKind::SU_pq: return "SU(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case RealFormKind::SO_pq_odd:
    case RealFormKind::SO_pq_even:
      return "SO(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case RealFormKind::Sp_R: return "Sp(" + std::to_string(2 * a) + ",R)";
    case RealFormKind::Sp_pq: return "Sp(" + std::to_string(2 * a) + "," + std::to_string(2 * b) + ")";
    case RealFormKind::SO_star: return "SO*(" + std::to_string(2 * a) + ")";
  }
  throw internal_error("unknown real form kind");
}

std::vector<int> RealFormDescriptor::params() const {
  switch (kind) {
    case RealFormKind::SL_R:
    case RealFormKind::SU_star:
    case RealFormKind::Sp_R:
    case RealFormKind::SO_star: return {a};
    default: return {a, b};
  }
}

RealFormDescriptor parse_real_form(const std::string& row_label, const std::vector<int>& params) {
  auto one = [&](RealFormKind k) {
    require(params.size() == 1, "form '" + row_label + "' takes one parameter");
    RealFormDescriptor f{k, params[0], 0};
    validate(f);
    return f;
  };
  auto two = [&](RealFormKind k) {
    require(params.size() == 2, "form '" + row_label + "' takes two parameters");
    RealFormDescriptor f{k, params[0], params[1]};
    validate(f);
    return f;
  };
  if (row_label == "SL(n,R)") return one(RealFormKind::SL_R);
  if (row_label == "SU*(2m)") return one(RealFormKind::SU_star);
  if (row_label == "SU(p,q)") return two(RealFormKind::SU_pq);
  if (row_label == "SO(p,q)_odd") return two(RealFormKind::SO_pq_odd);
  if (row_label == "Sp(2n,R)") return one(RealFormKind::Sp_R);
  if (row_label == "Sp(2p,2q)") return two(RealFormKind::Sp_pq);
  if (row_label == "SO(p,q)_even") return two(RealFormKind::SO_pq_even);
  if (row_label == "SO*(2m)") return one(RealFormKind::SO_star);
  throw domain_error("unknown real form: '" + row_label + "'");
}

std::vector<RealFormDescriptor> all_real_forms(int max_parent_size) {
  std::vector<RealFormDescriptor> out;
  for (int n = 2; n <= max_parent_size; ++n) out.push_back({RealFormKind::SL_R, n, 0});
  for (int m = 1; 2 * m <= max_parent_size; ++m) out.push_back({RealFormKind::SU_star, m, 0});
  for (int s = 2; s <= max_parent_size; ++s)
    for (int q = 1; 2 * q <= s; ++q) out.push_back({RealFormKind::SU_pq, s - q, q});
  for (int s = 3; s <= max_parent_size; s += 2)
    for (int q = 1; 2 * q <= s; ++q) out.push_back({RealFormKind::SO_pq_odd, s - q, q});
  for (int n = 1; 2 * n <= max_parent_size; ++n) out.push_back({RealFormKind::Sp_R, n, 0});
  for (int s = 2; 2 * s <= max_parent_size; ++s)
    for (int q = 1; 2 * q <= s; ++q) out.push_back({RealFormKind::Sp_pq, s - q, q});
  // Even orthogonal rows need a semisimple parent: so(2) is abelian and the
  // table's definiteness statements are empty for it, so p+q starts at 4.
  for (int s = 4; s <= max_parent_size; s += 2)
    for (int q = 1; 2 * q <= s; ++q) out.push_back({RealFormKind::SO_pq_even, s - q, q});
  for (int m = 2; 2 * m <= max_parent_size; ++m) out.push_back({RealFormKind::SO_star, m, 0});
  return out;
}

CElem bracket(const CElem& a, const CElem& b) {
  return {commutator(a.re, b.re) - commutator(a.im, b.im),
          commutator(a.re, b.im) + commutator(a.im, b.re)};
}

namespace {

CElem sandwich(const RatMat& a, const CElem& z, const RatMat& b) {
  return {a * z.re * b, a * z.im * b};
}

}  // namespace

CElem apply_involution(const RealFormDescriptor& f, Involution which, const CElem& z) {
  validate(f);
  if (which == Involution::rho) return -(z.conj().transpose());
  if (which == Involution::tau) {
    switch (f.kind) {
      case RealFormKind::SL_R: return z.conj();
      case RealFormKind::SU_star: return -sandwich(mat_J(f.a), z.conj(), mat_J(f.a));
      case RealFormKind::SU_pq: {
        const RatMat i = mat_I(f.a, f.b);
        return -sandwich(i, z.conj().transpose(), i);
      }
      case RealFormKind::SO_pq_odd:
      case RealFormKind::SO_pq_even: {
        const RatMat i = mat_I(f.a, f.b);
        return sandwich(i, z.conj(), i);
      }
      case RealFormKind::Sp_R: return z.conj();
      case RealFormKind::Sp_pq: {
        const RatMat k = mat_K(f.a, f.b);
        return -sandwich(k, z.conj().transpose(), k);
      }
      case RealFormKind::SO_star: return -sandwich(mat_J(f.a), z.conj(), mat_J(f.a));
    }
    throw internal_error("unknown real form kind");
  }
  // sigma, and theta as its restriction to the compact form
  switch (f.kind) {
    case RealFormKind::SL_R: return -z.transpose();
    case RealFormKind::SU_star: return sandwich(mat_J(f.a), z.transpose(), mat_J(f.a));
    case RealFormKind::SU_pq: {
      const RatMat i = mat_I(f.a, f.b);
      return sandwich(i, z, i);
    }
    case RealFormKind::SO_pq_odd:
    case RealFormKind::SO_pq_even: {
      const RatMat i = mat_I(f.a, f.b);
      return sandwich(i, z, i);
    }
    case RealFormKind::Sp_R: return -sandwich(mat_J(f.a), z, mat_J(f.a));
    case RealFormKind::Sp_pq: {
      const RatMat k = mat_K(f.a, f.b);
      return sandwich(k, z, k);
    }
    case RealFormKind::SO_star: return -sandwich(mat_J(f.a), z, mat_J(f.a));
  }
  throw internal_error("unknown real form kind");
}

namespace {

const RatMat& cached_killing_gram(const AlgebraDescriptor& d, const AlgebraBasis& basis) {
  static std::map<std::pair<int, int>, RatMat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(static_cast<int>(d.family), d.n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, killing_gram(basis).gram).first;
  return it->second;
}

using Vec = std::vector<Rational>;

struct Ctx {
  RealFormDescriptor form;
  AlgebraBasis basis;
  SpanSolver solver;
  RatMat gram;
  int d;
  std::vector<CElem> doubled;  // e_0..e_{d-1}, i e_0..i e_{d-1}

  explicit Ctx(const RealFormDescriptor& f)
      : form(f),
        basis(standard_basis(f.parent())),
        solver(basis.elements),
        gram(cached_killing_gram(f.parent(), basis)),
        d(basis.dimension()) {
    doubled.reserve(static_cast<size_t>(2 * d));
    for (const auto& e : basis.elements) doubled.push_back(CElem::real(e));
    for (const auto& e : basis.elements) doubled.push_back(CElem::imag(e));
  }

  std::optional<Vec> try_coords(const CElem& z) const {
    auto a = solver.coords(z.re);
    auto b = solver.coords(z.im);
    if (!a || !b) return std::nullopt;
    Vec out(static_cast<size_t>(2 * d));
    for (int k = 0; k < d; ++k) {
      out[static_cast<size_t>(k)] = (*a)[static_cast<size_t>(k)];
      out[static_cast<size_t>(d + k)] = (*b)[static_cast<size_t>(k)];
    }
    return out;
  }

  Vec coords(const CElem& z) const {
    auto c = try_coords(z);
    require(c.has_value(), "element outside algebra");
    return *c;
  }

  CElem from_coords(const Vec& c) const {
    const int m = matrix_size(form.parent());
    CElem z{RatMat(m, m), RatMat(m, m)};
    for (int k = 0; k < d; ++k) {
      if (!c[static_cast<size_t>(k)].is_zero())
        z.re = z.re + basis.elements[static_cast<size_t>(k)].scaled(c[static_cast<size_t>(k)]);
      if (!c[static_cast<size_t>(d + k)].is_zero())
        z.im = z.im + basis.elements[static_cast<size_t>(k)].scaled(c[static_cast<size_t>(d + k)]);
    }
    return z;
  }

  // Killing form of the complexified parent viewed as a real algebra,
  // B_R = 2 Re B_C, on doubled coordinates.
  Rational b_real(const Vec& x, const Vec& y) const {
    Rational acc(0);
    for (int i = 0; i < d; ++i) {
      if (x[static_cast<size_t>(i)].is_zero() && x[static_cast<size_t>(d + i)].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const Rational& g = gram.at(i, j);
        if (g.is_zero()) continue;
        acc += (x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] -
                x[static_cast<size_t>(d + i)] * y[static_cast<size_t>(d + j)]) *
               g;
      }
    }
    return acc + acc;
  }

  // 2d x 2d matrix of an involution in doubled coordinates.
  RatMat involution_matrix(Involution which) const {
    RatMat m(2 * d, 2 * d);
    for (int j = 0; j < 2 * d; ++j) {
      Vec col = coords(apply_involution(form, which, doubled[static_cast<size_t>(j)]));
      for (int i = 0; i < 2 * d; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
    }
    return m;
  }
};

std::vector<Vec> nullspace(RatMat m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_of_col(static_cast<size_t>(cols), -1);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int k = 0; k < cols; ++k) {
      Rational t = m.at(row, k);
      m.at(row, k) = m.at(sel, k);
      m.at(sel, k) = t;
    }
    const Rational inv = m.at(row, col).inv();
    for (int k = 0; k < cols; ++k) m.at(row, k) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (int k = 0; k < cols; ++k) m.at(i, k) -= f * m.at(row, k);
    }
    pivot_of_col[static_cast<size_t>(col)] = row;
    ++row;
  }
  std::vector<Vec> out;
  for (int freec = 0; freec < cols; ++freec) {
    if (pivot_of_col[static_cast<size_t>(freec)] >= 0) continue;
    Vec v(static_cast<size_t>(cols));
    v[static_cast<size_t>(freec)] = Rational(1);
    for (int c = 0; c < cols; ++c) {
      const int p = pivot_of_col[static_cast<size_t>(c)];
      if (p >= 0) v[static_cast<size_t>(c)] = -m.at(p, freec);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Membership of coordinate vectors in the span of a vector list.
class VecSpan {
 public:
  explicit VecSpan(const std::vector<Vec>& vs) {
    if (vs.empty()) return;
    std::vector<RatMat> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
      RatMat r(1, static_cast<int>(v.size()));
      for (size_t j = 0; j < v.size(); ++j) r.at(0, static_cast<int>(j)) = v[j];
      rows.push_back(std::move(r));
    }
    solver_.emplace(rows);
  }

  bool contains(const Vec& v) const {
    if (!solver_) {
      for (const auto& x : v)
        if (!x.is_zero()) return false;
      return true;
    }
    RatMat r(1, static_cast<int>(v.size()));
    for (size_t j = 0; j < v.size(); ++j) r.at(0, static_cast<int>(j)) = v[j];
    return solver_->coords(r).has_value();
  }

 private:
  std::optional<SpanSolver> solver_;
};

RatMat stack(const RatMat& a, const RatMat& b) {
  RatMat m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

RatMat minus_identity_shifted(RatMat m, const Rational& s) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) -= s;
  return m;
}

struct Eigenspaces {
  std::vector<Vec> h, m, im, ih;
};

Eigenspaces split_eigenspaces(const RatMat& rho_m, const RatMat& tau_m) {
  Eigenspaces e;
  auto solve = [&](int s_rho, int s_tau) {
    return nullspace(stack(minus_identity_shifted(rho_m, Rational(s_rho)),
                           minus_identity_shifted(tau_m, Rational(s_tau))));
  };
  e.h = solve(1, 1);
  e.m = solve(-1, 1);
  e.im = solve(1, -1);
  e.ih = solve(-1, -1);
  return e;
}

bool brackets_included(const Ctx& ctx, const std::vector<Vec>& xs, const std::vector<Vec>& ys,
                       const VecSpan& target, bool symmetric_pairs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    const CElem xi = ctx.from_coords(xs[i]);
    for (size_t j = symmetric_pairs ? i : 0; j < ys.size(); ++j) {
      const CElem yj = ctx.from_coords(ys[j]);
      const CElem br = bracket(xi, yj);
      auto c = ctx.try_coords(br);
      if (!c || !target.contains(*c)) return false;
    }
  }
  return true;
}

Definiteness restricted_definiteness(const Ctx& ctx, const std::vector<Vec>& span,
                                     bool negate, const RatMat* op) {
  const int k = static_cast<int>(span.size());
  RatMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec rhs = span[static_cast<size_t>(j)];
      if (op) {
        Vec img(rhs.size());
        for (int r = 0; r < op->rows(); ++r) {
          Rational acc(0);
          for (int c = 0; c < op->cols(); ++c)
            if (!op->at(r, c).is_zero()) acc += op->at(r, c) * rhs[static_cast<size_t>(c)];
          img[static_cast<size_t>(r)] = acc;
        }
        rhs = std::move(img);
      }
      Rational v = ctx.b_real(span[static_cast<size_t>(i)], rhs);
      g.at(i, j) = negate ? -v : v;
    }
  return classify_gram(g);
}

}  // namespace

RowReport verify_row(const RealFormDescriptor& f) {
  validate(f);
  Ctx ctx(f);
  RowReport rep;
  rep.form = f;
  auto add = [&](const std::string& name, bool pass) { rep.checks.push_back({name, pass}); };

  const RatMat rho_m = ctx.involution_matrix(Involution::rho);
  const RatMat tau_m = ctx.involution_matrix(Involution::tau);
  const RatMat sig_m = ctx.involution_matrix(Involution::sigma);
  const RatMat id = RatMat::identity(2 * ctx.d);

  add("rho_squared_id", rho_m * rho_m == id);
  add("tau_squared_id", tau_m * tau_m == id);
  add("sigma_squared_id", sig_m * sig_m == id);
  add("sigma_equals_rho_tau", rho_m * tau_m == sig_m);
  add("rho_tau_commute", rho_m * tau_m == tau_m * rho_m);

  bool rho_anti = true, tau_anti = true, sig_lin = true, preserve = true;
  for (const auto& z : ctx.doubled) {
    const CElem iz = z.times_i();
    const CElem rz = apply_involution(f, Involution::rho, z);
    const CElem tz = apply_involution(f, Involution::tau, z);
    const CElem sz = apply_involution(f, Involution::sigma, z);
    rho_anti = rho_anti && apply_involution(f, Involution::rho, iz) == -(rz.times_i());
    tau_anti = tau_anti && apply_involution(f, Involution::tau, iz) == -(tz.times_i());
    sig_lin = sig_lin && apply_involution(f, Involution::sigma, iz) == sz.times_i();
    preserve = preserve && ctx.try_coords(rz).has_value() && ctx.try_coords(tz).has_value() &&
               ctx.try_coords(sz).has_value();
  }
  add("rho_antilinear", rho_anti);
  add("tau_antilinear", tau_anti);
  add("sigma_linear", sig_lin);
  add("involutions_preserve_algebra", preserve);

  const std::vector<Vec> u = nullspace(minus_identity_shifted(rho_m, Rational(1)));
  add("compact_form_dim", static_cast<int>(u.size()) == ctx.d);
  add("compact_killing_negative",
      !u.empty() && restricted_definiteness(ctx, u, false, nullptr) == Definiteness::negative);

  std::vector<Vec> full;
  full.reserve(static_cast<size_t>(2 * ctx.d));
  for (int k = 0; k < 2 * ctx.d; ++k) {
    Vec v(static_cast<size_t>(2 * ctx.d));
    v[static_cast<size_t>(k)] = Rational(1);
    full.push_back(std::move(v));
  }
  add("rho_cartan_property",
      restricted_definiteness(ctx, full, true, &rho_m) == Definiteness::positive);
  // On the real form g^tau the Cartan involution is sigma (= rho there), so
  // -B(X, sigma Y) restricted to g^tau is the positive definite form B_theta.
  const std::vector<Vec> g0 = nullspace(minus_identity_shifted(tau_m, Rational(1)));
  add("b_theta_positive_on_real_form",
      static_cast<int>(g0.size()) == ctx.d &&
          restricted_definiteness(ctx, g0, true, &sig_m) == Definiteness::positive);

  VecSpan u_span(u);
  bool theta_pres = true;
  for (const auto& v : u) {
    Vec img(v.size());
    for (int r = 0; r < sig_m.rows(); ++r) {
      Rational acc(0);
      for (int c = 0; c < sig_m.cols(); ++c)
        if (!sig_m.at(r, c).is_zero()) acc += sig_m.at(r, c) * v[static_cast<size_t>(c)];
      img[static_cast<size_t>(r)] = acc;
    }
    theta_pres = theta_pres && u_span.contains(img);
  }
  add("theta_preserves_compact", theta_pres);

  Eigenspaces eig = split_eigenspaces(rho_m, tau_m);
  rep.eigendims = {static_cast<int>(eig.h.size()), static_cast<int>(eig.m.size()),
                   static_cast<int>(eig.im.size()), static_cast<int>(eig.ih.size())};
  add("eigenspace_dims_sum",
      rep.eigendims[0] + rep.eigendims[1] + rep.eigendims[2] + rep.eigendims[3] == 2 * ctx.d);

  VecSpan h_span(eig.h), m_span(eig.m);
  add("bracket_hh_in_h", brackets_included(ctx, eig.h, eig.h, h_span, true));
  add("bracket_hm_in_m", brackets_included(ctx, eig.h, eig.m, m_span, false));
  add("bracket_mm_in_h", brackets_included(ctx, eig.m, eig.m, h_span, true));

  std::vector<Vec> h_ih = eig.h;
  h_ih.insert(h_ih.end(), eig.ih.begin(), eig.ih.end());
  VecSpan h_ih_span(h_ih);
  const std::vector<Vec> sig_fix = nullspace(minus_identity_shifted(sig_m, Rational(1)));
  bool fixed_ok = sig_fix.size() == h_ih.size();
  for (const auto& v : sig_fix) fixed_ok = fixed_ok && h_ih_span.contains(v);
  add("sigma_fixed_is_h_plus_ih", fixed_ok);

  rep.compact_dim = rep.eigendims[0];
  rep.expected_compact_dim = expected_maximal_compact_dim(f);
  add("maximal_compact_matches_closed_form", rep.compact_dim == rep.expected_compact_dim);

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

DecompositionReport cartan_decomposition(const RealFormDescriptor& f) {
  validate(f);
  Ctx ctx(f);
  const RatMat rho_m = ctx.involution_matrix(Involution::rho);
  const RatMat tau_m = ctx.involution_matrix(Involution::tau);
  const RatMat sig_m = ctx.involution_matrix(Involution::sigma);
  Eigenspaces eig = split_eigenspaces(rho_m, tau_m);

  DecompositionReport rep;
  auto lift = [&](const std::vector<Vec>& vs, std::vector<CElem>& out) {
    for (const auto& v : vs) out.push_back(ctx.from_coords(v));
  };
  lift(eig.h, rep.h);
  lift(eig.m, rep.m);
  lift(eig.im, rep.im);
  lift(eig.ih, rep.ih);
  rep.dims = {static_cast<int>(eig.h.size()), static_cast<int>(eig.m.size()),
              static_cast<int>(eig.im.size()), static_cast<int>(eig.ih.size())};
  rep.dims_sum_ok = rep.dims[0] + rep.dims[1] + rep.dims[2] + rep.dims[3] == 2 * ctx.d;

  VecSpan h_span(eig.h), m_span(eig.m);
  rep.brackets_ok = brackets_included(ctx, eig.h, eig.h, h_span, true) &&
                    brackets_included(ctx, eig.h, eig.m, m_span, false) &&
                    brackets_included(ctx, eig.m, eig.m, h_span, true);

  std::vector<Vec> h_ih = eig.h;
  h_ih.insert(h_ih.end(), eig.ih.begin(), eig.ih.end());
  VecSpan h_ih_span(h_ih);
  const std::vector<Vec> sig_fix = nullspace(minus_identity_shifted(sig_m, Rational(1)));
  rep.sigma_fixed_matches = sig_fix.size() == h_ih.size();
  for (const auto& v : sig_fix) rep.sigma_fixed_matches = rep.sigma_fixed_matches && h_ih_span.contains(v);
  return rep;
}

int maximal_compact_dim(const RealFormDescriptor& f) { return cartan_decomposition(f).dims[0]; }

int expected_maximal_compact_dim(const RealFormDescriptor& f) {
  validate(f);
  switch (f.kind) {
    case RealFormKind::SL_R: return f.a * (f.a - 1) / 2;
    case RealFormKind::SU_star: return f.a * (2 * f.a + 1);
    case RealFormKind::SU_pq: return f.a * f.a + f.b * f.b - 1;
    case RealFormKind::SO_pq_odd:
    case RealFormKind::SO_pq_even: return f.a * (f.a - 1) / 2 + f.b * (f.b - 1) / 2;
    case RealFormKind::Sp_R: return f.a * f.a;
    case RealFormKind::Sp_pq: return f.a * (2 * f.a + 1) + f.b * (2 * f.b + 1);
    case RealFormKind::SO_star: return f.a * f.a;
  }
  throw internal_error("unknown real form kind");
}

bool has_split_cartan_row(const RealFormDescriptor& f) {
  switch (f.kind) {
    case RealFormKind::SL_R:
    case RealFormKind::Sp_R: return true;
    case RealFormKind::SO_pq_odd: return f.a - f.b == 1 || f.b - f.a == 1;
    case RealFormKind::SO_pq_even: return f.a == f.b && f.a >= 2;
    default: return false;
  }
}

std::vector<CElem> split_cartan(const RealFormDescriptor& f) {
  validate(f);
  require(has_split_cartan_row(f), "not a split row");
  std::vector<CElem> out;
  if (f.kind == RealFormKind::SL_R || f.kind == RealFormKind::Sp_R) {
    for (const auto& h : standard_cartan(f.parent())) out.push_back(CElem::real(h));
    return out;
  }
  const int m = matrix_size(f.parent());
  const int k = f.a < f.b ? f.a : f.b;
  for (int i = 0; i < k; ++i) {
    RatMat a(m, m);
    a.at(i, f.a + i) = Rational(1);
    a.at(f.a + i, i) = Rational(-1);
    out.push_back(CElem::imag(a));
  }
  return out;
}

bool split_cartan_positive(const RealFormDescriptor& f) {
  const std::vector<CElem> fam = split_cartan(f);
  if (static_cast<int>(fam.size()) != algebra_rank(f.parent())) return false;
  Ctx ctx(f);
  std::vector<Vec> coords;
  coords.reserve(fam.size());
  for (const auto& z : fam) {
    if (apply_involution(f, Involution::tau, z) != z) return false;
    auto c = ctx.try_coords(z);
    if (!c) return false;
    coords.push_back(*c);
  }
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      if (!bracket(fam[i], fam[j]).is_zero()) return false;
  const int k = static_cast<int>(coords.size());
  RatMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g.at(i, j) = ctx.b_real(coords[static_cast<size_t>(i)], coords[static_cast<size_t>(j)]);
  return classify_gram(g) == Definiteness::positive;
}

}  // namespace hitchin
