#include "hitchin/battery.hpp"

#include <chrono>
#include <map>
#include <set>
#include <utility>

#include "hitchin/curves.hpp"
#include "hitchin/divisors.hpp"
#include "hitchin/json_io.hpp"
#include "hitchin/prng.hpp"

namespace hitchin {

namespace {

void check(SuiteResult& s, bool pass, const std::string& label) {
  ++s.checks;
  if (!pass) {
    ++s.failures;
    s.notes.push_back("FAIL " + label);
  }
}

std::string tag(const GroupDescriptor& g, int genus) {
  return g.display() + " g=" + std::to_string(genus);
}

}  // namespace

std::string mutation_name(Mutation m) {
  return m == Mutation::pfaffian_sign ? "pfaffian-sign" : "none";
}

Mutation parse_mutation(const std::string& s) {
  if (s.empty() || s == "none") return Mutation::none;
  if (s == "pfaffian-sign") return Mutation::pfaffian_sign;
  throw domain_error("unknown mutation: " + s);
}

SuiteResult dimension_identity() {
  SuiteResult s{"dimension_identity"};
  const GroupKind kinds[] = {GroupKind::GL, GroupKind::SL, GroupKind::Sp, GroupKind::SO_odd,
                             GroupKind::SO_even};
  for (GroupKind k : kinds)
    for (int n = 1; n <= 6; ++n) {
      if ((k == GroupKind::SL || k == GroupKind::SO_even) && n < 2) continue;
      const GroupDescriptor gd{k, n};
      for (int g = 2; g <= 5; ++g) {
        const DimensionReport rep = dimensions(gd, g);
        check(s, rep.moduli_dim == 2 * rep.base_dim && rep.half_dim_ok,
              tag(gd, g) + " moduli = 2 base");
        check(s, rep.degree_sum_ok, tag(gd, g) + " invariant-degree sum");
        if (k == GroupKind::GL)
          check(s, rep.base_dim == n * n * (g - 1) + 1, tag(gd, g) + " base closed form");
        else
          check(s, rep.base_dim == algebra_dimension(algebra_of(gd)) * (g - 1),
                tag(gd, g) + " base = dim(g) (g-1)");
      }
    }
  return s;
}

SuiteResult genus_tables() {
  SuiteResult s{"genus_tables"};
  for (int g = 2; g <= 5; ++g)
    for (int n = 1; n <= 5; ++n) {
      const CurveModel gl{{GroupKind::GL, n}, g, {}};
      check(s, spectral_genus(gl) == 1 + n * n * (g - 1), tag(gl.group, g) + " spectral genus");
      check(s, ramification_count(gl) == n * (2 * g - 2), tag(gl.group, g) + " ramification");
      if (n >= 2) {
        const CurveModel sl{{GroupKind::SL, n}, g, {}};
        check(s, spectral_genus(sl) == 1 + n * n * (g - 1), tag(sl.group, g) + " spectral genus");
      }
      const CurveModel sp{{GroupKind::Sp, n}, g, {}};
      check(s, spectral_genus(sp) == 1 + 4 * n * n * (g - 1), tag(sp.group, g) + " spectral genus");
      check(s, ramification_count(sp) == 2 * n * (2 * g - 2), tag(sp.group, g) + " ramification");
      const CurveModel so_odd{{GroupKind::SO_odd, n}, g, {}};
      check(s, spectral_genus(so_odd) == 1 + 4 * n * n * (g - 1),
            tag(so_odd.group, g) + " spectral genus");
      if (n >= 2) {
        const CurveModel so_even{{GroupKind::SO_even, n}, g, {}};
        check(s, spectral_genus(so_even) == 1 + 4 * n * n * (g - 1),
              tag(so_even.group, g) + " virtual genus");
        check(s, ramification_count(so_even) == n * (2 * g - 2),
              tag(so_even.group, g) + " pfaffian zero count");
        const GenusReport rep = so_even_desingularization(n, g);
        check(s, rep.desing_genus && *rep.desing_genus == 1 + 2 * n * (2 * n - 1) * (g - 1),
              tag(so_even.group, g) + " desingularized genus");
        check(s, rep.quotient_genus && *rep.quotient_genus == 1 + n * (2 * n - 1) * (g - 1),
              tag(so_even.group, g) + " quotient genus");
        check(s, rep.prym_dim && *rep.prym_dim == n * (2 * n - 1) * (g - 1),
              tag(so_even.group, g) + " prym dimension");
        check(s, rep.notes.find("n(2n-1)(g-1)") != std::string::npos,
              tag(so_even.group, g) + " quotient-genus discrepancy flagged");
      }
    }
  check(s, quotient_genus_ramified(17, 8) == 7, "quotient genus (17, 8)");
  check(s, quotient_genus_ramified(3, 0) == 2, "quotient genus (3, 0)");
  check(s, quotient_genus_ramified(5, 4) == 2, "quotient genus (5, 4)");
  return s;
}

SuiteResult prym_cross_check() {
  SuiteResult s{"prym_cross_check"};
  for (int g = 2; g <= 5; ++g) {
    for (int n = 1; n <= 5; ++n) {
      const GroupDescriptor gl{GroupKind::GL, n};
      check(s, spectral_genus({gl, g, {}}) == dimensions(gl, g).base_dim,
            tag(gl, g) + " jacobian = base");
    }
    for (int n = 2; n <= 5; ++n) {
      const GroupDescriptor sl{GroupKind::SL, n};
      const int prym = spectral_genus({sl, g, {}}) - g;
      check(s, prym == dimensions(sl, g).base_dim, tag(sl, g) + " prym = base");
    }
    for (int n = 1; n <= 5; ++n) {
      const int g_cover = 1 + 4 * n * n * (g - 1);
      const int branch = 4 * n * (g - 1);
      const int g_quot = quotient_genus_ramified(g_cover, branch);
      check(s, g_quot == 1 + n * (2 * n - 1) * (g - 1),
            "n=" + std::to_string(n) + " g=" + std::to_string(g) + " sigma-quotient genus");
      const int prym = g_cover - g_quot;
      const GroupDescriptor sp{GroupKind::Sp, n};
      check(s, prym == dimensions(sp, g).base_dim, tag(sp, g) + " prym = base");
      const GroupDescriptor so_odd{GroupKind::SO_odd, n};
      check(s, prym == dimensions(so_odd, g).base_dim, tag(so_odd, g) + " prym = base");
    }
    for (int n = 2; n <= 5; ++n) {
      const GenusReport rep = so_even_desingularization(n, g);
      const GroupDescriptor so_even{GroupKind::SO_even, n};
      check(s, rep.prym_dim && *rep.prym_dim == dimensions(so_even, g).base_dim,
            tag(so_even, g) + " prym = base");
    }
  }
  return s;
}

SuiteResult local_model() {
  SuiteResult s{"local_model"};
  const UniPoly w = UniPoly::variable();
  const UniPoly one = UniPoly::constant(Rational(1));

  const BiSpectralPolynomial p2(2, {-w, UniPoly()});
  const SpectralAlgebra a2(p2);
  check(s, a2.smooth && a2.disc == w.scaled(Rational(4)), "eta^2 - w discriminant 4w");

  const FractionalIdeal free2{a2, {elem_one(a2)}, Rational(0)};
  const PushforwardResult r_free = pushforward_line(free2);
  PolyMat phi_free(2, 2);
  phi_free.at(0, 1) = w;
  phi_free.at(1, 0) = one;
  check(s, r_free.higgs.phi == phi_free, "free module gives [[0,w],[1,0]]");
  check(s, r_free.basis.rows == PolyMat::identity(2), "free module basis is the power basis");
  check(s, r_free.warnings.empty(), "free module pushforward warns");
  check(s, char_poly(r_free.higgs.phi) == p2, "free module characteristic polynomial");

  const FractionalIdeal line = eigenline(a2, r_free.higgs);
  check(s, line.generators.size() == 2 && line.generators[0] == elem_one(a2) &&
               line.generators[1] == elem_eta(a2),
        "eigenline of the free-module matrix is 1, eta");
  const PushforwardResult r_back = pushforward_line(line);
  check(s, r_back.higgs.phi == r_free.higgs.phi && r_back.basis.rows == r_free.basis.rows,
        "eigenline inverts the free module");

  const FractionalIdeal ideal_eta{a2, {elem_eta(a2)}, Rational(0)};
  const PushforwardResult r_eta = pushforward_line(ideal_eta);
  PolyMat phi_eta(2, 2);
  phi_eta.at(0, 1) = one;
  phi_eta.at(1, 0) = w;
  PolyMat basis_eta(2, 2);
  basis_eta.at(0, 0) = w;
  basis_eta.at(1, 1) = one;
  check(s, r_eta.higgs.phi == phi_eta, "(eta) gives [[0,1],[w,0]]");
  check(s, r_eta.basis.rows == basis_eta, "(eta) canonical basis w, eta");
  check(s, char_poly(r_eta.higgs.phi) == p2, "(eta) characteristic polynomial");
  const PushforwardResult r_eta2 = pushforward_line(eigenline(a2, r_eta.higgs));
  check(s, r_eta2.higgs.phi == r_eta.higgs.phi && r_eta2.basis.rows == r_eta.basis.rows,
        "(eta) round trip is idempotent");

  const BiSpectralPolynomial p3(3, {one, w, UniPoly()});
  const SpectralAlgebra a3(p3);
  check(s, a3.smooth, "eta^3 + w eta + 1 smooth");
  const PushforwardResult r3 = pushforward_line(FractionalIdeal{a3, {elem_one(a3)}, Rational(0)});
  check(s, r3.higgs.phi == companion(p3), "cubic free module is the companion matrix");
  check(s, char_poly(r3.higgs.phi) == p3, "cubic characteristic polynomial");
  const PushforwardResult r3b = pushforward_line(eigenline(a3, r3.higgs));
  check(s, r3b.higgs.phi == r3.higgs.phi && r3b.basis.rows == r3.basis.rows,
        "cubic round trip is idempotent");
  return s;
}

SuiteResult correspondence_roundtrip(std::uint64_t seed) {
  SuiteResult s{"correspondence_roundtrip"};
  const UniPoly w = UniPoly::variable();

  const SpectralAlgebra split_branch(BiSpectralPolynomial(2, {-(w * w), UniPoly()}));
  check(s, !split_branch.disc.is_zero() && !split_branch.smooth,
        "eta^2 - w^2 rejected, discriminant not squarefree");
  const SpectralAlgebra non_reduced(BiSpectralPolynomial(2, {w * w, w.scaled(Rational(-2))}));
  check(s, non_reduced.disc.is_zero(), "(eta - w)^2 has zero discriminant");
  bool refused = false;
  try {
    eigenline(non_reduced, higgs_from_phi(companion(non_reduced.p)));
  } catch (const domain_error&) {
    refused = true;
  }
  check(s, refused, "eigenline refuses a non-reduced spectrum");

  Prng rng(seed);
  for (int n : {2, 3, 4}) {
    const std::string nt = "n=" + std::to_string(n);
    int made = 0, rejected = 0, guard = 0;
    while (made < 100 && guard < 10000) {
      ++guard;
      PolyMat phi(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<Rational> cs;
          const int d = static_cast<int>(rng.int_in(0, 3));
          for (int k = 0; k <= d; ++k) cs.push_back(rng.rational(9, 3));
          phi.at(i, j) = UniPoly(std::move(cs));
        }
      const HiggsMatrix h = higgs_from_phi(phi);
      const SpectralAlgebra alg(h.char_poly);
      if (!alg.smooth) {
        ++rejected;
        continue;
      }
      ++made;
      try {
        const PushforwardResult r1 = pushforward_line(eigenline(alg, h));
        check(s, char_poly(r1.higgs.phi) == h.char_poly, nt + " pushforward preserves char");
        const PushforwardResult r2 = pushforward_line(eigenline(alg, r1.higgs));
        check(s, r2.higgs.phi == r1.higgs.phi && r2.basis.rows == r1.basis.rows,
              nt + " round trip idempotent");
      } catch (const std::exception& e) {
        check(s, false, nt + " sample threw: " + std::string(e.what()));
      }
    }
    check(s, made == 100, nt + " sample quota");
    s.notes.push_back(nt + ": rejected " + std::to_string(rejected) +
                      " samples with non-squarefree discriminant");
  }
  return s;
}

namespace {

Rational pfaffian_all_plus(const RatMat& m, unsigned mask, std::map<unsigned, Rational>& memo) {
  if (mask == 0) return Rational(1);
  const auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const int i0 = __builtin_ctz(mask);
  Rational acc;
  for (int j = i0 + 1; j < m.rows(); ++j) {
    if (!(mask & (1u << j))) continue;
    const Rational& a = m.at(i0, j);
    if (!a.is_zero())
      acc += a * pfaffian_all_plus(m, mask & ~(1u << i0) & ~(1u << static_cast<unsigned>(j)), memo);
  }
  memo.emplace(mask, acc);
  return acc;
}

// Mutation target: expansion along the first row with the alternating sign
// dropped. A plain global sign flip would be invisible to the squared checks.
Rational battery_pfaffian(const RatMat& m, Mutation mutation) {
  if (mutation == Mutation::none) return pfaffian(m);
  std::map<unsigned, Rational> memo;
  return pfaffian_all_plus(m, (1u << static_cast<unsigned>(m.rows())) - 1u, memo);
}

}  // namespace

SuiteResult char_structure(std::uint64_t seed, Mutation mutation) {
  SuiteResult s{"char_structure"};
  if (mutation != Mutation::none) s.notes.push_back("mutation active: " + mutation_name(mutation));
  Prng rng(seed);
  std::vector<GroupDescriptor> groups;
  for (int n = 1; n <= 3; ++n) groups.push_back({GroupKind::GL, n});
  for (int n = 2; n <= 3; ++n) groups.push_back({GroupKind::SL, n});
  for (int n = 1; n <= 3; ++n) groups.push_back({GroupKind::Sp, n});
  for (int n = 1; n <= 3; ++n) groups.push_back({GroupKind::SO_odd, n});
  for (int n = 2; n <= 3; ++n) groups.push_back({GroupKind::SO_even, n});
  for (const auto& gd : groups) {
    const AlgebraBasis basis = standard_basis(algebra_of(gd));
    const int m = matrix_size(gd);
    int structure_fails = 0;
    for (int t = 0; t < 100; ++t) {
      RatMat x(m, m);
      for (const auto& e : basis.elements) x = x + e.scaled(rng.rational(9, 3));
      const UniPoly cp = char_poly(x);
      const CharStructureReport rep = validate_char_structure(gd, cp);
      if (!rep.ok) ++structure_fails;
      if (gd.kind == GroupKind::SO_even) {
        const Rational pf = battery_pfaffian(x, mutation);
        if (cp.coeff(0) != pf * pf) ++structure_fails;
        const Rational root = rep.pfaffian_sqrt ? rep.pfaffian_sqrt->coeff(0) : Rational(0);
        if (!rep.pfaffian_sqrt || (root != pf && root != -pf)) ++structure_fails;
      }
    }
    check(s, structure_fails == 0,
          gd.display() + " coefficient structure (" + std::to_string(structure_fails) +
              " failed sample checks)");
    if (gd.kind != GroupKind::GL) {
      RatMat x(m, m);
      for (const auto& e : basis.elements) x = x + e.scaled(rng.rational(9, 3));
      RatMat e00(m, m);
      e00.at(0, 0) = Rational(1);
      const CharStructureReport rep = validate_char_structure(gd, char_poly(x + e00));
      check(s, !rep.ok, gd.display() + " perturbed matrix slips through the shape checks");
    }
  }
  return s;
}

SuiteResult realform_table() {
  SuiteResult s{"realform_table"};
  const std::vector<RealFormDescriptor> forms = all_real_forms(6);
  std::set<RealFormKind> kinds;
  for (const auto& f : forms) kinds.insert(f.kind);
  check(s, kinds.size() == 8, "every named row kind occurs up to parent size 6");
  for (const auto& f : forms) {
    const RowReport rep = verify_row(f);
    for (const auto& c : rep.checks) check(s, c.pass, f.display() + " " + c.name);
  }
  s.notes.push_back(std::to_string(forms.size()) + " rows verified");
  return s;
}

SuiteResult norm_fixtures(const std::string& corpus_dir) {
  SuiteResult s{"norm_fixtures"};
  Json doc;
  try {
    doc = load_json_file(corpus_dir + "/norm_fixtures.json");
  } catch (const std::exception& e) {
    check(s, false, std::string("fixture corpus unreadable: ") + e.what());
    return s;
  }
  int fibers = 0, divisors = 0;
  for (const auto& fx : doc.at("fixtures")) {
    const bool fiber = fx.contains("w0");
    (fiber ? fibers : divisors) += 1;
    const std::string label =
        fx.value("label", "fixture " + std::to_string(fibers + divisors));
    try {
      const SpectralAlgebra alg(spectral_from(fx.at("p")));
      const Divisor d = [&]() {
        if (fiber) return fiber_divisor(alg, rational_from(fx.at("w0")));
        Divisor out{alg, {}};
        for (const auto& pt : fx.at("points"))
          add_point(out, {rational_from(pt.at("w")), rational_from(pt.at("eta"))},
                    pt.at("mult").get<long>());
        return out;
      }();
      const BaseDivisor nd = norm(d);
      std::map<Rational, long> expected;
      for (const auto& te : fx.at("expected_norm"))
        expected[rational_from(te.at("w"))] = te.at("mult").get<long>();
      check(s, nd.support == expected, label + " norm support");
      if (fiber)
        check(s, degree(d) == alg.degree() && degree(nd) == alg.degree(),
              label + " full fiber norms to n times the base point");
      check(s, degree(nd) == degree(d), label + " norm degree");
      if (alg.sigma_defined())
        check(s, norm(sigma_divisor(d)).support == nd.support, label + " norm sigma-invariant");
    } catch (const std::exception& e) {
      check(s, false, label + ": " + std::string(e.what()));
    }
  }
  check(s, fibers >= 50, "corpus holds at least 50 rational-fiber fixtures");
  check(s, divisors >= 20, "corpus holds explicit divisor fixtures");
  return s;
}

SuiteResult parity_fixtures(const std::string& corpus_dir) {
  SuiteResult s{"parity_fixtures"};
  Json doc;
  try {
    doc = load_json_file(corpus_dir + "/parity_fixtures.json");
  } catch (const std::exception& e) {
    check(s, false, std::string("fixture corpus unreadable: ") + e.what());
    return s;
  }
  int count = 0;
  for (const auto& fx : doc.at("fixtures")) {
    ++count;
    const std::string label = fx.value("label", "fixture " + std::to_string(count));
    try {
      std::optional<std::pair<int, int>> wd;
      if (fx.contains("w1")) wd = {fx.at("w1").get<int>(), fx.at("w2").get<int>()};
      const ParityReport rep =
          parity_invariant(fx.at("deg_L").get<int>(), fx.at("minus_one_points").get<int>(), wd);
      check(s, rep.pass == fx.at("expect_pass").get<bool>(), label + " parity verdict");
      if (wd) check(s, rep.toledo && *rep.toledo == wd->first - wd->second, label + " toledo");
    } catch (const std::exception& e) {
      check(s, false, label + ": " + std::string(e.what()));
    }
  }
  check(s, count >= 10, "corpus holds both passing and violating cases");
  return s;
}

bool BatteryResult::all_pass() const {
  if (suites.empty()) return false;
  for (const auto& s : suites)
    if (!s.pass()) return false;
  return true;
}

int BatteryResult::total_checks() const {
  int t = 0;
  for (const auto& s : suites) t += s.checks;
  return t;
}

int BatteryResult::total_failures() const {
  int t = 0;
  for (const auto& s : suites) t += s.failures;
  return t;
}

BatteryResult run_all(std::uint64_t seed, const std::string& corpus_dir, Mutation mutation,
                      const std::function<void(const SuiteResult&, long)>& observer) {
  BatteryResult out;
  const std::vector<std::function<SuiteResult()>> order = {
      [] { return dimension_identity(); },
      [] { return genus_tables(); },
      [] { return prym_cross_check(); },
      [] { return local_model(); },
      [seed] { return correspondence_roundtrip(seed); },
      [seed, mutation] { return char_structure(seed, mutation); },
      [] { return realform_table(); },
      [&corpus_dir] { return norm_fixtures(corpus_dir); },
      [&corpus_dir] { return parity_fixtures(corpus_dir); },
  };
  for (const auto& fn : order) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = fn();
    const auto t1 = std::chrono::steady_clock::now();
    if (observer)
      observer(r, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    out.suites.push_back(std::move(r));
  }
  return out;
}

}  // namespace hitchin
