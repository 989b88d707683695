#include "hitchin/invariants.hpp"

namespace hitchin {

std::string group_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "gl";
    case GroupKind::SL: return "sl";
    case GroupKind::Sp: return "sp";
    case GroupKind::SO_odd: return "so_odd";
    case GroupKind::SO_even: return "so_even";
  }
  throw internal_error("unknown group kind");
}

GroupKind parse_group(const std::string& s) {
  if (s == "gl") return GroupKind::GL;
  if (s == "sl") return GroupKind::SL;
  if (s == "sp") return GroupKind::Sp;
  if (s == "so_odd") return GroupKind::SO_odd;
  if (s == "so_even") return GroupKind::SO_even;
  throw domain_error("unknown group: '" + s + "'");
}

std::string GroupDescriptor::display() const {
  switch (kind) {
    case GroupKind::GL: return "GL(" + std::to_string(n) + ")";
    case GroupKind::SL: return "SL(" + std::to_string(n) + ")";
    case GroupKind::Sp: return "Sp(" + std::to_string(2 * n) + ")";
    case GroupKind::SO_odd: return "SO(" + std::to_string(2 * n + 1) + ")";
    case GroupKind::SO_even: return "SO(" + std::to_string(2 * n) + ")";
  }
  throw internal_error("unknown group kind");
}

void validate(const GroupDescriptor& g) {
  require(g.n >= 1, "group parameter must be positive");
  if (g.kind == GroupKind::SL || g.kind == GroupKind::SO_even)
    require(g.n >= 2, group_name(g.kind) + " needs parameter at least 2");
}

int matrix_size(const GroupDescriptor& g) {
  validate(g);
  return matrix_size(algebra_of(g));
}

AlgebraDescriptor algebra_of(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::GL: return {Family::gl, g.n};
    case GroupKind::SL: return {Family::sl, g.n};
    case GroupKind::Sp: return {Family::sp, g.n};
    case GroupKind::SO_odd: return {Family::so_odd, g.n};
    case GroupKind::SO_even: return {Family::so_even, g.n};
  }
  throw internal_error("unknown group kind");
}

std::vector<int> invariant_degrees(const GroupDescriptor& g) {
  validate(g);
  std::vector<int> out;
  switch (g.kind) {
    case GroupKind::GL:
      for (int d = 1; d <= g.n; ++d) out.push_back(d);
      break;
    case GroupKind::SL:
      for (int d = 2; d <= g.n; ++d) out.push_back(d);
      break;
    case GroupKind::Sp:
    case GroupKind::SO_odd:
      for (int d = 2; d <= 2 * g.n; d += 2) out.push_back(d);
      break;
    case GroupKind::SO_even:
      for (int d = 2; d <= 2 * g.n - 2; d += 2) out.push_back(d);
      out.push_back(g.n);
      break;
  }
  return out;
}

int section_space_dim(int d, int g) {
  require(g >= 2, "genus must be at least 2");
  require(d >= 0, "negative canonical power");
  if (d == 0) return 1;
  if (d == 1) return g;
  return (2 * d - 1) * (g - 1);
}

DimensionReport dimensions(const GroupDescriptor& g, int genus) {
  validate(g);
  require(genus >= 2, "genus must be at least 2");
  DimensionReport rep;
  rep.group = g;
  rep.genus = genus;
  rep.degrees = invariant_degrees(g);
  rep.base_dim = 0;
  for (int d : rep.degrees) rep.base_dim += section_space_dim(d, genus);
  if (g.kind == GroupKind::GL)
    rep.moduli_dim = 2 * g.n * g.n * (genus - 1) + 2;
  else
    rep.moduli_dim = 2 * rep.base_dim;
  rep.half_dim_ok = rep.moduli_dim == 2 * rep.base_dim;
  if (g.kind == GroupKind::GL) {
    rep.degree_sum_ok = rep.base_dim == g.n * g.n * (genus - 1) + 1;
  } else {
    int sum = 0;
    for (int d : rep.degrees) sum += 2 * d - 1;
    rep.degree_sum_ok = sum == algebra_dimension(algebra_of(g)) &&
                        rep.base_dim == algebra_dimension(algebra_of(g)) * (genus - 1);
  }
  return rep;
}

CharStructureReport validate_char_structure(const GroupDescriptor& g,
                                            const BiSpectralPolynomial& p) {
  validate(g);
  CharStructureReport rep;
  rep.group = g;
  const int n = p.n();
  require(n == matrix_size(g), "degree mismatch");
  auto add = [&](const std::string& name, bool pass) { rep.checks.push_back({name, pass}); };
  auto odd_vanish = [&]() {
    for (int k = 1; k < n; k += 2)
      if (!p.coeff(k).is_zero()) return false;
    return true;
  };
  switch (g.kind) {
    case GroupKind::GL:
      break;
    case GroupKind::SL:
      add("trace_coefficient_vanishes", p.coeff(n - 1).is_zero());
      break;
    case GroupKind::Sp:
      add("odd_coefficients_vanish", odd_vanish());
      break;
    case GroupKind::SO_odd: {
      add("constant_term_vanishes", p.coeff(0).is_zero());
      bool quotient_even = true;
      for (int k = 0; k < n; k += 2) quotient_even = quotient_even && p.coeff(k).is_zero();
      add("quotient_even_in_eta", quotient_even);
      break;
    }
    case GroupKind::SO_even: {
      add("odd_coefficients_vanish", odd_vanish());
      UniPoly root;
      const bool square = p.coeff(0).exact_sqrt(root);
      add("constant_term_square", square);
      if (square) rep.pfaffian_sqrt = root;
      break;
    }
  }
  rep.ok = true;
  for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
  return rep;
}

CharStructureReport validate_char_structure(const GroupDescriptor& g, const UniPoly& char_poly) {
  require(!char_poly.is_zero() && char_poly.leading().is_one(),
          "characteristic polynomial must be monic");
  const int n = char_poly.degree();
  require(n >= 1, "degree mismatch");
  std::vector<UniPoly> low;
  low.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) low.push_back(UniPoly::constant(char_poly.coeff(k)));
  return validate_char_structure(g, BiSpectralPolynomial(n, low));
}

Rational slope(long deg, long rank) {
  require(rank >= 1, "slope needs positive rank");
  return Rational(deg, rank);
}

int pushforward_degree(int deg_L, int n, int g) {
  require(n >= 1, "cover degree must be positive");
  require(g >= 2, "genus must be at least 2");
  return deg_L + (n * n - n) * (1 - g);
}

int toledo(int deg_W1, int deg_W2) { return deg_W1 - deg_W2; }

}  // namespace hitchin
