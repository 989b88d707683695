#include "hitchin/json_io.hpp"

#include <fstream>

namespace hitchin {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw parse_error(std::string("field is not an integer: ") + key);
  return v.get<int>();
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Json json_of(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  const std::string s = string_value(j, "rational");
  try {
    return Rational::parse(s);
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

Json json_of(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(json_of(c));
  return arr;
}

UniPoly unipoly_from(const Json& j) {
  if (!j.is_array()) throw parse_error("polynomial must be an array of rationals");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from(e));
  return UniPoly(std::move(c));
}

Json json_of(const BiSpectralPolynomial& p) {
  Json coeffs = Json::array();
  for (int k = p.n() - 1; k >= 0; --k) coeffs.push_back(json_of(p.coeff(k)));
  return Json{{"n", p.n()}, {"coeffs", coeffs}};
}

BiSpectralPolynomial spectral_from(const Json& j) {
  const int n = int_field(j, "n");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw parse_error("coeffs must be an array");
  if (n < 1 || static_cast<int>(coeffs.size()) != n)
    throw parse_error("coeffs length must equal n");
  std::vector<UniPoly> desc;
  desc.reserve(coeffs.size());
  for (const auto& e : coeffs) desc.push_back(unipoly_from(e));
  return BiSpectralPolynomial::from_descending(n, std::move(desc));
}

Json json_of(const RatMat& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(json_of(m.at(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RatMat ratmat_from(const Json& j) {
  const int rows = int_field(j, "rows"), cols = int_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (rows < 0 || cols < 0) throw parse_error("matrix shape must be nonnegative");
  if (!entries.is_array() || static_cast<long long>(entries.size()) != 1LL * rows * cols)
    throw parse_error("entries length must equal rows*cols");
  RatMat m(rows, cols);
  size_t k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from(entries.at(k++));
  return m;
}

Json json_of(const PolyMat& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(json_of(m.at(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

PolyMat polymat_from(const Json& j) {
  const int rows = int_field(j, "rows"), cols = int_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (rows < 0 || cols < 0) throw parse_error("matrix shape must be nonnegative");
  if (!entries.is_array() || static_cast<long long>(entries.size()) != 1LL * rows * cols)
    throw parse_error("entries length must equal rows*cols");
  PolyMat m(rows, cols);
  size_t k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = unipoly_from(entries.at(k++));
  return m;
}

Json json_of(const AlgebraDescriptor& d) {
  return Json{{"family", family_name(d.family)}, {"n", d.n}};
}

AlgebraDescriptor algebra_from(const Json& j) {
  AlgebraDescriptor d{parse_family(string_value(field(j, "family"), "family")), int_field(j, "n")};
  validate(d);
  return d;
}

Json json_of(const RealFormDescriptor& f) {
  return Json{{"name", f.row_label()}, {"params", f.params()}};
}

RealFormDescriptor realform_from(const Json& j) {
  const Json& params = field(j, "params");
  if (!params.is_array()) throw parse_error("params must be an array of integers");
  std::vector<int> p;
  for (const auto& e : params) {
    if (!e.is_number_integer()) throw parse_error("params must be an array of integers");
    p.push_back(e.get<int>());
  }
  return parse_real_form(string_value(field(j, "name"), "name"), p);
}

Json json_of(const FractionalIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators) {
    Json coords = Json::array();
    for (const auto& c : g) coords.push_back(json_of(c));
    gens.push_back(coords);
  }
  return Json{{"p", json_of(ideal.algebra.p)}, {"generators", gens}, {"twist", json_of(ideal.twist)}};
}

FractionalIdeal ideal_from(const Json& j) {
  SpectralAlgebra alg(spectral_from(field(j, "p")));
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty()) throw parse_error("generators must be a nonempty array");
  std::vector<AlgebraElement> out;
  for (const auto& g : gens) {
    if (!g.is_array() || static_cast<int>(g.size()) != alg.degree())
      throw parse_error("each generator needs one coordinate per power of eta");
    AlgebraElement e;
    for (const auto& c : g) e.push_back(unipoly_from(c));
    out.push_back(std::move(e));
  }
  Rational twist(0);
  if (j.contains("twist")) twist = rational_from(j.at("twist"));
  FractionalIdeal ideal{std::move(alg), std::move(out), twist};
  validate(ideal);
  return ideal;
}

Json json_of(const HiggsMatrix& m) {
  return Json{{"n", m.n}, {"phi", json_of(m.phi)}, {"char", json_of(m.char_poly)}};
}

HiggsMatrix higgs_from(const Json& j) {
  PolyMat phi = polymat_from(field(j, "phi"));
  if (!phi.is_square() || phi.rows() < 1) throw parse_error("phi must be a nonempty square matrix");
  if (j.contains("n") && int_field(j, "n") != phi.rows())
    throw parse_error("n disagrees with the shape of phi");
  return higgs_from_phi(phi);
}

Json json_of(const Divisor& d) {
  Json pts = Json::array();
  for (const auto& [pt, m] : d.support)
    pts.push_back(Json{{"w", json_of(pt.w0)}, {"eta", json_of(pt.eta0)}, {"mult", m}});
  return Json{{"p", json_of(d.algebra.p)}, {"points", pts}};
}

Divisor divisor_from(const Json& j) {
  Divisor d{SpectralAlgebra(spectral_from(field(j, "p"))), {}};
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw parse_error("points must be an array");
  for (const auto& e : pts) {
    const Json& mult = field(e, "mult");
    if (!mult.is_number_integer()) throw parse_error("mult must be an integer");
    add_point(d, SpectralPoint{rational_from(field(e, "w")), rational_from(field(e, "eta"))},
              mult.get<long>());
  }
  return d;
}

}  // namespace hitchin
