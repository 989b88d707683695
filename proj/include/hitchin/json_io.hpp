#pragma once
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hitchin/divisors.hpp"

namespace hitchin {

using Json = nlohmann::json;

// Input that does not match the interchange schema (distinct from domain
// errors so the CLI can map it to its own exit code).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

Json load_json_file(const std::string& path);

Json json_of(const Rational& r);
Rational rational_from(const Json& j);

Json json_of(const UniPoly& p);  // ascending coefficient strings
UniPoly unipoly_from(const Json& j);

Json json_of(const BiSpectralPolynomial& p);  // {"n", "coeffs" descending}
BiSpectralPolynomial spectral_from(const Json& j);

Json json_of(const RatMat& m);  // {"rows","cols","entries"} row-major
RatMat ratmat_from(const Json& j);

Json json_of(const PolyMat& m);
PolyMat polymat_from(const Json& j);

Json json_of(const AlgebraDescriptor& d);  // {"family","n"}
AlgebraDescriptor algebra_from(const Json& j);

Json json_of(const RealFormDescriptor& f);  // {"name","params"}
RealFormDescriptor realform_from(const Json& j);

Json json_of(const FractionalIdeal& ideal);  // {"p","generators","twist"}
FractionalIdeal ideal_from(const Json& j);

Json json_of(const HiggsMatrix& m);  // {"n","phi","char"}; char is recomputed on load
HiggsMatrix higgs_from(const Json& j);

Json json_of(const Divisor& d);  // {"p","points":[{"w","eta","mult"}]}
Divisor divisor_from(const Json& j);

}  // namespace hitchin
