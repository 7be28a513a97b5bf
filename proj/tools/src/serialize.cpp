#include "serialize.hpp"

#include <stdexcept>

namespace qcarlitz::cli {

namespace {

Json coefficients(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

Poly poly_from_json(const Json& list) {
  if (!list.is_array()) throw std::invalid_argument("coefficient list expected");
  std::vector<Rational> coeffs;
  for (const auto& c : list) coeffs.push_back(Rational::parse(c.get<std::string>()));
  return Poly::from_coefficients(coeffs);
}

}  // namespace

Json to_json(const RatFunc& value) {
  Json out;
  out["num"] = coefficients(value.numerator());
  out["den"] = coefficients(value.denominator());
  return out;
}

RatFunc ratfunc_from_json(const Json& value) {
  return RatFunc::normalize(poly_from_json(value.at("num")), poly_from_json(value.at("den")));
}

Json to_json(const IdentityParams& params) {
  Json out;
  out["n"] = params.n;
  out["w"] = params.w;
  out["y"] = params.y;
  return out;
}

Json to_json(const Padic& value) {
  Json out;
  out["value"] = value.to_string();
  out["precision"] = value.precision();
  out["valuation"] = value.valuation();
  return out;
}

}  // namespace qcarlitz::cli
