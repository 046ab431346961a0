#include "ter/json_io.hpp"

namespace ter {

Json to_json(const ConductanceVector& c) { return Json(c.values()); }

Json coeffs_to_json(const AlgebraElement& x) {
  Json obj = Json::object();
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(x.slot(k))) obj[x.monomial_at_slot(k).name()] = to_string(x.slot(k));
  return obj;
}

Json to_json(const AlgebraElement& x) {
  Json j;
  j["c"] = to_json(x.ambient());
  j["coeffs"] = coeffs_to_json(x);
  return j;
}

Json to_json(const LaurentElement& x) {
  Json j;
  j["c"] = to_json(x.ambient());
  Json obj = Json::object();
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x.slot(k).is_zero()) obj[x.monomial_at_slot(k).name()] = x.slot(k).to_string();
  j["coeffs"] = obj;
  return j;
}

Json to_json(const SubalgebraPoint& b) {
  Json j;
  j["c"] = to_json(b.ambient());
  Json rows = Json::array();
  for (const auto& r : b.rows()) rows.push_back(coeffs_to_json(r));
  j["basis"] = rows;
  j["genus"] = b.genus();
  return j;
}

ConductanceVector conductances_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("conductance vector must be a JSON array");
  std::vector<int> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("conductances must be integers");
    c.push_back(v.get<int>());
  }
  return ConductanceVector(c);
}

AlgebraElement coeffs_from_json(const ConductanceVector& c, const Json& coeffs) {
  if (!coeffs.is_object()) throw ParseError("coefficients must be a JSON object");
  AlgebraElement x(c);
  for (const auto& [key, value] : coeffs.items()) {
    Monomial mono = parse_monomial(key);
    if (!c.valid(mono)) throw ParseError("monomial " + key + " out of range for " + c.to_string());
    Rational q;
    if (value.is_string()) q = parse_rational(value.get<std::string>());
    else if (value.is_number_integer()) q = Rational(value.get<long>());
    else throw ParseError("coefficient of " + key + " must be a string or integer");
    x.at(mono) += q;
  }
  return x;
}

AlgebraElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("coeffs")) throw ParseError("element needs 'c' and 'coeffs'");
  return coeffs_from_json(conductances_from_json(j.at("c")), j.at("coeffs"));
}

SubalgebraPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("basis")) throw ParseError("point needs 'c' and 'basis'");
  ConductanceVector c = conductances_from_json(j.at("c"));
  if (!j.at("basis").is_array()) throw ParseError("'basis' must be an array");
  std::vector<AlgebraElement> rows;
  for (const auto& r : j.at("basis")) rows.push_back(coeffs_from_json(c, r));
  return SubalgebraPoint::make(c, rows);
}

}  // namespace ter
