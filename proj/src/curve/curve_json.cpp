#include "trvoros/curve/curve_json.hpp"

#include <string>

namespace trv {

namespace {

Q coefficient(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Q(v.get<long>());
  throw InvalidCurveDocument(where + ": coefficients must be integers or \"P/Q\" strings");
}

PolynomialQ polynomial(const nlohmann::json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw InvalidCurveDocument(std::string("missing field ") + key);
    return PolynomialQ(std::vector<Q>{1});
  }
  const auto& m = doc[key];
  if (!m.is_object()) throw InvalidCurveDocument(std::string(key) + " must map exponents to coefficients");
  std::vector<Q> c;
  for (auto it = m.begin(); it != m.end(); ++it) {
    std::size_t pos = 0;
    int e = -1;
    try {
      e = std::stoi(it.key(), &pos);
    } catch (const std::exception&) {
    }
    if (e < 0 || pos != it.key().size()) throw InvalidCurveDocument(std::string(key) + ": bad exponent \"" + it.key() + "\"");
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1);
    c[e] = coefficient(it.value(), key);
  }
  PolynomialQ p(c);
  if (p.is_zero_poly()) throw InvalidCurveDocument(std::string(key) + " is the zero polynomial");
  return p;
}

}  // namespace

SpectralCurve curve_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidCurveDocument("curve document must be a JSON object");
  RationalFunctionQ x(polynomial(doc, "x_num", true), polynomial(doc, "x_den", false));
  RationalFunctionQ y(polynomial(doc, "y_num", true), polynomial(doc, "y_den", false));
  CurveParams p;
  if (doc.contains("params")) {
    const auto& pj = doc["params"];
    if (!pj.is_object()) throw InvalidCurveDocument("params must be an object");
    if (pj.contains("lambda")) p.lambda = coefficient(pj["lambda"], "params.lambda");
    if (pj.contains("t")) p.t = coefficient(pj["t"], "params.t");
    if (pj.contains("nu")) p.nu = coefficient(pj["nu"], "params.nu");
  }
  return make_custom(x, y, p);
}

}  // namespace trv
