#include "pfaff/serialize.hpp"

#include <stdexcept>

namespace pfaff {

Json to_json(const BiLaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"eq", e.q}, {"ew", e.w}, {"c", c}});
  return arr;
}

BiLaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  BiLaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("eq") || !term.contains("ew") || !term.contains("c")) {
      throw std::invalid_argument("polynomial term needs eq, ew and c");
    }
    const int eq = term.at("eq").get<int>();
    const int ew = term.at("ew").get<int>();
    const auto c = term.at("c").get<BiLaurentPoly::Coeff>();
    if (c == 0) throw std::invalid_argument("polynomial JSON stores a zero coefficient");
    if (p.coeff(eq, ew) != 0) throw std::invalid_argument("polynomial JSON repeats an exponent pair");
    p.add_term(c, eq, ew);
  }
  return p;
}

Json to_json(const KClass& c) {
  Json coeffs = Json::array();
  for (const auto& p : c.coeffs()) coeffs.push_back(to_json(p));
  return Json{{"basis", c.basis() == Basis::Q ? "Q" : "D"}, {"n", c.n()}, {"coeffs", coeffs}};
}

KClass kclass_from_json(const Json& j) {
  const std::string basis = j.at("basis").get<std::string>();
  if (basis != "Q" && basis != "D") throw std::invalid_argument("basis must be \"Q\" or \"D\"");
  std::vector<BiLaurentPoly> coeffs;
  for (const auto& p : j.at("coeffs")) coeffs.push_back(poly_from_json(p));
  return KClass(basis == "Q" ? Basis::Q : Basis::D, j.at("n").get<int>(), std::move(coeffs));
}

Json to_json(const PushforwardReport& r) {
  Json j{{"m", r.m},           {"p", r.p},
         {"bound", r.bound},   {"checked", r.checked},
         {"zero", r.zero},     {"nonzero", r.nonzero},
         {"pass", r.pass}};
  if (!r.pass) j["failure"] = r.failure;
  return j;
}

Json to_json(const LimitReport& r) {
  Json j{{"m", r.m},         {"k", r.k},
         {"bound", r.bound}, {"e_max", r.e_max},
         {"checked", r.checked}, {"members", r.members},
         {"pass", r.pass}};
  if (!r.pass) j["failure"] = r.failure;
  return j;
}

}  // namespace pfaff
