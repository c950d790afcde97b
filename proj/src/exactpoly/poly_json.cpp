#include "cubicrig/poly_json.hpp"

namespace cubicrig {

nlohmann::json to_json(const BivarPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"ex", m.ex}, {"ey", m.ey}, {"coeff", c.get_str()}});
  return arr;
}

BivarPoly bivar_from_json(const nlohmann::json& j) {
  std::vector<std::pair<Monomial, mpz_class>> terms;
  for (const auto& t : j) {
    terms.push_back({Monomial{t.at("ex").get<std::uint32_t>(), t.at("ey").get<std::uint32_t>()},
                     mpz_class(t.at("coeff").get<std::string>())});
  }
  return BivarPoly::from_terms(terms);
}

nlohmann::json to_json(const ModBivarPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"ex", m.ex}, {"ey", m.ey}, {"coeff", std::to_string(c)}});
  return {{"modulus", p.modulus()}, {"terms", arr}};
}

ModBivarPoly mod_bivar_from_json(const nlohmann::json& j) {
  ModBivarPoly out(j.at("modulus").get<std::uint64_t>());
  for (const auto& t : j.at("terms")) {
    out.add_term(Monomial{t.at("ex").get<std::uint32_t>(), t.at("ey").get<std::uint32_t>()},
                 std::stoull(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace cubicrig
