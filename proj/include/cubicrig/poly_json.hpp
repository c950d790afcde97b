#pragma once

#include <json.hpp>

#include "cubicrig/bivar_poly.hpp"
#include "cubicrig/mod_poly.hpp"

namespace cubicrig {

/// [{"ex":3,"ey":0,"coeff":"-2"}, ...] in canonical monomial order.
/// Coefficients are decimal strings so arbitrary precision survives.
nlohmann::json to_json(const BivarPoly& p);
BivarPoly bivar_from_json(const nlohmann::json& j);

/// {"modulus":p,"terms":[{"ex":..,"ey":..,"coeff":".."}]}
nlohmann::json to_json(const ModBivarPoly& p);
ModBivarPoly mod_bivar_from_json(const nlohmann::json& j);

}  // namespace cubicrig
