#include "cubicrig/monomial.hpp"

namespace cubicrig {

namespace {

void append_power(std::string& out, const std::string& var, std::uint32_t e) {
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

bool append_monomial(std::string& out, const Monomial& m, const VarNames& names) {
  if (m.ex == 0 && m.ey == 0) return false;
  if (m.ex > 0) append_power(out, names.x, m.ex);
  if (m.ey > 0) {
    if (m.ex > 0) out += '*';
    append_power(out, names.y, m.ey);
  }
  return true;
}

std::string degree_to_string(long deg) {
  return deg == kMinusInfinity ? std::string("-inf") : std::to_string(deg);
}

}  // namespace cubicrig
