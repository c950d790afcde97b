#pragma once

#include <climits>
#include <cstdint>
#include <string>

namespace cubicrig {

/// Degree of the zero polynomial.
inline constexpr long kMinusInfinity = LONG_MIN;

enum class Var { X, Y };

/// x^ex * y^ey
struct Monomial {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;

  [[nodiscard]] long total() const { return static_cast<long>(ex) + static_cast<long>(ey); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lex, descending: higher total degree first, ties broken by the
/// larger x-exponent. Iterating a term map with this comparator yields
/// canonical print order.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.ex > b.ex;
  }
};

/// Variable names used when printing. Polynomials in (A, B) or (T) reuse
/// the bivariate types with renamed slots.
struct VarNames {
  std::string x = "x";
  std::string y = "y";
};

/// Appends "x^3*y" style monomial text; returns false for the unit monomial.
bool append_monomial(std::string& out, const Monomial& m, const VarNames& names);

std::string degree_to_string(long deg);

}  // namespace cubicrig
