#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubicrig/monomial.hpp"

namespace cubicrig {

/// Dense univariate polynomial over Z, coefficients low to high. Trailing
/// zeros are always trimmed, so the zero polynomial is the empty vector.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  explicit ZPoly(const mpz_class& constant);

  static ZPoly monomial(const mpz_class& c, std::size_t e);

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] long degree() const { return c_.empty() ? kMinusInfinity : static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const { return c_; }
  [[nodiscard]] mpz_class coeff(std::size_t e) const { return e < c_.size() ? c_[e] : mpz_class(0); }
  [[nodiscard]] const mpz_class& leading() const { return c_.back(); }

  [[nodiscard]] mpz_class evaluate(const mpz_class& t) const;
  [[nodiscard]] std::uint64_t evaluate_mod(std::uint64_t t, std::uint64_t p) const;
  [[nodiscard]] ZPoly derivative() const;
  [[nodiscard]] mpz_class content() const;
  [[nodiscard]] ZPoly primitive_part() const;
  [[nodiscard]] std::size_t max_coeff_bits() const;
  [[nodiscard]] std::string to_string(const std::string& var = "y") const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const mpz_class& s);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator-(ZPoly a);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// a / b over Z, throwing InexactDivisionError unless b divides a.
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// Primitive gcd over Z[t] (positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Yun square-free decomposition: returns s_1, s_2, ... with
/// p = c * s_1 * s_2^2 * s_3^3 * ...; entries may be constant 1.
std::vector<ZPoly> squarefree_decomposition(const ZPoly& p);

/// Dense univariate polynomial over F_p (p < 2^32), coefficients low to high.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t e);

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] long degree() const { return c_.empty() ? kMinusInfinity : static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const { return c_; }
  [[nodiscard]] std::uint64_t coeff(std::size_t e) const { return e < c_.size() ? c_[e] : 0; }
  [[nodiscard]] std::uint64_t leading() const { return c_.back(); }
  [[nodiscard]] std::uint64_t evaluate(std::uint64_t t) const;
  [[nodiscard]] std::string to_string(const std::string& var = "y") const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator-(FpPoly a);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void trim();
  void check_ring(const FpPoly& o) const;
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

/// Quotient and remainder over F_p; divisor must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly divide_exact(const FpPoly& a, const FpPoly& b);
/// Monic gcd.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m);

/// Lagrange-free interpolation over F_p: the unique polynomial of degree
/// < points.size() through (points[i], values[i]).
FpPoly interpolate(std::uint64_t p, std::span<const std::uint64_t> points,
                   std::span<const std::uint64_t> values);

/// Exact interpolation over Q through integer nodes; throws
/// BoundViolationError if any coefficient is not an integer.
ZPoly interpolate_integer(std::span<const mpz_class> points, std::span<const mpz_class> values);

}  // namespace cubicrig
