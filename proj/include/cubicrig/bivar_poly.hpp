#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubicrig/monomial.hpp"
#include "cubicrig/upoly.hpp"

namespace cubicrig {

class ModBivarPoly;

/// Polynomial in x, y with arbitrary-precision integer coefficients.
///
/// Stored sparsely as a map from monomial to coefficient in graded-lex
/// descending order. No stored coefficient is ever zero, so structural
/// equality of the maps is polynomial equality.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, GradedLexDesc>;

  BivarPoly() = default;
  explicit BivarPoly(const mpz_class& constant);
  explicit BivarPoly(long constant) : BivarPoly(mpz_class(constant)) {}

  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(const mpz_class& c, std::uint32_t ex, std::uint32_t ey);
  /// Sums duplicate monomials and drops zeros.
  static BivarPoly from_terms(const std::vector<std::pair<Monomial, mpz_class>>& terms);
  /// Polynomial in y alone (placed in the y slot).
  static BivarPoly from_y(const ZPoly& p);
  /// Polynomial in x alone, i.e. p placed in the x slot.
  static BivarPoly from_x(const ZPoly& p);

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] mpz_class coefficient(std::uint32_t ex, std::uint32_t ey) const;

  [[nodiscard]] long deg_x() const;
  [[nodiscard]] long deg_y() const;
  [[nodiscard]] long total_degree() const;
  /// max over terms of wx*ex + wy*ey.
  [[nodiscard]] long weighted_degree(long wx, long wy) const;
  [[nodiscard]] std::size_t max_coeff_bits() const;

  /// Coefficient of x^e as a polynomial in y (zero when absent).
  [[nodiscard]] ZPoly coefficient_in_x(std::uint32_t e) const;
  /// Dense vector indexed by x-exponent 0..deg_x of y-polynomials.
  [[nodiscard]] std::vector<ZPoly> coefficients_in_x() const;

  [[nodiscard]] std::string to_string(const VarNames& names = {}) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const mpz_class& s);
  BivarPoly& operator*=(const BivarPoly& o);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator-(BivarPoly a);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const mpz_class& s) { return a *= s; }
  friend BivarPoly operator*(const mpz_class& s, BivarPoly a) { return a *= s; }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  /// True iff no zero coefficient is stored. Checked by the test suites.
  [[nodiscard]] bool is_canonical() const;

 private:
  friend BivarPoly multiply_schoolbook(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly multiply_kronecker(const BivarPoly& a, const BivarPoly& b);
  void add_term(const Monomial& m, const mpz_class& c);
  TermMap terms_;
};

/// Term-by-term product. Quadratic in the term counts.
BivarPoly multiply_schoolbook(const BivarPoly& a, const BivarPoly& b);
/// Product through Kronecker substitution into a single big integer
/// multiplication. Used automatically for large operands.
BivarPoly multiply_kronecker(const BivarPoly& a, const BivarPoly& b);

BivarPoly pow(const BivarPoly& base, unsigned e);

/// p with `var` replaced by `replacement`.
BivarPoly substitute(const BivarPoly& p, Var var, const BivarPoly& replacement);

BivarPoly partial_derivative(const BivarPoly& p, Var var);

/// Coefficientwise reduction into F_q. Throws NotPrimeError unless q is prime.
ModBivarPoly reduce_mod(const BivarPoly& p, std::uint64_t q);

/// Exact division of every coefficient by d; throws InexactDivisionError
/// naming the first monomial that is not divisible.
BivarPoly divide_coefficients_exact(const BivarPoly& p, const mpz_class& d);

mpz_class evaluate(const BivarPoly& p, const mpz_class& xv, const mpz_class& yv);
std::complex<long double> evaluate(const BivarPoly& p, std::complex<long double> xv,
                                   std::complex<long double> yv);

/// Nearest long double to v, valid far outside the double exponent range
/// of mpz_get_d.
long double to_long_double(const mpz_class& v);

/// Coefficients of p(x, y0) as a polynomial in x, low to high.
std::vector<std::complex<long double>> specialize_y(const BivarPoly& p, std::complex<long double> y0);

}  // namespace cubicrig
