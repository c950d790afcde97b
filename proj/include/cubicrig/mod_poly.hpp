#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubicrig/monomial.hpp"
#include "cubicrig/upoly.hpp"

namespace cubicrig {

/// Polynomial in two variables over the prime field F_p, p < 2^32.
///
/// Same canonical sparse layout as BivarPoly with residues in 1..p-1. The
/// two slots are printed as x, y by default; finite-field code reuses them
/// for (T), (A, B).
class ModBivarPoly {
 public:
  using TermMap = std::map<Monomial, std::uint64_t, GradedLexDesc>;

  /// The zero polynomial over F_p. Throws NotPrimeError for composite p.
  explicit ModBivarPoly(std::uint64_t p);
  ModBivarPoly(std::uint64_t p, std::int64_t constant);

  static ModBivarPoly x(std::uint64_t p);
  static ModBivarPoly y(std::uint64_t p);
  static ModBivarPoly monomial(std::uint64_t p, std::int64_t c, std::uint32_t ex, std::uint32_t ey);
  static ModBivarPoly from_x(const FpPoly& f);
  static ModBivarPoly from_y(const FpPoly& f);

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] std::uint64_t coefficient(std::uint32_t ex, std::uint32_t ey) const;
  [[nodiscard]] long deg_x() const;
  [[nodiscard]] long deg_y() const;
  [[nodiscard]] long total_degree() const;
  [[nodiscard]] Monomial leading_monomial() const;
  [[nodiscard]] std::uint64_t leading_coefficient() const;

  /// Coefficient of x^e as a polynomial in y.
  [[nodiscard]] FpPoly coefficient_in_x(std::uint32_t e) const;
  /// Requires deg_y == 0 (or zero): the x-slot as a dense univariate.
  [[nodiscard]] FpPoly as_univariate_x() const;
  [[nodiscard]] FpPoly as_univariate_y() const;

  [[nodiscard]] std::string to_string(const VarNames& names = {}) const;

  ModBivarPoly& operator+=(const ModBivarPoly& o);
  ModBivarPoly& operator-=(const ModBivarPoly& o);
  ModBivarPoly& operator*=(std::uint64_t s);
  friend ModBivarPoly operator+(ModBivarPoly a, const ModBivarPoly& b) { return a += b; }
  friend ModBivarPoly operator-(ModBivarPoly a, const ModBivarPoly& b) { return a -= b; }
  friend ModBivarPoly operator-(ModBivarPoly a);
  friend ModBivarPoly operator*(const ModBivarPoly& a, const ModBivarPoly& b);
  friend bool operator==(const ModBivarPoly& a, const ModBivarPoly& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] bool is_canonical() const;

  /// Inserts c*m, reducing and dropping zeros.
  void add_term(const Monomial& m, std::uint64_t c);

 private:
  void check_ring(const ModBivarPoly& o) const;
  std::uint64_t p_;
  TermMap terms_;
};

ModBivarPoly pow(const ModBivarPoly& base, unsigned e);

/// f^(p^i) computed with the Frobenius identity (sum c m)^p = sum c m^p.
ModBivarPoly frobenius_power(const ModBivarPoly& f, unsigned i);

ModBivarPoly substitute(const ModBivarPoly& f, Var var, const ModBivarPoly& replacement);
ModBivarPoly partial_derivative(const ModBivarPoly& f, Var var);

/// a / b, throwing InexactDivisionError unless b divides a.
ModBivarPoly divide_exact(const ModBivarPoly& a, const ModBivarPoly& b);

std::uint64_t evaluate(const ModBivarPoly& f, std::uint64_t xv, std::uint64_t yv);

}  // namespace cubicrig
