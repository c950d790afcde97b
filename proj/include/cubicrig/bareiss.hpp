#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "cubicrig/errors.hpp"
#include "cubicrig/mod_poly.hpp"
#include "cubicrig/upoly.hpp"

namespace cubicrig {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Element hooks used by the elimination. Polynomial types already provide
// is_zero() and divide_exact(); integers get thin wrappers here.
inline bool elem_is_zero(const mpz_class& v) { return v == 0; }
inline mpz_class elem_div_exact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool elem_is_zero(const ZPoly& v) { return v.is_zero(); }
inline ZPoly elem_div_exact(const ZPoly& a, const ZPoly& b) { return divide_exact(a, b); }

inline bool elem_is_zero(const FpPoly& v) { return v.is_zero(); }
inline FpPoly elem_div_exact(const FpPoly& a, const FpPoly& b) { return divide_exact(a, b); }

inline bool elem_is_zero(const ModBivarPoly& v) { return v.is_zero(); }
inline ModBivarPoly elem_div_exact(const ModBivarPoly& a, const ModBivarPoly& b) { return divide_exact(a, b); }

/// Fraction-free (Bareiss) determinant over an integral domain.
///
/// `one` is the multiplicative identity of the entry ring, needed as the
/// initial divisor. Row swaps on a zero pivot flip the sign. A remainder in
/// any Bareiss division is impossible in exact arithmetic, so it surfaces as
/// InvariantViolation.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (elem_is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && elem_is_zero(m[r][k])) ++r;
      if (r == n) return one - one;
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    const T& pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = elem_is_zero(m[i][k]);
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = pivot * m[i][j];
        if (!lead_zero && !elem_is_zero(m[k][j])) num = num - m[i][k] * m[k][j];
        if (elem_is_zero(num)) {
          m[i][j] = std::move(num);
          continue;
        }
        try {
          m[i][j] = elem_div_exact(num, prev);
        } catch (const InexactDivisionError& e) {
          throw InvariantViolation(std::string("Bareiss division left a remainder: ") + e.what());
        }
      }
      m[i][k] = one - one;
    }
    prev = m[k][k];
  }
  T det = std::move(m[n - 1][n - 1]);
  if (negate) det = (one - one) - det;
  return det;
}

}  // namespace cubicrig
