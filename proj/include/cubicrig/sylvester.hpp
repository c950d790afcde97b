#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cubicrig/bareiss.hpp"
#include "cubicrig/bivar_poly.hpp"
#include "cubicrig/mod_poly.hpp"
#include "cubicrig/upoly.hpp"

namespace cubicrig {

/// Sylvester matrix of f, g viewed in Z[y][x]. The top deg_x(g) rows carry
/// f's coefficients (highest power of x first), the remaining deg_x(f) rows
/// carry g's; each row is shifted one column right of the previous one.
struct SylvesterMatrix {
  std::size_t deg_f = 0;  ///< N
  std::size_t deg_g = 0;  ///< M
  Matrix<ZPoly> rows;

  [[nodiscard]] std::size_t size() const { return rows.size(); }
  /// Entry-wise y = y0.
  [[nodiscard]] Matrix<mpz_class> at(const mpz_class& y0) const;
  /// Entry-wise reduction mod a prime.
  [[nodiscard]] Matrix<FpPoly> reduce(std::uint64_t q) const;
  /// Largest y-degree over all entries.
  [[nodiscard]] long max_entry_degree() const;
};

/// DegeneracyError if either input is constant in x.
SylvesterMatrix build_sylvester(const BivarPoly& f, const BivarPoly& g);

/// Bareiss over Z[y].
ZPoly determinant_fraction_free(const SylvesterMatrix& s);

/// Samples y = 0, 1, -1, 2, -2, ... (degree_bound + 1 points), takes exact
/// integer determinants and interpolates over Q. BoundViolationError if the
/// interpolant is not integral. Points are split across `jobs` threads.
ZPoly determinant_eval_interp(const SylvesterMatrix& s, long degree_bound, unsigned jobs = 1);

/// deg_x f * deg_y g + deg_x g * deg_y f, valid for any pair.
long generic_degree_bound(const BivarPoly& f, const BivarPoly& g);

/// Above this Sylvester size resultant_x switches to evaluation-interpolation.
inline constexpr std::size_t kFractionFreeMaxSize = 20;

/// Res_x(f, g) in Z[y] under the f-on-top sign convention. Uses the supplied
/// degree bound for evaluation-interpolation, else the generic bound.
ZPoly resultant_x(const BivarPoly& f, const BivarPoly& g, std::optional<long> degree_bound = std::nullopt,
                  unsigned jobs = 1);

/// The symmetric sample points 0, 1, -1, 2, -2, ... used for interpolation.
std::vector<mpz_class> symmetric_points(std::size_t count);

struct LeadingData {
  long degree = 0;
  mpz_class lead;
  unsigned ord3 = 0;  ///< 3-adic valuation of lead
};

/// DegeneracyError on the zero polynomial.
LeadingData leading_data(const ZPoly& r);

/// Determinant of the Sylvester matrix reduced mod q, by Bareiss over F_q[y].
FpPoly determinant_mod_p(const SylvesterMatrix& s, std::uint64_t q);

/// Res_x computed natively over F_q[y] from polynomials already reduced mod q.
FpPoly resultant_x_mod_p(const ModBivarPoly& f, const ModBivarPoly& g);

/// Coefficient-wise reduction of an integer polynomial.
FpPoly reduce_mod(const ZPoly& r, std::uint64_t q);

}  // namespace cubicrig
