#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "cubicrig/bivar_poly.hpp"
#include "cubicrig/mod_poly.hpp"

namespace cubicrig {

/// Iterates beyond this need an explicit override: term counts grow like
/// 9^n / 6 and coefficients like 2^(3^(n-1)).
inline constexpr unsigned kDefaultMaxIterate = 7;

/// f^n_{x,y}(sign * x) for f_{x,y}(z) = z^3 - 3x^2 z + y.
struct CriticalOrbitPoly {
  unsigned n = 0;
  int sign = 1;
  BivarPoly poly;
};

/// Coefficients of the one-step map in powers of z, with entries in Z[x, y]:
/// {y, -3x^2, 0, 1}.
std::vector<BivarPoly> one_step_polynomial();

/// sum_k step[k] * value^k, Horner from the top.
BivarPoly compose_step(const std::vector<BivarPoly>& step, const BivarPoly& value);

/// Exact iterate by repeated substitution into the one-step map. Results are
/// memoised per (n, sign); the cache is shared and thread-safe.
CriticalOrbitPoly iterate_critical(unsigned n, int sign, unsigned max_n = kDefaultMaxIterate);

/// F^(n) = f^n(x) - x and G^(m) = f^m(-x) + x.
BivarPoly build_F(unsigned n, unsigned max_n = kDefaultMaxIterate);
BivarPoly build_G(unsigned m, unsigned max_n = kDefaultMaxIterate);

/// Tail-length-one variants: F^(n,1) = f^n(x) + 2x and G^(m,1) = f^m(-x) - 2x.
BivarPoly build_F_tail(unsigned n, unsigned max_n = kDefaultMaxIterate);
BivarPoly build_G_tail(unsigned m, unsigned max_n = kDefaultMaxIterate);

/// Selects the periodic (tail 0) or tail-one curve for each critical point.
BivarPoly build_F_variant(unsigned n, unsigned tail, unsigned max_n = kDefaultMaxIterate);
BivarPoly build_G_variant(unsigned m, unsigned tail, unsigned max_n = kDefaultMaxIterate);

struct IdentityVerdict {
  unsigned n = 0;
  bool pass = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  /// lhs - rhs; zero on pass.
  BivarPoly difference;
};

/// Checks f^(n+1)(x) - f(x) == (f^n(x) - x)^2 (f^n(x) + 2x) exactly.
IdentityVerdict verify_factor_identity(unsigned n, unsigned max_n = kDefaultMaxIterate);

struct SymmetryVerdict {
  unsigned n = 0;
  bool pass = false;
  std::size_t term_count = 0;  ///< terms of f^n(z) in Z[x, y, z]
};

/// Checks f^n_{x,y}(z) is invariant under x -> -x, with z as a third variable.
SymmetryVerdict verify_odd_symmetry(unsigned n, unsigned max_n = 4);

/// One row of the expansion f^n(x) = sum_k a_k(y) x^(3^n - k).
struct ProfileEntry {
  unsigned k = 0;
  ZPoly a_k;
  long bound = 0;          ///< 4*floor(k/3) - k
  long actual_degree = 0;  ///< kMinusInfinity when a_k = 0
  [[nodiscard]] bool ok() const { return actual_degree <= bound; }
};

struct CoefficientProfile {
  unsigned n = 0;
  std::vector<ProfileEntry> entries;
  bool bounds_ok = false;
  bool leading_ok = false;   ///< a_0 == (-2)^(3^(n-1))
  bool constant_ok = false;  ///< a_{3^n} monic of degree 3^(n-1)
  std::optional<unsigned> first_failing_k;

  [[nodiscard]] bool pass() const { return bounds_ok && leading_ok && constant_ok; }
};

long degree_bound(unsigned k);

CoefficientProfile coefficient_profile(unsigned n, unsigned max_n = kDefaultMaxIterate);

/// Observational check of the exact-degree pattern deg a_k = 4*floor(k/3)-k
/// except a_{3^n - 1} = 0. Never asserted; returned for reporting.
struct ExactDegreeRow {
  unsigned k = 0;
  long predicted = 0;
  long actual = 0;
  bool holds = false;
};
std::vector<ExactDegreeRow> exact_degree_observation(const CoefficientProfile& profile);

/// Rows {n, k, bound, actual_degree, ok}; actual_degree is null for a_k = 0.
nlohmann::json profile_to_json(const CoefficientProfile& profile);

enum class CurveKind { Iterate, F, G, FTail, GTail };

/// y + y^3 + ... + y^(3^(n-1)) over F_3.
ModBivarPoly y_tower_mod3(unsigned n);

/// Closed form of the reduction mod 3, written down without iterating.
ModBivarPoly mod3_closed_form(CurveKind kind, unsigned n);

}  // namespace cubicrig
