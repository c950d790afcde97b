#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubicrig/bivar_poly.hpp"
#include "cubicrig/cubicdyn.hpp"
#include "cubicrig/upoly.hpp"

namespace cubicrig {

/// (n, m) periods with tail lengths for the first and second critical point.
struct CurvePair {
  unsigned n = 1;
  unsigned m = 1;
  unsigned tail_i = 0;
  unsigned tail_j = 0;

  [[nodiscard]] bool periodic() const { return tail_i == 0 && tail_j == 0; }
  [[nodiscard]] std::string label() const;
  friend bool operator==(const CurvePair&, const CurvePair&) = default;
};

/// F_x G_y - F_y G_x for the selected F- and G-variants.
BivarPoly jacobian(const CurvePair& c, unsigned max_n = kDefaultMaxIterate);

struct JacobianCertificate {
  bool ok = false;
  BivarPoly K;  ///< (J - 1) / 3 on success
  std::optional<Monomial> offending;
  mpz_class offending_coefficient;
};

/// Checks every coefficient of J - 1 is divisible by 3 and returns K.
JacobianCertificate certify_jacobian_mod3(const BivarPoly& J);

/// A partial derivative reduced mod 3, as -1, 0 or 1 when it is constant.
struct PartialCongruence {
  std::string name;               ///< e.g. "F_x"
  std::optional<int> derived;     ///< nullopt when the reduction is not constant
  std::optional<int> stated;  ///< published value, where one is given
  friend bool operator==(const PartialCongruence&, const PartialCongruence&) = default;
};

std::vector<PartialCongruence> partial_congruences(const CurvePair& c, unsigned max_n = kDefaultMaxIterate);

/// Exact resultant bounds: n + m above this needs an explicit override.
inline constexpr unsigned kDefaultMaxExactSum = 6;

struct ResultantCertificate {
  CurvePair curves;
  ZPoly resultant;
  long degree = 0;
  long expected_degree = 0;       ///< 3^(n+m-1)
  bool degree_asserted = false;   ///< only for periodic pairs
  mpz_class lead;
  unsigned ord3_lead = 0;
  std::string mod3_leading_term;  ///< e.g. "2*y^3"
  bool mod3_leading_ok = false;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Res_x of the selected variants with the three proposition checks.
/// ResourceLimitError when n + m exceeds max_sum.
ResultantCertificate certify_resultant(const CurvePair& c, unsigned jobs = 1, unsigned max_sum = kDefaultMaxExactSum);

struct IntegralityVerdict {
  unsigned ord3_lead_resultant = 0;
  unsigned ord3_lead_x = 0;  ///< x-leading coefficient of the F-variant
  bool pass = false;
};

/// Both 3-adic integrality conditions from a resultant and the F-variant.
IntegralityVerdict integrality_certificate(const ZPoly& resultant, const BivarPoly& f_variant);
IntegralityVerdict integrality_certificate(const CurvePair& c, unsigned jobs = 1);

struct PCFSolution {
  std::complex<double> alpha;
  std::complex<double> beta;
  double residual_F = 0;  ///< |F| / sum |c| |alpha|^i |beta|^j
  double residual_G = 0;
  std::complex<double> jacobian_value;
  int multiplicity_hint = 1;  ///< multiplicity of beta as a root of the resultant
  bool strict = true;         ///< false if a tail point is actually periodic
  friend bool operator==(const PCFSolution&, const PCFSolution&) = default;
};

struct SolveOptions {
  double tol = 1e-6;              ///< alpha matching tolerance
  double cluster_radius = 1e-8;   ///< beta clustering
  long max_degree = 2000;
  /// Perturbs the root finder's starting circle; 0 keeps the default.
  std::uint64_t seed = 0;
};

struct SolveResult {
  std::vector<PCFSolution> solutions;
  /// Per beta cluster: multiplicity in R and matched alpha count agree.
  bool root_count_ok = false;
  std::size_t clusters = 0;
};

SolveResult solve_pcf(const CurvePair& c, const ZPoly& resultant, const SolveOptions& opts = {});
SolveResult solve_pcf(const CurvePair& c, const SolveOptions& opts = {});

inline constexpr double kResidualThreshold = 1e-8;
inline constexpr double kTransversalityThreshold = 1e-6;

struct TransversalityReport {
  CurvePair curves;
  long resultant_degree = 0;
  long expected_degree = 0;
  bool degree_asserted = false;
  std::string lead_coeff;  ///< decimal
  unsigned lead_coeff_ord3 = 0;
  std::string mod3_leading_term;
  bool jacobian_mod3_ok = false;
  bool K_poly_present = false;
  std::string jacobian_failure;
  bool integrality_ok = false;
  std::vector<PartialCongruence> partials;
  std::vector<PCFSolution> solutions;
  bool root_count_ok = false;
  double min_abs_J = 0;
  double max_residual = 0;
  bool overall = false;
  std::vector<std::string> failures;

  friend bool operator==(const TransversalityReport&, const TransversalityReport&) = default;
};

struct ReportOptions {
  SolveOptions solve;
  unsigned jobs = 1;
  unsigned max_sum = kDefaultMaxExactSum;
  unsigned max_n = kDefaultMaxIterate;
  /// Skip the numeric exhibit (exact certificates only).
  bool numeric = true;
};

TransversalityReport transversality_report(const CurvePair& c, const ReportOptions& opts = {});

nlohmann::json to_json(const TransversalityReport& r);
TransversalityReport report_from_json(const nlohmann::json& j);
std::string to_text(const TransversalityReport& r);

}  // namespace cubicrig
