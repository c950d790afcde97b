#pragma once

#include <complex>
#include <vector>

#include "cubicrig/upoly.hpp"

namespace cubicrig {

using cld = std::complex<long double>;

struct RootOptions {
  long double tolerance = 1e-12L;  ///< relative step size at convergence
  unsigned max_iterations = 500;
  long double start_angle = 0.4L;  ///< rotation of the initial circle
};

/// All roots of sum coeffs[i] z^i by Aberth-Ehrlich simultaneous iteration,
/// each polished by a few Newton steps. Leading coefficient must be nonzero.
/// Throws NumericFailure (naming the polynomial) if the cap is reached.
std::vector<cld> aberth_roots(const std::vector<cld>& coeffs, const RootOptions& opts = {},
                              const std::string& label = "polynomial");

/// Same for an integer polynomial.
std::vector<cld> aberth_roots(const ZPoly& p, const RootOptions& opts = {});

/// Horner value and derivative.
std::pair<cld, cld> horner_with_derivative(const std::vector<cld>& coeffs, cld z);

}  // namespace cubicrig
