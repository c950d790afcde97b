#include "cubicrig/roots.hpp"

#include <cmath>
#include <numbers>

#include "cubicrig/bivar_poly.hpp"
#include "cubicrig/errors.hpp"

namespace cubicrig {

std::pair<cld, cld> horner_with_derivative(const std::vector<cld>& coeffs, cld z) {
  cld p = 0, dp = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<cld> aberth_roots(const std::vector<cld>& coeffs_in, const RootOptions& opts, const std::string& label) {
  std::vector<cld> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back() == cld(0)) coeffs.pop_back();
  if (coeffs.empty()) throw DegeneracyError("roots of the zero polynomial");
  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return {};

  // Monic scaling keeps magnitudes comparable to the roots.
  const cld lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;

  // Start on a circle of radius given by the Fujiwara bound, rotated off the
  // real axis so conjugate pairs are not seeded symmetrically.
  long double radius = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const long double r = std::pow(std::abs(coeffs[i]), 1.0L / static_cast<long double>(d - i));
    radius = std::max(radius, r);
  }
  radius = radius > 0 ? radius : 1.0L;
  std::vector<cld> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / d + opts.start_angle;
    z[k] = std::polar(radius, theta);
  }

  std::vector<bool> done(d, false);
  unsigned iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const auto [p, dp] = horner_with_derivative(coeffs, z[i]);
      if (p == cld(0)) {
        done[i] = true;
        continue;
      }
      const cld ratio = p / dp;
      cld s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) s += cld(1) / (z[i] - z[j]);
      const cld w = ratio / (cld(1) - ratio * s);
      z[i] -= w;
      if (std::abs(w) <= opts.tolerance * (1 + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  if (iter == opts.max_iterations) {
    throw NumericFailure("root finder did not converge in " + std::to_string(opts.max_iterations) +
                         " iterations on " + label + " of degree " + std::to_string(d));
  }

  for (auto& r : z) {
    for (int step = 0; step < 3; ++step) {
      const auto [p, dp] = horner_with_derivative(coeffs, r);
      if (dp == cld(0)) break;
      const cld next = r - p / dp;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      r = next;
    }
  }
  return z;
}

std::vector<cld> aberth_roots(const ZPoly& p, const RootOptions& opts) {
  std::vector<cld> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(to_long_double(v));
  return aberth_roots(c, opts, p.degree() <= 12 ? p.to_string() : "integer polynomial");
}

}  // namespace cubicrig
