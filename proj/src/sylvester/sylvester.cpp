#include "cubicrig/sylvester.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "cubicrig/errors.hpp"
#include "cubicrig/modarith.hpp"

namespace cubicrig {

namespace {

template <class T, class Coeffs>
Matrix<T> banded(const Coeffs& f, const Coeffs& g, const T& zero) {
  // f, g given highest power first.
  const std::size_t N = f.size() - 1;
  const std::size_t M = g.size() - 1;
  Matrix<T> rows(N + M, std::vector<T>(N + M, zero));
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j <= N; ++j) rows[i][i + j] = f[j];
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= M; ++j) rows[M + i][i + j] = g[j];
  return rows;
}

std::vector<ZPoly> x_coefficients_desc(const BivarPoly& p) {
  auto c = p.coefficients_in_x();
  std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace

Matrix<mpz_class> SylvesterMatrix::at(const mpz_class& y0) const {
  Matrix<mpz_class> out(size(), std::vector<mpz_class>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (!rows[i][j].is_zero()) out[i][j] = rows[i][j].evaluate(y0);
  return out;
}

Matrix<FpPoly> SylvesterMatrix::reduce(std::uint64_t q) const {
  Matrix<FpPoly> out(size(), std::vector<FpPoly>(size(), FpPoly(q, {})));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = reduce_mod(rows[i][j], q);
  return out;
}

long SylvesterMatrix::max_entry_degree() const {
  long d = kMinusInfinity;
  for (const auto& row : rows)
    for (const auto& e : row) d = std::max(d, e.degree());
  return d;
}

SylvesterMatrix build_sylvester(const BivarPoly& f, const BivarPoly& g) {
  if (f.deg_x() < 1 || g.deg_x() < 1) throw DegeneracyError("Sylvester matrix needs both inputs nonconstant in x");
  SylvesterMatrix s;
  s.deg_f = static_cast<std::size_t>(f.deg_x());
  s.deg_g = static_cast<std::size_t>(g.deg_x());
  s.rows = banded(x_coefficients_desc(f), x_coefficients_desc(g), ZPoly());
  return s;
}

ZPoly determinant_fraction_free(const SylvesterMatrix& s) {
  return bareiss_determinant(s.rows, ZPoly(mpz_class(1)));
}

std::vector<mpz_class> symmetric_points(std::size_t count) {
  std::vector<mpz_class> pts;
  pts.reserve(count);
  for (long k = 0; pts.size() < count; ++k) {
    pts.emplace_back(k);
    if (k > 0 && pts.size() < count) pts.emplace_back(-k);
  }
  return pts;
}

ZPoly determinant_eval_interp(const SylvesterMatrix& s, long degree_bound, unsigned jobs) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const auto points = symmetric_points(static_cast<std::size_t>(degree_bound) + 1);
  std::vector<mpz_class> values(points.size());
  const mpz_class one = 1;

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < points.size(); i += jobs) values[i] = bareiss_determinant(s.at(points[i]), one);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return interpolate_integer(points, values);
}

long generic_degree_bound(const BivarPoly& f, const BivarPoly& g) {
  return f.deg_x() * std::max(0L, g.deg_y()) + g.deg_x() * std::max(0L, f.deg_y());
}

ZPoly resultant_x(const BivarPoly& f, const BivarPoly& g, std::optional<long> degree_bound, unsigned jobs) {
  const auto s = build_sylvester(f, g);
  if (s.size() <= kFractionFreeMaxSize) return determinant_fraction_free(s);
  return determinant_eval_interp(s, degree_bound.value_or(generic_degree_bound(f, g)), jobs);
}

LeadingData leading_data(const ZPoly& r) {
  if (r.is_zero()) throw DegeneracyError("leading data of the zero polynomial");
  return {r.degree(), r.leading(), valuation(r.leading(), 3)};
}

FpPoly reduce_mod(const ZPoly& r, std::uint64_t q) {
  std::vector<std::uint64_t> c(r.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(r.coeffs()[i], q);
  return FpPoly(q, std::move(c));
}

FpPoly determinant_mod_p(const SylvesterMatrix& s, std::uint64_t q) {
  if (!is_prime(q)) throw NotPrimeError(std::to_string(q) + " is not prime");
  return bareiss_determinant(s.reduce(q), FpPoly::constant(q, 1));
}

FpPoly resultant_x_mod_p(const ModBivarPoly& f, const ModBivarPoly& g) {
  if (f.modulus() != g.modulus()) throw RingMismatchError("resultant operands over different fields");
  if (f.deg_x() < 1 || g.deg_x() < 1) throw DegeneracyError("Sylvester matrix needs both inputs nonconstant in x");
  const std::uint64_t q = f.modulus();
  auto desc = [](const ModBivarPoly& p) {
    std::vector<FpPoly> c;
    for (long e = p.deg_x(); e >= 0; --e) c.push_back(p.coefficient_in_x(static_cast<std::uint32_t>(e)));
    return c;
  };
  return bareiss_determinant(banded(desc(f), desc(g), FpPoly(q, {})), FpPoly::constant(q, 1));
}

}  // namespace cubicrig
