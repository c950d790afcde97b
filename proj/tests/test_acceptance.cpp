// One PASS/FAIL line per acceptance criterion. Tolerances and time budgets
// are pinned below; a criterion over its budget counts as a failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "cubicrig/cubicdyn.hpp"
#include "cubicrig/frobres.hpp"
#include "cubicrig/modarith.hpp"
#include "cubicrig/rigidity.hpp"
#include "cubicrig/sylvester.hpp"
#include "support/random_poly.hpp"

using namespace cubicrig;

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kJacobianFloor = 1e-6;
constexpr double kExactSetRelTol = 1e-8;
constexpr std::uint64_t kLargePrime = 1000000007ULL;
constexpr std::uint64_t kSeed = 20261016;

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

long pow3(unsigned e) {
  long r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < budget_s, "over time budget");
  std::printf("criterion %d %s  %s  (%.2f s, budget %.0f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title, secs, budget_s,
              c.ok ? "" : "  ", c.why.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

// Plain iteration x -> x^3 - 3x^2 v + y without the library's cache.
BivarPoly naive_iterate(unsigned n) {
  BivarPoly v = X;
  const BivarPoly three_x2 = BivarPoly(3) * X * X;
  for (unsigned i = 0; i < n; ++i) v = v * v * v - three_x2 * v + Y;
  return v;
}

// |P(a, b)| over sum |c| |a|^ex |b|^ey.
double backward_error(const BivarPoly& p, std::complex<long double> a, std::complex<long double> b) {
  long double scale = 0;
  for (const auto& [mono, c] : p.terms()) {
    scale += std::abs(to_long_double(c)) * std::pow(std::abs(a), static_cast<long double>(mono.ex)) *
             std::pow(std::abs(b), static_cast<long double>(mono.ey));
  }
  const long double v = std::abs(evaluate(p, a, b));
  return static_cast<double>(scale == 0 ? v : v / scale);
}

std::string triple(std::uint64_t p, unsigned n, unsigned m) {
  return "(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string pair_label(unsigned n, unsigned m, unsigned ti, unsigned tj) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ",tails " + std::to_string(ti) + std::to_string(tj) + ")";
}

}  // namespace

int main() {
  criterion(1, "iterate mod 3 is x^(3^n) + y + y^3 + ... , n <= 6", 10, [](Check& c) {
    for (unsigned n = 1; n <= 6; ++n) {
      ModBivarPoly expected = ModBivarPoly::monomial(3, 1, static_cast<std::uint32_t>(pow3(n)), 0);
      for (unsigned i = 0; i < n; ++i) expected += ModBivarPoly::monomial(3, 1, 0, static_cast<std::uint32_t>(pow3(i)));
      c.expect(reduce_mod(iterate_critical(n, 1).poly, 3) == expected, "n=" + std::to_string(n));
    }
  });

  criterion(2, "coefficient bounds, leading and constant terms, n <= 6", 30, [](Check& c) {
    for (unsigned n = 1; n <= 6; ++n) {
      const BivarPoly& it = iterate_critical(n, 1).poly;
      const long N = pow3(n);
      // Independent scan: largest y-exponent per x-exponent.
      std::vector<long> deg(N + 1, -1);
      for (const auto& [mono, coeff] : it.terms()) {
        c.expect(mono.ex <= N, "x-degree exceeds 3^n");
        if (mono.ex <= N) deg[mono.ex] = std::max<long>(deg[mono.ex], mono.ey);
      }
      for (long k = 0; k <= N; ++k) {
        if (deg[N - k] >= 0 && deg[N - k] > 4 * (k / 3) - k)
          c.expect(false, "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
      mpz_class lead;
      mpz_pow_ui(lead.get_mpz_t(), mpz_class(-2).get_mpz_t(), static_cast<unsigned long>(pow3(n - 1)));
      c.expect(it.coefficient(static_cast<std::uint32_t>(N), 0) == lead, "a_0 at n=" + std::to_string(n));
      c.expect(deg[N] == -1 || deg[N] == 0, "a_0 depends on y");
      const ZPoly a_last = it.coefficient_in_x(0);
      c.expect(a_last.degree() == pow3(n - 1) && a_last.leading() == 1, "a_(3^n) at n=" + std::to_string(n));
      c.expect(coefficient_profile(n).pass(), "library profile at n=" + std::to_string(n));
    }
  });

  criterion(3, "J = 1 mod 3 for n + m <= 5, all tails", 120, [](Check& c) {
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned m = 1; n + m <= 5; ++m)
        for (unsigned ti = 0; ti <= 1; ++ti)
          for (unsigned tj = 0; tj <= 1; ++tj) {
            const BivarPoly F = build_F_variant(n, ti);
            const BivarPoly G = build_G_variant(m, tj);
            const BivarPoly J = partial_derivative(F, Var::X) * partial_derivative(G, Var::Y) -
                                partial_derivative(F, Var::Y) * partial_derivative(G, Var::X);
            const auto label = pair_label(n, m, ti, tj);
            c.expect(reduce_mod(J, 3) == ModBivarPoly::monomial(3, 1, 0, 0), label);
            c.expect(certify_jacobian_mod3(jacobian({n, m, ti, tj})).ok, "library certificate " + label);
          }
  });

  criterion(4, "resultant degree 3^(n+m-1), unit lead, mod 3 lead 2y^N, n + m <= 5", 300, [](Check& c) {
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned m = 1; n + m <= 5; ++m) {
        const auto cert = certify_resultant({n, m, 0, 0}, jobs());
        const long N = pow3(n + m - 1);
        const auto label = pair_label(n, m, 0, 0);
        c.expect(cert.degree == N, "degree " + label);
        c.expect(valuation(cert.lead, 3) == 0, "ord_3 " + label);
        const FpPoly r3 = reduce_mod(cert.resultant, 3);
        c.expect(r3.degree() == N && r3.leading() == 2, "mod 3 lead " + label);
        c.expect(cert.ok, "library certificate " + label);
      }
    // n = m = 1: G = -F + 2y, so every root r of F gives G(r) = 2y and
    // Res = lc(F)^3 * (2y)^3 = (-2)^3 (2y)^3.
    const BivarPoly F = build_F(1), G = build_G(1);
    c.expect(G == -F + BivarPoly(2) * Y, "G = -F + 2y");
    c.expect(F.coefficient(3, 0) == -2 && F.deg_x() == 3, "lc(F) = -2");
    const ZPoly oracle = ZPoly({0, 0, 0, mpz_class(-8) * 8});
    c.expect(resultant_x(F, G) == oracle, "-64 y^3 product oracle");
    c.expect(oracle.to_string() == "-64*y^3", "printed form");
  });

  criterion(5, "finite-field product and Artin-Schreier resultant, p in {2,3,5}", 60, [](Check& c) {
    std::string signs;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
      for (unsigned n = 1; n <= 2; ++n)
        for (unsigned m = 1; m <= 2; ++m) {
          const auto label = triple(p, n, m);
          const auto bf = brute_force_sum_product(p, n, m);
          c.expect(bf.product == sum_product_closed(p, n, m), "product " + label);
          c.expect(bf.embeddings_match_fixed_sets, "embedding " + label);

          const unsigned d = std::gcd(n, m);
          ModBivarPoly sum(p);
          for (unsigned i = 1; i <= m / d; ++i) {
            std::uint64_t e = 1;
            for (unsigned k = 0; k < i * d; ++k) e *= p;
            sum += ModBivarPoly::monomial(p, 1, static_cast<std::uint32_t>(e), 0);
          }
          for (unsigned i = 1; i <= n / d; ++i) {
            std::uint64_t e = 1;
            for (unsigned k = 0; k < i * d; ++k) e *= p;
            sum -= ModBivarPoly::monomial(p, 1, 0, static_cast<std::uint32_t>(e));
          }
          const auto o = artin_schreier_resultant_oracle(p, n, m);
          const bool plus = o.determinant == sum;
          const bool minus = o.determinant == -sum;
          c.expect(plus || minus, "oracle " + label);
          c.expect(artin_schreier_resultant_closed(p, n, m) == sum, "closed " + label);
          signs += " " + label + (plus ? "+" : "-");
        }
    std::printf("  recorded signs:%s\n", signs.c_str());
  });

  criterion(6, "fraction-free = eval-interp (size <= 20), = mod p (size <= 60)", 120, [](Check& c) {
    std::size_t small = 0, large = 0;
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned m = 1; m <= 3; ++m)
        for (unsigned ti = 0; ti <= 1; ++ti)
          for (unsigned tj = 0; tj <= 1; ++tj) {
            const BivarPoly F = build_F_variant(n, ti);
            const BivarPoly G = build_G_variant(m, tj);
            const auto s = build_sylvester(F, G);
            if (s.size() > 60) continue;
            const auto label = pair_label(n, m, ti, tj);
            const ZPoly ei = determinant_eval_interp(s, generic_degree_bound(F, G), jobs());
            if (s.size() <= 20) {
              ++small;
              c.expect(determinant_fraction_free(s) == ei, "ff vs ei " + label);
            } else {
              ++large;
            }
            c.expect(reduce_mod(ei, kLargePrime) == determinant_mod_p(s, kLargePrime), "mod p " + label);
            c.expect(reduce_mod(ei, 3) == determinant_mod_p(s, 3), "mod 3 " + label);
          }
    std::printf("  systems: %zu of size <= 20, %zu of size 21..60\n", small, large);
    c.expect(small == 16 && large == 20, "system count");
  });

  criterion(7, "numeric exhibit n + m <= 4: residual <= 1e-8, |J| >= 1e-6, first system exact", 30, [](Check& c) {
    std::size_t points = 0;
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned m = 1; n + m <= 4; ++m)
        for (unsigned ti = 0; ti <= 1; ++ti)
          for (unsigned tj = 0; tj <= 1; ++tj) {
            const CurvePair cp{n, m, ti, tj};
            const auto label = pair_label(n, m, ti, tj);
            const BivarPoly F = build_F_variant(n, ti), G = build_G_variant(m, tj);
            const BivarPoly Fx = partial_derivative(F, Var::X), Fy = partial_derivative(F, Var::Y);
            const BivarPoly Gx = partial_derivative(G, Var::X), Gy = partial_derivative(G, Var::Y);
            const auto sr = solve_pcf(cp, certify_resultant(cp, jobs()).resultant);
            c.expect(sr.root_count_ok && !sr.solutions.empty(), "root count " + label);
            for (const auto& s : sr.solutions) {
              ++points;
              const std::complex<long double> a(s.alpha.real(), s.alpha.imag()), b(s.beta.real(), s.beta.imag());
              const auto J = evaluate(Fx, a, b) * evaluate(Gy, a, b) - evaluate(Fy, a, b) * evaluate(Gx, a, b);
              c.expect(std::max(backward_error(F, a, b), backward_error(G, a, b)) <= kResidualTol, "residual " + label);
              c.expect(std::abs(J) >= kJacobianFloor, "|J| " + label);
            }
          }
    std::printf("  points checked: %zu\n", points);

    const auto sr = solve_pcf({1, 1, 0, 0});
    const double r = 1 / std::sqrt(2.0);
    const std::vector<std::pair<std::complex<double>, double>> expected{{{0, -r}, 4}, {{0, 0}, -2}, {{0, r}, 4}};
    c.expect(sr.solutions.size() == 3, "first system has three points");
    for (const auto& [alpha, J] : expected) {
      const auto hit = std::find_if(sr.solutions.begin(), sr.solutions.end(), [&](const PCFSolution& s) {
        return std::abs(s.alpha - alpha) <= kExactSetRelTol * std::max(1.0, std::abs(alpha)) &&
               std::abs(s.beta) <= kExactSetRelTol &&
               std::abs(s.jacobian_value - J) <= kExactSetRelTol * std::abs(J);
      });
      c.expect(hit != sr.solutions.end(), "missing point with J=" + std::to_string(J));
    }
  });

  criterion(8, "f^(n+1) - f = (f^n - x)^2 (f^n + 2x), n <= 5", 60, [](Check& c) {
    const BivarPoly f1 = naive_iterate(1);
    BivarPoly fn = f1;
    for (unsigned n = 1; n <= 5; ++n) {
      const BivarPoly next = fn * fn * fn - BivarPoly(3) * X * X * fn + Y;
      const BivarPoly d = fn - X;
      c.expect(next - f1 == d * d * (fn + BivarPoly(2) * X), "n=" + std::to_string(n));
      c.expect(verify_factor_identity(n).pass, "library verdict n=" + std::to_string(n));
      fn = next;
    }
  });

  criterion(9, "seeded property suites: ring laws, reduction, operator action, floor inequality", 120, [](Check& c) {
    std::mt19937_64 rng(kSeed);
    std::size_t cases = 0;
    for (int t = 0; t < 300; ++t, ++cases) {
      const auto a = testing::random_bivar(rng, 6, 5, 50);
      const auto b = testing::random_bivar(rng, 6, 5, 50);
      const auto d = testing::random_bivar_big(rng, 6, 5, 200);
      c.expect((a + b) + d == a + (b + d) && (a * b) * d == a * (b * d), "associativity");
      c.expect(a * b == b * a && a * (b + d) == a * b + a * d, "commutativity or distributivity");
      c.expect((a - a).is_zero() && a * BivarPoly(1) == a, "identities");
      for (std::uint64_t q : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{7}, kLargePrime}) {
        c.expect(reduce_mod(a * d, q) == reduce_mod(a, q) * reduce_mod(d, q), "reduction of products");
        c.expect(reduce_mod(a + d, q) == reduce_mod(a, q) + reduce_mod(d, q), "reduction of sums");
      }
    }
    std::uniform_int_distribution<int> len(0, 3), deg(0, 4);
    std::uniform_int_distribution<long> oc(-3, 3);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
      std::uniform_int_distribution<std::uint64_t> fc(0, p - 1);
      for (int t = 0; t < 100; ++t, ++cases) {
        std::vector<long> ca(len(rng)), cb(len(rng));
        for (auto& v : ca) v = oc(rng);
        for (auto& v : cb) v = oc(rng);
        const FrobeniusOperator A(ca), B(cb);
        std::vector<std::uint64_t> cf(deg(rng) + 1);
        for (auto& v : cf) v = fc(rng);
        const FpPoly f(p, cf);
        c.expect(apply_operator(op_multiply(A, B), f) == apply_operator(A, apply_operator(B, f)), "operator composition");
        c.expect(apply_operator(A + B, f) == apply_operator(A, f) + apply_operator(B, f), "operator sum");
      }
    }
    std::uniform_real_distribution<double> real(-1e3, 1e3);
    for (int t = 0; t < 10000; ++t, ++cases) {
      const double a = real(rng), b = real(rng), d = real(rng);
      c.expect(std::floor(a) + std::floor(b) + std::floor(d) <= std::floor(a + b + d), "floor inequality");
    }
    std::uniform_int_distribution<long> ki(0, 100000);
    for (int t = 0; t < 10000; ++t, ++cases) {
      const long i = ki(rng), j = ki(rng), k = ki(rng);
      c.expect(degree_bound(i) + degree_bound(j) + degree_bound(k) <= degree_bound(i + j + k), "degree bound superadditive");
    }
    std::printf("  random cases: %zu (seed %llu)\n", cases, static_cast<unsigned long long>(kSeed));
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
