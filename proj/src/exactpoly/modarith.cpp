#include "cubicrig/modarith.hpp"

#include "cubicrig/errors.hpp"

namespace cubicrig {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_class pm;
  mpz_set_ui(pm.get_mpz_t(), p);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

unsigned valuation(const mpz_class& v, unsigned long prime) {
  if (v == 0) throw DegeneracyError("valuation of zero is infinite");
  mpz_class rest = v;
  unsigned e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), prime) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), prime);
    ++e;
  }
  return e;
}

}  // namespace cubicrig
