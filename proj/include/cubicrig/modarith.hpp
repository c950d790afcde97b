#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace cubicrig {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Inverse in F_p; p must be prime and a nonzero mod p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Canonical residue of an arbitrary-precision integer in [0, p).
std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t p);

/// Largest e with 3^e | v, or with prime^e | v in general. v must be nonzero.
unsigned valuation(const mpz_class& v, unsigned long prime);

}  // namespace cubicrig
