#include "cubicrig/frobres.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cubicrig/bareiss.hpp"
#include "cubicrig/errors.hpp"
#include "cubicrig/modarith.hpp"

namespace cubicrig {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t reduce_signed(long c, std::uint64_t p) {
  const long r = c % static_cast<long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
}

// f(T)^(p^i) over F_p: coefficients stay put, exponents scale.
FpPoly frobenius_power(const FpPoly& f, unsigned i) {
  if (f.is_zero()) return f;
  const std::uint64_t q = ipow(f.modulus(), i);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(f.degree()) * q + 1, 0);
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) out[j * q] = f.coeffs()[j];
  return FpPoly(f.modulus(), std::move(out));
}

}  // namespace

// ---- Z[tau] -----------------------------------------------------------------

FrobeniusOperator::FrobeniusOperator(std::vector<long> coeffs) : c_(std::move(coeffs)) { trim(); }

void FrobeniusOperator::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FrobeniusOperator FrobeniusOperator::tau_power(unsigned k) {
  std::vector<long> c(k + 1, 0);
  c[k] = 1;
  return FrobeniusOperator(std::move(c));
}

FrobeniusOperator FrobeniusOperator::artin_schreier(unsigned k) {
  return tau_power(k) - FrobeniusOperator({1});
}

long FrobeniusOperator::degree() const { return c_.empty() ? kMinusInfinity : static_cast<long>(c_.size()) - 1; }

std::string FrobeniusOperator::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    long c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "tau";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FrobeniusOperator operator+(const FrobeniusOperator& a, const FrobeniusOperator& b) {
  std::vector<long> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return FrobeniusOperator(std::move(c));
}

FrobeniusOperator operator-(const FrobeniusOperator& a, const FrobeniusOperator& b) {
  std::vector<long> neg(b.coeffs());
  for (auto& v : neg) v = -v;
  return a + FrobeniusOperator(std::move(neg));
}

FrobeniusOperator op_multiply(const FrobeniusOperator& a, const FrobeniusOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return FrobeniusOperator(std::move(c));
}

FrobeniusOperator op_divide_exact(const FrobeniusOperator& a, const FrobeniusOperator& b) {
  if (b.is_zero()) throw InexactDivisionError("division by the zero operator");
  std::vector<long> rem = a.coeffs();
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) {
    if (!rem.empty()) throw InexactDivisionError(a.to_string() + " is not divisible by " + b.to_string());
    return {};
  }
  std::vector<long> q(rem.size() - d.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const long top = rem[i + d.size() - 1];
    if (top % d.back() != 0) throw InexactDivisionError(a.to_string() + " is not divisible by " + b.to_string());
    q[i] = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q[i] * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](long v) { return v != 0; }))
    throw InexactDivisionError(a.to_string() + " is not divisible by " + b.to_string());
  return FrobeniusOperator(std::move(q));
}

FpPoly apply_operator(const FrobeniusOperator& op, const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  FpPoly out(p, {});
  for (std::size_t i = 0; i < op.coeffs().size(); ++i) {
    const std::uint64_t c = reduce_signed(op.coeffs()[i], p);
    if (c == 0) continue;
    out += FpPoly::constant(p, c) * frobenius_power(f, static_cast<unsigned>(i));
  }
  return out;
}

FpPoly sum_product_closed(std::uint64_t p, unsigned n, unsigned m) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (n == 0 || m == 0) throw std::invalid_argument("sum_product_closed: n, m must be >= 1");
  const unsigned d = std::gcd(n, m);
  const auto num = op_multiply(FrobeniusOperator::tau_power(d),
                               op_multiply(FrobeniusOperator::artin_schreier(n), FrobeniusOperator::artin_schreier(m)));
  const auto op = op_divide_exact(num, FrobeniusOperator::artin_schreier(d));
  return apply_operator(op, FpPoly::monomial(p, 1, 1));
}

// ---- finite fields ----------------------------------------------------------

bool is_irreducible(const FpPoly& f) {
  const long k = f.degree();
  if (k < 1) return false;
  const std::uint64_t p = f.modulus();
  const FpPoly t = FpPoly::monomial(p, 1, 1);
  mpz_class e = 1;
  for (long i = 1; i <= k / 2; ++i) {
    e *= static_cast<unsigned long>(p);
    const FpPoly h = powmod(t, e, f) - t;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

FieldTower::FieldTower(std::uint64_t p, unsigned k) : p_(p), k_(k), size_(ipow(p, k)), mu_(p, {}) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("FieldTower: degree must be >= 1");
  // Candidates t^k + (lower part), lower part ordered by its base-p index.
  for (std::uint64_t lower = 0; lower < size_; ++lower) {
    std::vector<std::uint64_t> c(k + 1, 0);
    std::uint64_t v = lower;
    for (unsigned j = 0; j < k; ++j, v /= p) c[j] = v % p;
    c[k] = 1;
    FpPoly cand(p, std::move(c));
    if (is_irreducible(cand)) {
      mu_ = std::move(cand);
      return;
    }
  }
  throw InvariantViolation("no irreducible polynomial found");
}

FieldTower::Elem FieldTower::element(std::uint64_t index) const {
  Elem e(k_, 0);
  for (unsigned j = 0; j < k_; ++j, index /= p_) e[j] = index % p_;
  return e;
}

std::uint64_t FieldTower::index(const Elem& e) const {
  std::uint64_t idx = 0;
  for (unsigned j = k_; j-- > 0;) idx = idx * p_ + e[j];
  return idx;
}

FieldTower::Elem FieldTower::one() const { return from_base(1); }

FieldTower::Elem FieldTower::from_base(std::uint64_t c) const {
  Elem e(k_, 0);
  e[0] = c % p_;
  return e;
}

FieldTower::Elem FieldTower::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (unsigned j = 0; j < k_; ++j) r[j] = addmod(a[j], b[j], p_);
  return r;
}

FieldTower::Elem FieldTower::sub(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (unsigned j = 0; j < k_; ++j) r[j] = submod(a[j], b[j], p_);
  return r;
}

FieldTower::Elem FieldTower::mul(const Elem& a, const Elem& b) const {
  // Schoolbook product, then reduce by the monic modulus from the top.
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = addmod(prod[i + j], mulmod(a[i], b[j], p_), p_);
  }
  const auto& mu = mu_.coeffs();
  for (std::size_t top = prod.size(); top-- > k_;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      const std::size_t pos = top - k_ + j;
      prod[pos] = submod(prod[pos], mulmod(c, j < mu.size() ? mu[j] : 0, p_), p_);
    }
    prod[top] = 0;
  }
  prod.resize(k_);
  return prod;
}

FieldTower::Elem FieldTower::power(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldTower::Elem FieldTower::frobenius(const Elem& a, unsigned i) const {
  Elem r = a;
  for (unsigned s = 0; s < i; ++s) r = power(r, p_);
  return r;
}

std::vector<FieldTower::Elem> FieldTower::fixed_points(unsigned d) const {
  std::vector<Elem> out;
  for (std::uint64_t i = 0; i < size_; ++i) {
    Elem e = element(i);
    if (frobenius(e, d) == e) out.push_back(std::move(e));
  }
  return out;
}

std::vector<FieldTower::Elem> FieldTower::roots_of(const FpPoly& f) const {
  if (f.modulus() != p_) throw RingMismatchError("polynomial and field have different characteristic");
  std::vector<Elem> out;
  for (std::uint64_t i = 0; i < size_; ++i) {
    const Elem e = element(i);
    Elem acc = zero();
    for (std::size_t j = f.coeffs().size(); j-- > 0;) acc = add(mul(acc, e), from_base(f.coeffs()[j]));
    if (acc == zero()) out.push_back(e);
  }
  return out;
}

std::vector<FieldTower::Elem> embed_subfield(const FieldTower& big, unsigned sub, std::size_t root_choice) {
  if (sub == 0 || big.k() % sub != 0)
    throw std::invalid_argument("embed_subfield: " + std::to_string(sub) + " does not divide " + std::to_string(big.k()));
  const FieldTower small(big.p(), sub);
  const auto roots = big.roots_of(small.modulus());
  if (roots.size() != sub) throw InvariantViolation("subfield modulus does not split into distinct roots");
  const auto& r = roots[root_choice % roots.size()];
  std::vector<FieldTower::Elem> powers{big.one()};
  for (unsigned j = 1; j < sub; ++j) powers.push_back(big.mul(powers.back(), r));
  std::vector<FieldTower::Elem> image;
  image.reserve(small.size());
  for (std::uint64_t i = 0; i < small.size(); ++i) {
    const auto digits = small.element(i);
    FieldTower::Elem acc = big.zero();
    for (unsigned j = 0; j < sub; ++j) acc = big.add(acc, big.mul(big.from_base(digits[j]), powers[j]));
    image.push_back(std::move(acc));
  }
  return image;
}

namespace {

using ElemPoly = std::vector<FieldTower::Elem>;  // low degree first

FpPoly product_over_grid(const FieldTower& big, const std::vector<FieldTower::Elem>& us,
                         const std::vector<FieldTower::Elem>& vs) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& u : us)
    for (const auto& v : vs) ++counts[big.index(big.add(u, v))];

  ElemPoly poly{big.one()};
  for (const auto& [w_index, count] : counts) {
    const auto w = big.element(w_index);
    for (std::uint64_t rep = 0; rep < count; ++rep) {
      // poly *= (T - w)
      ElemPoly next(poly.size() + 1, big.zero());
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = big.add(next[i + 1], poly[i]);
        next[i] = big.sub(next[i], big.mul(poly[i], w));
      }
      poly = std::move(next);
    }
  }
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (std::any_of(c.begin() + 1, c.end(), [](std::uint64_t v) { return v != 0; }))
      throw InvariantViolation("product has a coefficient outside the prime field");
    coeffs.push_back(c[0]);
  }
  return FpPoly(big.p(), std::move(coeffs));
}

bool same_set(const FieldTower& big, const std::vector<FieldTower::Elem>& a, const std::vector<FieldTower::Elem>& b) {
  std::vector<std::uint64_t> ia, ib;
  for (const auto& e : a) ia.push_back(big.index(e));
  for (const auto& e : b) ib.push_back(big.index(e));
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  return ia == ib;
}

}  // namespace

BruteForceProduct brute_force_sum_product(std::uint64_t p, unsigned n, unsigned m, std::uint64_t budget) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (n == 0 || m == 0) throw std::invalid_argument("brute_force_sum_product: n, m must be >= 1");
  const std::uint64_t factors = ipow(p, n + m);
  if (factors > budget) {
    throw ResourceLimitError("enumeration of " + std::to_string(factors) + " factors exceeds budget " +
                             std::to_string(budget));
  }
  const FieldTower big(p, std::lcm(n, m));
  const auto us = embed_subfield(big, n, 0);
  const auto vs = embed_subfield(big, m, 0);

  BruteForceProduct out;
  out.embeddings_match_fixed_sets = same_set(big, us, big.fixed_points(n)) && same_set(big, vs, big.fixed_points(m));
  out.product = product_over_grid(big, us, vs);
  out.product_second_root = product_over_grid(big, embed_subfield(big, n, 1), embed_subfield(big, m, 1));
  return out;
}

ModBivarPoly artin_schreier_resultant_closed(std::uint64_t p, unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw std::invalid_argument("artin_schreier_resultant_closed: n, m must be >= 1");
  const unsigned d = std::gcd(n, m);
  ModBivarPoly out(p);
  for (unsigned i = 1; i <= m / d; ++i) out.add_term(Monomial{static_cast<std::uint32_t>(ipow(p, i * d)), 0}, 1);
  for (unsigned i = 1; i <= n / d; ++i) out.add_term(Monomial{0, static_cast<std::uint32_t>(ipow(p, i * d))}, p - 1);
  return out;
}

ArtinSchreierOracle artin_schreier_resultant_oracle(std::uint64_t p, unsigned n, unsigned m, std::uint64_t budget) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (n == 0 || m == 0) throw std::invalid_argument("artin_schreier_resultant_oracle: n, m must be >= 1");
  const std::uint64_t N = ipow(p, n);
  const std::uint64_t M = ipow(p, m);
  if (N + M > budget) {
    throw ResourceLimitError("Sylvester size " + std::to_string(N + M) + " exceeds budget " + std::to_string(budget));
  }
  const std::size_t size = N + M;
  const ModBivarPoly zero(p);
  const ModBivarPoly minus_one(p, -1);

  // Coefficient rows, highest power first: x^K - x - C.
  auto coeff_row = [&](std::uint64_t K, const ModBivarPoly& C) {
    std::vector<ModBivarPoly> row(K + 1, zero);
    row[0] = ModBivarPoly(p, 1);
    row[K - 1] = row[K - 1] + minus_one;
    row[K] = row[K] - C;
    return row;
  };
  const auto f_row = coeff_row(N, ModBivarPoly::x(p));
  const auto g_row = coeff_row(M, ModBivarPoly::y(p));

  Matrix<ModBivarPoly> S(size, std::vector<ModBivarPoly>(size, zero));
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j <= N; ++j) S[i][i + j] = f_row[j];
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= M; ++j) S[M + i][i + j] = g_row[j];

  ArtinSchreierOracle out{bareiss_determinant(std::move(S), ModBivarPoly(p, 1)), 0, p != 2, size};
  const auto closed = artin_schreier_resultant_closed(p, n, m);
  if (out.determinant == closed) {
    out.sign = 1;
  } else if (out.determinant == -closed) {
    out.sign = -1;
  }
  return out;
}

}  // namespace cubicrig
