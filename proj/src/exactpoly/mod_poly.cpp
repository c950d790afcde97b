#include "cubicrig/mod_poly.hpp"

#include <algorithm>

#include "cubicrig/errors.hpp"
#include "cubicrig/modarith.hpp"

namespace cubicrig {

namespace {

std::uint64_t signed_residue(std::int64_t c, std::uint64_t p) {
  const std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace

ModBivarPoly::ModBivarPoly(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (1ULL << 32U)) {
    throw NotPrimeError("modulus " + std::to_string(p) + " is not a prime below 2^32");
  }
}

ModBivarPoly::ModBivarPoly(std::uint64_t p, std::int64_t constant) : ModBivarPoly(p) {
  add_term(Monomial{0, 0}, signed_residue(constant, p));
}

ModBivarPoly ModBivarPoly::x(std::uint64_t p) { return monomial(p, 1, 1, 0); }
ModBivarPoly ModBivarPoly::y(std::uint64_t p) { return monomial(p, 1, 0, 1); }

ModBivarPoly ModBivarPoly::monomial(std::uint64_t p, std::int64_t c, std::uint32_t ex, std::uint32_t ey) {
  ModBivarPoly out(p);
  out.add_term(Monomial{ex, ey}, signed_residue(c, p));
  return out;
}

ModBivarPoly ModBivarPoly::from_x(const FpPoly& f) {
  ModBivarPoly out(f.modulus());
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) out.add_term(Monomial{static_cast<std::uint32_t>(e), 0}, f.coeff(e));
  return out;
}

ModBivarPoly ModBivarPoly::from_y(const FpPoly& f) {
  ModBivarPoly out(f.modulus());
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) out.add_term(Monomial{0, static_cast<std::uint32_t>(e)}, f.coeff(e));
  return out;
}

void ModBivarPoly::check_ring(const ModBivarPoly& o) const {
  if (p_ != o.p_) {
    throw RingMismatchError("operands over F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
  }
}

void ModBivarPoly::add_term(const Monomial& m, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = addmod(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t ModBivarPoly::coefficient(std::uint32_t ex, std::uint32_t ey) const {
  auto it = terms_.find(Monomial{ex, ey});
  return it == terms_.end() ? 0 : it->second;
}

long ModBivarPoly::deg_x() const {
  long d = kMinusInfinity;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.ex));
  return d;
}

long ModBivarPoly::deg_y() const {
  long d = kMinusInfinity;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.ey));
  return d;
}

long ModBivarPoly::total_degree() const {
  return terms_.empty() ? kMinusInfinity : terms_.begin()->first.total();
}

Monomial ModBivarPoly::leading_monomial() const {
  if (terms_.empty()) throw DegeneracyError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

std::uint64_t ModBivarPoly::leading_coefficient() const {
  if (terms_.empty()) throw DegeneracyError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

FpPoly ModBivarPoly::coefficient_in_x(std::uint32_t e) const {
  std::vector<std::uint64_t> c;
  for (const auto& [m, v] : terms_) {
    if (m.ex != e) continue;
    if (c.size() <= m.ey) c.resize(m.ey + 1, 0);
    c[m.ey] = v;
  }
  return FpPoly(p_, std::move(c));
}

FpPoly ModBivarPoly::as_univariate_x() const {
  if (deg_y() > 0) throw DegeneracyError("as_univariate_x: polynomial depends on the second variable");
  std::vector<std::uint64_t> c;
  for (const auto& [m, v] : terms_) {
    if (c.size() <= m.ex) c.resize(m.ex + 1, 0);
    c[m.ex] = v;
  }
  return FpPoly(p_, std::move(c));
}

FpPoly ModBivarPoly::as_univariate_y() const {
  if (deg_x() > 0) throw DegeneracyError("as_univariate_y: polynomial depends on the first variable");
  return coefficient_in_x(0);
}

std::string ModBivarPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (c != 1 || (m.ex == 0 && m.ey == 0)) {
      out += std::to_string(c);
      if (m.ex != 0 || m.ey != 0) out += '*';
    }
    append_monomial(out, m, names);
  }
  return out;
}

ModBivarPoly& ModBivarPoly::operator+=(const ModBivarPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ModBivarPoly& ModBivarPoly::operator-=(const ModBivarPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
  return *this;
}

ModBivarPoly& ModBivarPoly::operator*=(std::uint64_t s) {
  s %= p_;
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = mulmod(c, s, p_);
  return *this;
}

ModBivarPoly operator-(ModBivarPoly a) {
  for (auto& [m, c] : a.terms_) c = a.p_ - c;
  return a;
}

ModBivarPoly operator*(const ModBivarPoly& a, const ModBivarPoly& b) {
  a.check_ring(b);
  ModBivarPoly out(a.p_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(Monomial{ma.ex + mb.ex, ma.ey + mb.ey}, mulmod(ca, cb, a.p_));
    }
  }
  return out;
}

bool ModBivarPoly::is_canonical() const {
  return std::all_of(terms_.begin(), terms_.end(), [this](const auto& t) { return t.second != 0 && t.second < p_; });
}

ModBivarPoly pow(const ModBivarPoly& base, unsigned e) {
  ModBivarPoly result(base.modulus(), 1);
  ModBivarPoly b = base;
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return result;
}

ModBivarPoly frobenius_power(const ModBivarPoly& f, unsigned i) {
  std::uint64_t scale = 1;
  for (unsigned k = 0; k < i; ++k) scale *= f.modulus();
  ModBivarPoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    out.add_term(Monomial{static_cast<std::uint32_t>(m.ex * scale), static_cast<std::uint32_t>(m.ey * scale)}, c);
  }
  return out;
}

ModBivarPoly substitute(const ModBivarPoly& f, Var var, const ModBivarPoly& replacement) {
  if (f.modulus() != replacement.modulus()) throw RingMismatchError("substitute: replacement over a different field");
  ModBivarPoly out(f.modulus());
  std::map<std::uint32_t, ModBivarPoly> powers;
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = (var == Var::X) ? m.ex : m.ey;
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, pow(replacement, e)).first;
    ModBivarPoly cofactor = ModBivarPoly::monomial(f.modulus(), 1, var == Var::X ? 0 : m.ex, var == Var::X ? m.ey : 0);
    cofactor *= c;
    out += cofactor * it->second;
  }
  return out;
}

ModBivarPoly partial_derivative(const ModBivarPoly& f, Var var) {
  ModBivarPoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = (var == Var::X) ? m.ex : m.ey;
    if (e == 0) continue;
    Monomial d = m;
    if (var == Var::X) {
      d.ex -= 1;
    } else {
      d.ey -= 1;
    }
    out.add_term(d, mulmod(c, e % f.modulus(), f.modulus()));
  }
  return out;
}

ModBivarPoly divide_exact(const ModBivarPoly& a, const ModBivarPoly& b) {
  if (a.modulus() != b.modulus()) throw RingMismatchError("divide_exact: operands over different fields");
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  const std::uint64_t p = a.modulus();
  const Monomial lm = b.leading_monomial();
  const std::uint64_t lc_inv = invmod(b.leading_coefficient(), p);
  ModBivarPoly rem = a;
  ModBivarPoly quot(p);
  while (!rem.is_zero()) {
    const Monomial rm = rem.leading_monomial();
    if (rm.ex < lm.ex || rm.ey < lm.ey) throw InexactDivisionError("divide_exact: nonzero remainder over F_p");
    const Monomial qm{rm.ex - lm.ex, rm.ey - lm.ey};
    const std::uint64_t qc = mulmod(rem.leading_coefficient(), lc_inv, p);
    quot.add_term(qm, qc);
    for (const auto& [m, c] : b.terms()) rem.add_term(Monomial{m.ex + qm.ex, m.ey + qm.ey}, p - mulmod(c, qc, p));
  }
  return quot;
}

std::uint64_t evaluate(const ModBivarPoly& f, std::uint64_t xv, std::uint64_t yv) {
  const std::uint64_t p = f.modulus();
  std::uint64_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    acc = addmod(acc, mulmod(c, mulmod(powmod(xv, m.ex, p), powmod(yv, m.ey, p), p), p), p);
  }
  return acc;
}

}  // namespace cubicrig
