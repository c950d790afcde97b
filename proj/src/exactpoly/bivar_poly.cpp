#include "cubicrig/bivar_poly.hpp"

#include <algorithm>
#include <cmath>

#include "cubicrig/errors.hpp"
#include "cubicrig/modarith.hpp"
#include "cubicrig/mod_poly.hpp"

namespace cubicrig {

namespace {

// Below this product of term counts the schoolbook product wins.
constexpr std::size_t kKroneckerThreshold = 2048;

// Splits p by powers of `var`: exponent -> cofactor in the other variable.
std::map<std::uint32_t, BivarPoly> split_by(const BivarPoly& p, Var var) {
  std::map<std::uint32_t, std::vector<std::pair<Monomial, mpz_class>>> groups;
  for (const auto& [m, c] : p.terms()) {
    if (var == Var::X) {
      groups[m.ex].push_back({Monomial{0, m.ey}, c});
    } else {
      groups[m.ey].push_back({Monomial{m.ex, 0}, c});
    }
  }
  std::map<std::uint32_t, BivarPoly> out;
  for (const auto& [e, terms] : groups) out.emplace(e, BivarPoly::from_terms(terms));
  return out;
}

}  // namespace

BivarPoly::BivarPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivarPoly BivarPoly::x() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::y() { return monomial(1, 0, 1); }

BivarPoly BivarPoly::monomial(const mpz_class& c, std::uint32_t ex, std::uint32_t ey) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Monomial{ex, ey}, c);
  return p;
}

BivarPoly BivarPoly::from_terms(const std::vector<std::pair<Monomial, mpz_class>>& terms) {
  BivarPoly p;
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

BivarPoly BivarPoly::from_y(const ZPoly& f) {
  BivarPoly p;
  const auto& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] != 0) p.terms_.emplace(Monomial{0, static_cast<std::uint32_t>(e)}, c[e]);
  }
  return p;
}

BivarPoly BivarPoly::from_x(const ZPoly& f) {
  BivarPoly p;
  const auto& c = f.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] != 0) p.terms_.emplace(Monomial{static_cast<std::uint32_t>(e), 0}, c[e]);
  }
  return p;
}

void BivarPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class BivarPoly::coefficient(std::uint32_t ex, std::uint32_t ey) const {
  auto it = terms_.find(Monomial{ex, ey});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

long BivarPoly::deg_x() const {
  long d = kMinusInfinity;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.ex));
  return d;
}

long BivarPoly::deg_y() const {
  long d = kMinusInfinity;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.ey));
  return d;
}

long BivarPoly::total_degree() const {
  return terms_.empty() ? kMinusInfinity : terms_.begin()->first.total();
}

long BivarPoly::weighted_degree(long wx, long wy) const {
  long d = kMinusInfinity;
  for (const auto& [m, c] : terms_) d = std::max(d, wx * static_cast<long>(m.ex) + wy * static_cast<long>(m.ey));
  return d;
}

std::size_t BivarPoly::max_coeff_bits() const {
  std::size_t bits = 0;
  for (const auto& [m, c] : terms_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

ZPoly BivarPoly::coefficient_in_x(std::uint32_t e) const {
  std::vector<mpz_class> c;
  for (const auto& [m, v] : terms_) {
    if (m.ex != e) continue;
    if (c.size() <= m.ey) c.resize(m.ey + 1);
    c[m.ey] = v;
  }
  return ZPoly(std::move(c));
}

std::vector<ZPoly> BivarPoly::coefficients_in_x() const {
  if (terms_.empty()) return {};
  std::vector<std::vector<mpz_class>> dense(static_cast<std::size_t>(deg_x()) + 1);
  for (const auto& [m, v] : terms_) {
    auto& row = dense[m.ex];
    if (row.size() <= m.ey) row.resize(m.ey + 1);
    row[m.ey] = v;
  }
  std::vector<ZPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

std::string BivarPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpz_class mag = abs(c);
    const bool unit = (mag == 1);
    if (!unit || (m.ex == 0 && m.ey == 0)) {
      out += mag.get_str();
      if (m.ex != 0 || m.ey != 0) out += '*';
    }
    append_monomial(out, m, names);
  }
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly operator-(BivarPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.term_count() * b.term_count() < kKroneckerThreshold) return multiply_schoolbook(a, b);
  return multiply_kronecker(a, b);
}

bool BivarPoly::is_canonical() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 0; });
}

BivarPoly multiply_schoolbook(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(Monomial{ma.ex + mb.ex, ma.ey + mb.ey}, prod);
    }
  }
  return out;
}

BivarPoly pow(const BivarPoly& base, unsigned e) {
  BivarPoly result(1);
  BivarPoly b = base;
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return result;
}

BivarPoly substitute(const BivarPoly& p, Var var, const BivarPoly& replacement) {
  if (p.is_zero()) return {};
  // Monomial replacement c*x^a*y^b maps each term directly.
  if (replacement.term_count() == 1) {
    const auto& [rm, rc] = *replacement.terms().begin();
    std::vector<std::pair<Monomial, mpz_class>> terms;
    terms.reserve(p.term_count());
    mpz_class scale;
    for (const auto& [m, c] : p.terms()) {
      const std::uint32_t e = (var == Var::X) ? m.ex : m.ey;
      mpz_pow_ui(scale.get_mpz_t(), rc.get_mpz_t(), e);
      Monomial out = (var == Var::X) ? Monomial{0, m.ey} : Monomial{m.ex, 0};
      out.ex += rm.ex * e;
      out.ey += rm.ey * e;
      terms.push_back({out, c * scale});
    }
    return BivarPoly::from_terms(terms);
  }
  auto groups = split_by(p, var);
  // Horner from the top exponent down.
  BivarPoly result;
  std::uint32_t current = groups.rbegin()->first;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    while (current > it->first) {
      result = result * replacement;
      --current;
    }
    result += it->second;
  }
  while (current > 0) {
    result = result * replacement;
    --current;
  }
  return result;
}

BivarPoly partial_derivative(const BivarPoly& p, Var var) {
  std::vector<std::pair<Monomial, mpz_class>> terms;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = (var == Var::X) ? m.ex : m.ey;
    if (e == 0) continue;
    Monomial d = m;
    if (var == Var::X) {
      d.ex -= 1;
    } else {
      d.ey -= 1;
    }
    terms.push_back({d, c * e});
  }
  return BivarPoly::from_terms(terms);
}

ModBivarPoly reduce_mod(const BivarPoly& p, std::uint64_t q) {
  if (!is_prime(q)) throw NotPrimeError("reduce_mod: modulus " + std::to_string(q) + " is not prime");
  ModBivarPoly out(q);
  for (const auto& [m, c] : p.terms()) out.add_term(m, mod_reduce(c, q));
  return out;
}

BivarPoly divide_coefficients_exact(const BivarPoly& p, const mpz_class& d) {
  if (d == 0) throw std::domain_error("divide_coefficients_exact: division by zero");
  BivarPoly out;
  std::vector<std::pair<Monomial, mpz_class>> terms;
  for (const auto& [m, c] : p.terms()) {
    if (mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) == 0) {
      std::string mono;
      if (!append_monomial(mono, m, {})) mono = "1";
      throw InexactDivisionError("coefficient " + c.get_str() + " of monomial " + mono + " is not divisible by " +
                                 d.get_str());
    }
    mpz_class qv;
    mpz_divexact(qv.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    terms.push_back({m, qv});
  }
  return BivarPoly::from_terms(terms);
}

mpz_class evaluate(const BivarPoly& p, const mpz_class& xv, const mpz_class& yv) {
  const auto cx = p.coefficients_in_x();
  mpz_class acc = 0;
  for (auto it = cx.rbegin(); it != cx.rend(); ++it) acc = acc * xv + it->evaluate(yv);
  return acc;
}

long double to_long_double(const mpz_class& v) {
  const int sign = sgn(v);
  if (sign == 0) return 0.0L;
  mpz_class mag = abs(v);
  const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  if (bits <= 64) return sign * static_cast<long double>(mpz_get_ui(mag.get_mpz_t()));
  const std::size_t shift = bits - 64;
  mpz_class top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), mag.get_mpz_t(), shift);
  return sign * std::ldexp(static_cast<long double>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(shift));
}

std::vector<std::complex<long double>> specialize_y(const BivarPoly& p, std::complex<long double> y0) {
  const auto cx = p.coefficients_in_x();
  std::vector<std::complex<long double>> out(cx.size());
  for (std::size_t e = 0; e < cx.size(); ++e) {
    std::complex<long double> acc = 0;
    const auto& c = cx[e].coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y0 + to_long_double(*it);
    out[e] = acc;
  }
  return out;
}

std::complex<long double> evaluate(const BivarPoly& p, std::complex<long double> xv, std::complex<long double> yv) {
  const auto c = specialize_y(p, yv);
  std::complex<long double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * xv + *it;
  return acc;
}

}  // namespace cubicrig
