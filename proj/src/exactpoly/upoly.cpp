#include "cubicrig/upoly.hpp"

#include <algorithm>

#include "cubicrig/errors.hpp"
#include "cubicrig/modarith.hpp"

namespace cubicrig {

namespace {

std::string append_univariate_term(std::size_t e, const std::string& var) {
  if (e == 0) return {};
  return e == 1 ? var : var + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(const mpz_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

ZPoly ZPoly::monomial(const mpz_class& c, std::size_t e) {
  std::vector<mpz_class> v(e + 1);
  v[e] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ZPoly::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

std::uint64_t ZPoly::evaluate_mod(std::uint64_t t, std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, t, p), mod_reduce(*it, p), p);
  return acc;
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t e = 1; e < c_.size(); ++e) d[e - 1] = c_[e] * static_cast<unsigned long>(e);
  return ZPoly(std::move(d));
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (c_.empty()) return {};
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(out));
}

std::size_t ZPoly::max_coeff_bits() const {
  std::size_t bits = 0;
  for (const auto& v : c_) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  return bits;
}

std::string ZPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpz_class mag = abs(c_[i]);
    if (mag != 1 || i == 0) {
      out += mag.get_str();
      if (i != 0) out += '*';
    }
    out += append_univariate_term(i, var);
  }
  return out;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

ZPoly operator-(ZPoly a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return ZPoly(std::move(out));
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InexactDivisionError("divide_exact: divisor degree exceeds dividend degree");
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(rem.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t()) == 0) {
      throw InexactDivisionError("divide_exact: non-integral quotient coefficient");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (rem[j] != 0) throw InexactDivisionError("divide_exact: nonzero remainder over Z");
  }
  return ZPoly(std::move(q));
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lc = bc[db];
  for (std::size_t top = r.size(); top-- > db;) {
    const mpz_class lead = r[top];
    for (auto& v : r) v *= lc;
    if (lead != 0) {
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[top - db + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
    }
    r.pop_back();
  }
  return ZPoly(std::move(r));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly u = a.primitive_part();
  ZPoly v = b.primitive_part();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    ZPoly r = pseudo_remainder(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  // The primitive gcd; integer content is dropped.
  return u.primitive_part();
}

std::vector<ZPoly> squarefree_decomposition(const ZPoly& p) {
  if (p.degree() <= 0) return {};
  // Every polynomial below is primitive, so by Gauss's lemma each rational
  // exact division is already exact over Z.
  ZPoly f = p.primitive_part();
  ZPoly a = gcd(f, f.derivative());
  ZPoly b = divide_exact(f, a);
  std::vector<ZPoly> factors;
  while (b.degree() > 0) {
    ZPoly c = gcd(a, b);
    factors.push_back(divide_exact(b, c).primitive_part());
    a = divide_exact(a, c);
    b = std::move(c);
  }
  return factors;
}

// --------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t e) {
  std::vector<std::uint64_t> v(e + 1, 0);
  v[e] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_ring(const FpPoly& o) const {
  if (p_ != o.p_) throw RingMismatchError("FpPoly operands over different fields");
}

std::uint64_t FpPoly::evaluate(std::uint64_t t) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, t, p_), *it, p_);
  return acc;
}

std::string FpPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) out += " + ";
    first = false;
    if (c_[i] != 1 || i == 0) {
      out += std::to_string(c_[i]);
      if (i != 0) out += '*';
    }
    out += append_univariate_term(i, var);
  }
  return out;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  check_ring(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  check_ring(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

FpPoly operator-(FpPoly a) {
  for (auto& v : a.c_) v = (v == 0) ? 0 : a.p_ - v;
  return a;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a.c_[i], b.c_[j], p), p);
  }
  return FpPoly(p, std::move(out));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  if (a.modulus() != b.modulus()) throw RingMismatchError("divmod: operands over different fields");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  std::vector<std::uint64_t> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint64_t inv = invmod(bc[db], p);
  std::vector<std::uint64_t> q(rem.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t t = mulmod(rem[k + db], inv, p);
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = submod(rem[k + j], mulmod(t, bc[j], p), p);
  }
  rem.resize(db);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(rem))};
}

FpPoly divide_exact(const FpPoly& a, const FpPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InexactDivisionError("divide_exact: nonzero remainder over F_p");
  return q;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly u = a;
  FpPoly v = b;
  while (!v.is_zero()) {
    FpPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  const std::uint64_t inv = invmod(u.leading(), u.modulus());
  std::vector<std::uint64_t> c = u.coeffs();
  for (auto& v2 : c) v2 = mulmod(v2, inv, u.modulus());
  return FpPoly(u.modulus(), std::move(c));
}

FpPoly powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m) {
  FpPoly result = divmod(FpPoly::constant(m.modulus(), 1), m).second;
  FpPoly b = divmod(base, m).second;
  const std::size_t bits = (e == 0) ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = divmod(result * b, m).second;
  }
  return result;
}

FpPoly interpolate(std::uint64_t p, std::span<const std::uint64_t> points, std::span<const std::uint64_t> values) {
  const std::size_t n = points.size();
  std::vector<std::uint64_t> dd(values.begin(), values.end());
  for (auto& v : dd) v %= p;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const std::uint64_t denom = submod(points[i] % p, points[i - level] % p, p);
      dd[i] = mulmod(submod(dd[i], dd[i - 1], p), invmod(denom, p), p);
    }
  }
  FpPoly acc(p, {});
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * FpPoly(p, {(p - points[k] % p) % p, 1}) + FpPoly::constant(p, dd[k]);
  }
  return acc;
}

ZPoly interpolate_integer(std::span<const mpz_class> points, std::span<const mpz_class> values) {
  const std::size_t n = points.size();
  std::vector<mpq_class> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(points[i] - points[i - level]);
    }
  }
  std::vector<mpq_class> acc;
  for (std::size_t k = n; k-- > 0;) {
    // acc = acc * (t - points[k]) + dd[k]
    std::vector<mpq_class> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * points[k];
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  std::vector<mpz_class> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i].get_den() != 1) {
      throw BoundViolationError("interpolated coefficient of degree " + std::to_string(i) + " is not an integer");
    }
    out[i] = acc[i].get_num();
  }
  return ZPoly(std::move(out));
}

}  // namespace cubicrig
