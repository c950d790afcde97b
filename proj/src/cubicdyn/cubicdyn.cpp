#include "cubicrig/cubicdyn.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "cubicrig/errors.hpp"

namespace cubicrig {

namespace {

void check_limit(unsigned n, unsigned max_n) {
  if (n > max_n) {
    throw ResourceLimitError("iterate count n=" + std::to_string(n) + " exceeds limit max_n=" + std::to_string(max_n));
  }
}

void check_positive(unsigned n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

std::uint64_t pow3(unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 3;
  return r;
}

class IterateCache {
 public:
  std::shared_ptr<const BivarPoly> get(unsigned n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({n, sign});
    return it == cache_.end() ? nullptr : it->second;
  }
  void put(unsigned n, int sign, std::shared_ptr<const BivarPoly> p) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::make_pair(n, sign), std::move(p));
  }

 private:
  std::mutex mu_;
  std::map<std::pair<unsigned, int>, std::shared_ptr<const BivarPoly>> cache_;
};

IterateCache& iterate_cache() {
  static IterateCache cache;
  return cache;
}

// f^n(z) as a dense polynomial in z with coefficients in Z[x, y].
using ZExpansion = std::vector<BivarPoly>;

ZExpansion multiply(const ZExpansion& a, const ZExpansion& b) {
  ZExpansion out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

std::vector<BivarPoly> one_step_polynomial() {
  const BivarPoly x = BivarPoly::x();
  return {BivarPoly::y(), BivarPoly(-3) * x * x, BivarPoly(), BivarPoly(1)};
}

BivarPoly compose_step(const std::vector<BivarPoly>& step, const BivarPoly& value) {
  BivarPoly acc;
  for (auto it = step.rbegin(); it != step.rend(); ++it) {
    if (!acc.is_zero()) acc = acc * value;
    acc += *it;
  }
  return acc;
}

CriticalOrbitPoly iterate_critical(unsigned n, int sign, unsigned max_n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("iterate_critical: sign must be +1 or -1");
  check_limit(n, max_n);
  auto& cache = iterate_cache();
  if (auto hit = cache.get(n, sign)) return {n, sign, *hit};

  // Resume from the deepest cached iterate.
  unsigned start = n;
  std::shared_ptr<const BivarPoly> current;
  while (start > 0 && !(current = cache.get(start, sign))) --start;
  if (!current) {
    current = std::make_shared<const BivarPoly>(BivarPoly(sign) * BivarPoly::x());
    cache.put(0, sign, current);
  }
  const auto step = one_step_polynomial();
  for (unsigned k = start + 1; k <= n; ++k) {
    current = std::make_shared<const BivarPoly>(compose_step(step, *current));
    cache.put(k, sign, current);
  }
  return {n, sign, *current};
}

BivarPoly build_F(unsigned n, unsigned max_n) {
  check_positive(n, "build_F");
  return iterate_critical(n, 1, max_n).poly - BivarPoly::x();
}

BivarPoly build_G(unsigned m, unsigned max_n) {
  check_positive(m, "build_G");
  return iterate_critical(m, -1, max_n).poly + BivarPoly::x();
}

BivarPoly build_F_tail(unsigned n, unsigned max_n) {
  check_positive(n, "build_F_tail");
  return iterate_critical(n, 1, max_n).poly + BivarPoly(2) * BivarPoly::x();
}

BivarPoly build_G_tail(unsigned m, unsigned max_n) {
  check_positive(m, "build_G_tail");
  return iterate_critical(m, -1, max_n).poly - BivarPoly(2) * BivarPoly::x();
}

BivarPoly build_F_variant(unsigned n, unsigned tail, unsigned max_n) {
  if (tail > 1) throw std::invalid_argument("tail length must be 0 or 1");
  return tail == 0 ? build_F(n, max_n) : build_F_tail(n, max_n);
}

BivarPoly build_G_variant(unsigned m, unsigned tail, unsigned max_n) {
  if (tail > 1) throw std::invalid_argument("tail length must be 0 or 1");
  return tail == 0 ? build_G(m, max_n) : build_G_tail(m, max_n);
}

IdentityVerdict verify_factor_identity(unsigned n, unsigned max_n) {
  check_positive(n, "verify_factor_identity");
  check_limit(n + 1, max_n);
  const BivarPoly x = BivarPoly::x();
  const BivarPoly fn = iterate_critical(n, 1, max_n).poly;
  const BivarPoly lhs = iterate_critical(n + 1, 1, max_n).poly - iterate_critical(1, 1, max_n).poly;
  const BivarPoly base = fn - x;
  const BivarPoly rhs = (base * base) * (fn + BivarPoly(2) * x);
  IdentityVerdict v;
  v.n = n;
  v.lhs_terms = lhs.term_count();
  v.rhs_terms = rhs.term_count();
  v.difference = lhs - rhs;
  v.pass = v.difference.is_zero();
  return v;
}

SymmetryVerdict verify_odd_symmetry(unsigned n, unsigned max_n) {
  check_positive(n, "verify_odd_symmetry");
  check_limit(n, max_n);
  const auto step = one_step_polynomial();
  // z itself, then f^k(z) = (f^{k-1}(z))^3 - 3x^2 f^{k-1}(z) + y.
  ZExpansion q{BivarPoly(), BivarPoly(1)};
  for (unsigned k = 0; k < n; ++k) {
    ZExpansion acc{step.back()};
    for (auto it = step.rbegin() + 1; it != step.rend(); ++it) {
      acc = multiply(acc, q);
      acc[0] += *it;
    }
    q = std::move(acc);
  }
  SymmetryVerdict v;
  v.n = n;
  v.pass = true;
  for (const auto& coeff : q) {
    v.term_count += coeff.term_count();
    if (substitute(coeff, Var::X, -BivarPoly::x()) != coeff) v.pass = false;
  }
  return v;
}

long degree_bound(unsigned k) { return 4L * (k / 3) - static_cast<long>(k); }

CoefficientProfile coefficient_profile(unsigned n, unsigned max_n) {
  check_positive(n, "coefficient_profile");
  const BivarPoly fn = iterate_critical(n, 1, max_n).poly;
  const auto top = static_cast<unsigned>(pow3(n));
  const auto cx = fn.coefficients_in_x();
  CoefficientProfile prof;
  prof.n = n;
  prof.bounds_ok = true;
  for (unsigned k = 0; k <= top; ++k) {
    ProfileEntry e;
    e.k = k;
    const unsigned ex = top - k;
    e.a_k = ex < cx.size() ? cx[ex] : ZPoly();
    e.bound = degree_bound(k);
    e.actual_degree = e.a_k.degree();
    if (!e.ok()) {
      prof.bounds_ok = false;
      if (!prof.first_failing_k) prof.first_failing_k = k;
    }
    prof.entries.push_back(std::move(e));
  }
  mpz_class lead;
  mpz_ui_pow_ui(lead.get_mpz_t(), 2, pow3(n - 1));
  lead = -lead;  // odd exponent
  prof.leading_ok = prof.entries.front().a_k == ZPoly(lead);
  const ZPoly& constant = prof.entries.back().a_k;
  prof.constant_ok = constant.degree() == static_cast<long>(pow3(n - 1)) && constant.leading() == 1;
  if (!prof.leading_ok && !prof.first_failing_k) prof.first_failing_k = 0;
  if (!prof.constant_ok && !prof.first_failing_k) prof.first_failing_k = top;
  return prof;
}

std::vector<ExactDegreeRow> exact_degree_observation(const CoefficientProfile& profile) {
  std::vector<ExactDegreeRow> rows;
  const auto top = static_cast<unsigned>(pow3(profile.n));
  for (const auto& e : profile.entries) {
    ExactDegreeRow r;
    r.k = e.k;
    r.actual = e.actual_degree;
    r.predicted = (e.k == top - 1 || e.bound < 0) ? kMinusInfinity : e.bound;
    r.holds = r.actual == r.predicted;
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json profile_to_json(const CoefficientProfile& profile) {
  auto rows = nlohmann::json::array();
  for (const auto& e : profile.entries) {
    nlohmann::json actual = nullptr;
    if (e.actual_degree != kMinusInfinity) actual = e.actual_degree;
    rows.push_back({{"n", profile.n}, {"k", e.k}, {"bound", e.bound}, {"actual_degree", actual}, {"ok", e.ok()}});
  }
  return rows;
}

ModBivarPoly y_tower_mod3(unsigned n) {
  ModBivarPoly y(3);
  for (unsigned i = 0; i < n; ++i) y.add_term(Monomial{0, static_cast<std::uint32_t>(pow3(i))}, 1);
  return y;
}

ModBivarPoly mod3_closed_form(CurveKind kind, unsigned n) {
  check_positive(n, "mod3_closed_form");
  const auto top = static_cast<std::uint32_t>(pow3(n));
  ModBivarPoly out = y_tower_mod3(n);
  switch (kind) {
    case CurveKind::Iterate:
      out.add_term(Monomial{top, 0}, 1);
      break;
    case CurveKind::F:
    case CurveKind::FTail:
      out.add_term(Monomial{top, 0}, 1);
      out.add_term(Monomial{1, 0}, 2);
      break;
    case CurveKind::G:
    case CurveKind::GTail:
      out.add_term(Monomial{top, 0}, 2);
      out.add_term(Monomial{1, 0}, 1);
      break;
  }
  return out;
}

}  // namespace cubicrig
