#include "cubicrig/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cubicrig/errors.hpp"
#include "cubicrig/modarith.hpp"
#include "cubicrig/roots.hpp"
#include "cubicrig/sylvester.hpp"

namespace cubicrig {

namespace {

long pow3(unsigned e) {
  long r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

void check_pair(const CurvePair& c) {
  if (c.n == 0 || c.m == 0) throw std::invalid_argument("periods n, m must be >= 1");
  if (c.tail_i > 1 || c.tail_j > 1) throw std::invalid_argument("tail lengths must be 0 or 1");
}

// Floating copy of an integer polynomial for repeated evaluation.
class NumericPoly {
 public:
  explicit NumericPoly(const BivarPoly& p) {
    for (const auto& [mono, coeff] : p.terms()) {
      terms_.push_back({mono.ex, mono.ey, to_long_double(coeff)});
      max_ex_ = std::max(max_ex_, mono.ex);
      max_ey_ = std::max(max_ey_, mono.ey);
    }
  }

  // Value and the backward-error scale sum |c| |a|^ex |b|^ey.
  [[nodiscard]] std::pair<cld, long double> eval(cld a, cld b) const {
    std::vector<cld> pa(max_ex_ + 1), pb(max_ey_ + 1);
    pa[0] = pb[0] = 1;
    for (std::uint32_t i = 1; i <= max_ex_; ++i) pa[i] = pa[i - 1] * a;
    for (std::uint32_t i = 1; i <= max_ey_; ++i) pb[i] = pb[i - 1] * b;
    cld v = 0;
    long double scale = 0;
    for (const auto& t : terms_) {
      const cld term = t.c * pa[t.ex] * pb[t.ey];
      v += term;
      scale += std::abs(term);
    }
    return {v, scale};
  }

  [[nodiscard]] cld value(cld a, cld b) const { return eval(a, b).first; }

  [[nodiscard]] long double relative(cld a, cld b) const {
    const auto [v, s] = eval(a, b);
    return s > 0 ? std::abs(v) / s : std::abs(v);
  }

 private:
  struct Term {
    std::uint32_t ex, ey;
    long double c;
  };
  std::vector<Term> terms_;
  std::uint32_t max_ex_ = 0, max_ey_ = 0;
};

std::string leading_term_string(const FpPoly& r) {
  if (r.is_zero()) return "0";
  std::ostringstream os;
  const long d = r.degree();
  if (d == 0) {
    os << r.leading();
    return os.str();
  }
  if (r.leading() != 1) os << r.leading() << "*";
  os << "y";
  if (d > 1) os << "^" << d;
  return os.str();
}

int signed_residue(std::uint64_t v) { return v == 2 ? -1 : static_cast<int>(v); }

double snap(long double v) {
  // Drops floating dust so exact zeros print as 0.
  return std::abs(v) < 1e-14L ? 0.0 : static_cast<double>(v);
}

std::complex<double> to_double(cld z) { return {snap(z.real()), snap(z.imag())}; }

}  // namespace

std::string CurvePair::label() const {
  std::ostringstream os;
  os << "(n=" << n << ", m=" << m << ", tails=" << tail_i << "," << tail_j << ")";
  return os.str();
}

BivarPoly jacobian(const CurvePair& c, unsigned max_n) {
  check_pair(c);
  const auto F = build_F_variant(c.n, c.tail_i, max_n);
  const auto G = build_G_variant(c.m, c.tail_j, max_n);
  return partial_derivative(F, Var::X) * partial_derivative(G, Var::Y) -
         partial_derivative(F, Var::Y) * partial_derivative(G, Var::X);
}

JacobianCertificate certify_jacobian_mod3(const BivarPoly& J) {
  JacobianCertificate cert;
  const BivarPoly shifted = J - BivarPoly(1);
  for (const auto& [mono, coeff] : shifted.terms()) {
    if (mpz_divisible_ui_p(coeff.get_mpz_t(), 3) == 0) {
      cert.offending = mono;
      cert.offending_coefficient = coeff;
      return cert;
    }
  }
  cert.K = divide_coefficients_exact(shifted, 3);
  cert.ok = true;
  return cert;
}

std::vector<PartialCongruence> partial_congruences(const CurvePair& c, unsigned max_n) {
  check_pair(c);
  const auto F = build_F_variant(c.n, c.tail_i, max_n);
  const auto G = build_G_variant(c.m, c.tail_j, max_n);
  auto reduce = [](const BivarPoly& p) -> std::optional<int> {
    const auto r = reduce_mod(p, 3);
    if (r.is_zero()) return 0;
    if (r.total_degree() != 0) return std::nullopt;
    return signed_residue(r.coefficient(0, 0));
  };
  std::vector<PartialCongruence> out{
      {"F_x", reduce(partial_derivative(F, Var::X)), std::nullopt},
      {"F_y", reduce(partial_derivative(F, Var::Y)), std::nullopt},
      {"G_x", reduce(partial_derivative(G, Var::X)), std::nullopt},
      {"G_y", reduce(partial_derivative(G, Var::Y)), std::nullopt},
  };
  // Published values for the tail-one curves.
  if (c.tail_i == 1) {
    out[0].stated = 1;
    out[1].stated = -1;
  }
  if (c.tail_j == 1) {
    out[2].stated = 1;
    out[3].stated = 1;
  }
  return out;
}

ResultantCertificate certify_resultant(const CurvePair& c, unsigned jobs, unsigned max_sum) {
  check_pair(c);
  if (c.n + c.m > max_sum) {
    throw ResourceLimitError("exact resultant for n+m=" + std::to_string(c.n + c.m) + " exceeds limit max_sum=" +
                             std::to_string(max_sum));
  }
  const auto F = build_F_variant(c.n, c.tail_i);
  const auto G = build_G_variant(c.m, c.tail_j);
  ResultantCertificate cert;
  cert.curves = c;
  cert.expected_degree = pow3(c.n + c.m - 1);
  cert.degree_asserted = c.periodic();
  // The degree bound is proven for the periodic curves; tails fall back to
  // the generic Bezout-type bound.
  const long bound = c.periodic() ? cert.expected_degree : generic_degree_bound(F, G);
  cert.resultant = resultant_x(F, G, bound, jobs);
  if (cert.resultant.is_zero()) {
    cert.failures.push_back("resultant vanishes identically");
    return cert;
  }
  const auto ld = leading_data(cert.resultant);
  cert.degree = ld.degree;
  cert.lead = ld.lead;
  cert.ord3_lead = ld.ord3;
  const FpPoly r3 = reduce_mod(cert.resultant, 3);
  cert.mod3_leading_term = leading_term_string(r3);
  cert.mod3_leading_ok = r3.degree() == cert.expected_degree && r3.leading() == 2;

  if (cert.ord3_lead != 0) cert.failures.push_back("leading coefficient divisible by 3");
  if (cert.degree_asserted) {
    if (cert.degree != cert.expected_degree) {
      cert.failures.push_back("degree " + std::to_string(cert.degree) + " != " + std::to_string(cert.expected_degree));
    }
    if (!cert.mod3_leading_ok) cert.failures.push_back("mod-3 leading term is " + cert.mod3_leading_term);
  }
  cert.ok = cert.failures.empty();
  return cert;
}

IntegralityVerdict integrality_certificate(const ZPoly& resultant, const BivarPoly& f_variant) {
  IntegralityVerdict v;
  v.ord3_lead_resultant = leading_data(resultant).ord3;
  const auto lead_x = f_variant.coefficient_in_x(static_cast<std::uint32_t>(f_variant.deg_x()));
  if (lead_x.degree() != 0) throw DegeneracyError("x-leading coefficient is not a constant");
  v.ord3_lead_x = valuation(lead_x.leading(), 3);
  v.pass = v.ord3_lead_resultant == 0 && v.ord3_lead_x == 0;
  return v;
}

IntegralityVerdict integrality_certificate(const CurvePair& c, unsigned jobs) {
  const auto cert = certify_resultant(c, jobs);
  return integrality_certificate(cert.resultant, build_F_variant(c.n, c.tail_i));
}

SolveResult solve_pcf(const CurvePair& c, const ZPoly& resultant, const SolveOptions& opts) {
  check_pair(c);
  if (resultant.is_zero()) throw DegeneracyError("resultant is identically zero");
  if (resultant.degree() > opts.max_degree) {
    throw ResourceLimitError("resultant degree " + std::to_string(resultant.degree()) + " exceeds numeric budget " +
                             std::to_string(opts.max_degree));
  }
  const auto F = build_F_variant(c.n, c.tail_i);
  const auto G = build_G_variant(c.m, c.tail_j);
  const NumericPoly nF(F), nG(G);
  const NumericPoly nFx(partial_derivative(F, Var::X)), nFy(partial_derivative(F, Var::Y));
  const NumericPoly nGx(partial_derivative(G, Var::X)), nGy(partial_derivative(G, Var::Y));
  const NumericPoly nJ(jacobian(c));
  const NumericPoly periodicF(build_F(c.n)), periodicG(build_G(c.m));

  RootOptions root_opts;
  if (opts.seed != 0) {
    std::mt19937_64 rng(opts.seed);
    root_opts.start_angle += std::uniform_real_distribution<long double>(0, 0.1L)(rng);
  }

  // Roots of R grouped by multiplicity, then merged if numerically close.
  struct Cluster {
    cld beta;
    int mult;
  };
  std::vector<Cluster> clusters;
  const auto factors = squarefree_decomposition(resultant);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() <= 0) continue;
    for (const auto& b : aberth_roots(factors[k], root_opts)) {
      auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& cl) {
        return std::abs(cl.beta - b) <= opts.cluster_radius * (1 + std::abs(b));
      });
      if (it == clusters.end()) {
        clusters.push_back({b, static_cast<int>(k + 1)});
      } else {
        it->mult += static_cast<int>(k + 1);
      }
    }
  }

  SolveResult out;
  out.clusters = clusters.size();
  out.root_count_ok = true;
  for (const auto& cl : clusters) {
    const auto g_at_beta = specialize_y(G, cl.beta);
    int matched = 0;
    for (const auto& a0 : aberth_roots(specialize_y(F, cl.beta), root_opts, "F at a resultant root")) {
      cld g = 0;
      long double scale = 0, apow = 1;
      for (std::size_t e = 0; e < g_at_beta.size(); ++e) {
        scale += std::abs(g_at_beta[e]) * apow;
        apow *= std::abs(a0);
      }
      for (auto it = g_at_beta.rbegin(); it != g_at_beta.rend(); ++it) g = g * a0 + *it;
      if (std::abs(g) > opts.tol * (1 + scale)) continue;
      ++matched;

      // Joint Newton on (F, G) in (alpha, beta).
      cld a = a0, b = cl.beta;
      long double best = nF.relative(a, b) + nG.relative(a, b);
      for (int step = 0; step < 30; ++step) {
        const cld f = nF.value(a, b), gv = nG.value(a, b);
        const cld fx = nFx.value(a, b), fy = nFy.value(a, b), gx = nGx.value(a, b), gy = nGy.value(a, b);
        const cld det = fx * gy - fy * gx;
        if (det == cld(0)) break;
        const cld da = (f * gy - gv * fy) / det;
        const cld db = (fx * gv - gx * f) / det;
        const cld na = a - da, nb = b - db;
        const long double r = nF.relative(na, nb) + nG.relative(na, nb);
        if (!(r < best)) break;
        a = na;
        b = nb;
        best = r;
      }

      PCFSolution s;
      s.alpha = to_double(a);
      s.beta = to_double(b);
      s.residual_F = static_cast<double>(nF.relative(a, b));
      s.residual_G = static_cast<double>(nG.relative(a, b));
      s.jacobian_value = to_double(nJ.value(a, b));
      s.multiplicity_hint = cl.mult;
      if (c.tail_i == 1 && periodicF.relative(a, b) <= kResidualThreshold) s.strict = false;
      if (c.tail_j == 1 && periodicG.relative(a, b) <= kResidualThreshold) s.strict = false;
      out.solutions.push_back(s);
    }
    if (matched != cl.mult) out.root_count_ok = false;
  }

  std::sort(out.solutions.begin(), out.solutions.end(), [](const PCFSolution& x, const PCFSolution& y) {
    return std::tuple(x.beta.real(), x.beta.imag(), x.alpha.real(), x.alpha.imag()) <
           std::tuple(y.beta.real(), y.beta.imag(), y.alpha.real(), y.alpha.imag());
  });
  // Two seeds converging to one point would double count an intersection.
  for (std::size_t i = 0; i < out.solutions.size(); ++i)
    for (std::size_t j = i + 1; j < out.solutions.size(); ++j) {
      const auto& x = out.solutions[i];
      const auto& y = out.solutions[j];
      if (std::abs(x.alpha - y.alpha) + std::abs(x.beta - y.beta) <= opts.cluster_radius) out.root_count_ok = false;
    }
  return out;
}

SolveResult solve_pcf(const CurvePair& c, const SolveOptions& opts) {
  return solve_pcf(c, certify_resultant(c).resultant, opts);
}

TransversalityReport transversality_report(const CurvePair& c, const ReportOptions& opts) {
  check_pair(c);
  if (std::max(c.n, c.m) > opts.max_n) {
    throw ResourceLimitError("period " + std::to_string(std::max(c.n, c.m)) + " exceeds limit max_n=" +
                             std::to_string(opts.max_n));
  }
  TransversalityReport r;
  r.curves = c;

  const auto rc = certify_resultant(c, opts.jobs, opts.max_sum);
  r.resultant_degree = rc.degree;
  r.expected_degree = rc.expected_degree;
  r.degree_asserted = rc.degree_asserted;
  r.lead_coeff = rc.lead.get_str();
  r.lead_coeff_ord3 = rc.ord3_lead;
  r.mod3_leading_term = rc.mod3_leading_term;
  for (const auto& f : rc.failures) r.failures.push_back("resultant: " + f);

  const auto jc = certify_jacobian_mod3(jacobian(c, opts.max_n));
  r.jacobian_mod3_ok = jc.ok;
  r.K_poly_present = jc.ok;
  if (!jc.ok) {
    BivarPoly culprit;
    culprit += BivarPoly::monomial(1, jc.offending->ex, jc.offending->ey);
    r.jacobian_failure = "coefficient " + jc.offending_coefficient.get_str() + " at " + culprit.to_string();
    r.failures.push_back("jacobian: " + r.jacobian_failure);
  }

  if (!rc.resultant.is_zero()) {
    const auto iv = integrality_certificate(rc.resultant, build_F_variant(c.n, c.tail_i, opts.max_n));
    r.integrality_ok = iv.pass;
    if (!iv.pass) r.failures.push_back("integrality: leading coefficient not a 3-adic unit");
  }
  r.partials = partial_congruences(c, opts.max_n);

  bool numeric_ok = true;
  if (opts.numeric && !rc.resultant.is_zero()) {
    const auto sr = solve_pcf(c, rc.resultant, opts.solve);
    r.solutions = sr.solutions;
    r.root_count_ok = sr.root_count_ok;
    double min_j = std::numeric_limits<double>::infinity();
    for (const auto& s : r.solutions) {
      min_j = std::min(min_j, std::abs(s.jacobian_value));
      r.max_residual = std::max({r.max_residual, s.residual_F, s.residual_G});
    }
    r.min_abs_J = r.solutions.empty() ? 0.0 : min_j;
    if (!r.root_count_ok) r.failures.push_back("numeric: solution count does not match resultant multiplicities");
    if (r.max_residual > kResidualThreshold) r.failures.push_back("numeric: residual above threshold");
    if (r.solutions.empty() || r.min_abs_J < kTransversalityThreshold)
      r.failures.push_back("numeric: |J| below transversality threshold");
    numeric_ok = r.root_count_ok && r.max_residual <= kResidualThreshold && !r.solutions.empty() &&
                 r.min_abs_J >= kTransversalityThreshold;
  }
  r.overall = rc.ok && jc.ok && r.integrality_ok && numeric_ok;
  return r;
}

// ---- serialization ----------------------------------------------------------

namespace {

nlohmann::json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }
std::complex<double> complex_from(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

nlohmann::json optional_int(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }
std::optional<int> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

nlohmann::json to_json(const TransversalityReport& r) {
  nlohmann::json j;
  j["n"] = r.curves.n;
  j["m"] = r.curves.m;
  j["tails"] = {r.curves.tail_i, r.curves.tail_j};
  j["resultant_degree"] = r.resultant_degree;
  j["expected_degree"] = r.expected_degree;
  j["degree_asserted"] = r.degree_asserted;
  j["lead_coeff"] = r.lead_coeff;
  j["lead_coeff_ord3"] = r.lead_coeff_ord3;
  j["mod3_leading_term"] = r.mod3_leading_term;
  j["jacobian_mod3_ok"] = r.jacobian_mod3_ok;
  j["K_poly_present"] = r.K_poly_present;
  j["jacobian_failure"] = r.jacobian_failure;
  j["integrality_ok"] = r.integrality_ok;
  auto partials = nlohmann::json::array();
  for (const auto& p : r.partials)
    partials.push_back({{"name", p.name}, {"derived", optional_int(p.derived)}, {"stated", optional_int(p.stated)}});
  j["partials_mod3"] = partials;
  auto sols = nlohmann::json::array();
  for (const auto& s : r.solutions) {
    sols.push_back({{"alpha", complex_json(s.alpha)},
                    {"beta", complex_json(s.beta)},
                    {"residual_F", s.residual_F},
                    {"residual_G", s.residual_G},
                    {"jacobian_value", complex_json(s.jacobian_value)},
                    {"multiplicity_hint", s.multiplicity_hint},
                    {"strict", s.strict}});
  }
  j["solutions"] = sols;
  j["root_count_ok"] = r.root_count_ok;
  j["min_abs_J"] = r.min_abs_J;
  j["max_residual"] = r.max_residual;
  j["overall"] = r.overall ? "pass" : "fail";
  j["failures"] = r.failures;
  return j;
}

TransversalityReport report_from_json(const nlohmann::json& j) {
  TransversalityReport r;
  r.curves = {j.at("n").get<unsigned>(), j.at("m").get<unsigned>(), j.at("tails").at(0).get<unsigned>(),
              j.at("tails").at(1).get<unsigned>()};
  r.resultant_degree = j.at("resultant_degree").get<long>();
  r.expected_degree = j.at("expected_degree").get<long>();
  r.degree_asserted = j.at("degree_asserted").get<bool>();
  r.lead_coeff = j.at("lead_coeff").get<std::string>();
  r.lead_coeff_ord3 = j.at("lead_coeff_ord3").get<unsigned>();
  r.mod3_leading_term = j.at("mod3_leading_term").get<std::string>();
  r.jacobian_mod3_ok = j.at("jacobian_mod3_ok").get<bool>();
  r.K_poly_present = j.at("K_poly_present").get<bool>();
  r.jacobian_failure = j.at("jacobian_failure").get<std::string>();
  r.integrality_ok = j.at("integrality_ok").get<bool>();
  for (const auto& p : j.at("partials_mod3"))
    r.partials.push_back({p.at("name").get<std::string>(), optional_from(p.at("derived")), optional_from(p.at("stated"))});
  for (const auto& s : j.at("solutions")) {
    PCFSolution x;
    x.alpha = complex_from(s.at("alpha"));
    x.beta = complex_from(s.at("beta"));
    x.residual_F = s.at("residual_F").get<double>();
    x.residual_G = s.at("residual_G").get<double>();
    x.jacobian_value = complex_from(s.at("jacobian_value"));
    x.multiplicity_hint = s.at("multiplicity_hint").get<int>();
    x.strict = s.at("strict").get<bool>();
    r.solutions.push_back(x);
  }
  r.root_count_ok = j.at("root_count_ok").get<bool>();
  r.min_abs_J = j.at("min_abs_J").get<double>();
  r.max_residual = j.at("max_residual").get<double>();
  r.overall = j.at("overall").get<std::string>() == "pass";
  r.failures = j.at("failures").get<std::vector<std::string>>();
  return r;
}

std::string to_text(const TransversalityReport& r) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "curves " << r.curves.label() << "\n";
  os << "  resultant degree   " << r.resultant_degree << " (expected " << r.expected_degree
     << (r.degree_asserted ? ", asserted" : ", observed only") << ")\n";
  os << "  leading coeff      " << r.lead_coeff << "  |lead| " << (r.lead_coeff.starts_with('-') ? r.lead_coeff.substr(1) : r.lead_coeff)
     << "  ord_3 " << r.lead_coeff_ord3 << "\n";
  os << "  mod 3 leading term " << r.mod3_leading_term << "\n";
  os << "  J = 1 mod 3        " << yes(r.jacobian_mod3_ok);
  if (!r.jacobian_failure.empty()) os << " (" << r.jacobian_failure << ")";
  os << "\n  3-adic integrality " << yes(r.integrality_ok) << "\n";
  os << "  partials mod 3    ";
  for (const auto& p : r.partials) {
    os << " " << p.name << "=" << (p.derived ? std::to_string(*p.derived) : "?");
    if (p.stated && p.stated != p.derived) os << " (stated " << *p.stated << ")";
  }
  os << "\n  solutions          " << r.solutions.size() << (r.root_count_ok ? " (counts match R)" : " (COUNT MISMATCH)")
     << "\n";
  char buf[256];
  for (const auto& s : r.solutions) {
    std::snprintf(buf, sizeof buf, "    alpha=%+.12f%+.12fi beta=%+.12f%+.12fi J=%+.9g%+.9gi mult=%d%s\n", s.alpha.real(),
                  s.alpha.imag(), s.beta.real(), s.beta.imag(), s.jacobian_value.real(), s.jacobian_value.imag(),
                  s.multiplicity_hint, s.strict ? "" : " non-strict");
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "  min |J| %.6g  max residual %.3g\n", r.min_abs_J, r.max_residual);
  os << buf;
  for (const auto& f : r.failures) os << "  FAILURE: " << f << "\n";
  os << "  overall            " << (r.overall ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace cubicrig
