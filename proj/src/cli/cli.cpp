#include "cubicrig/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cubicrig/cubicdyn.hpp"
#include "cubicrig/errors.hpp"
#include "cubicrig/frobres.hpp"
#include "cubicrig/rigidity.hpp"
#include "cubicrig/sylvester.hpp"

namespace cubicrig::cli {

namespace {

using nlohmann::json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string complex_text(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%+.15g%+.15gi", z.real(), z.imag());
  return buf;
}

void check_limits(const RunConfig& cfg, unsigned n, unsigned m) {
  if (std::max(n, m) > cfg.limits.max_n) {
    throw ResourceLimitError("period " + std::to_string(std::max(n, m)) + " exceeds limit max_n=" +
                             std::to_string(cfg.limits.max_n) + " (raise with --max-n or CUBICRIG_MAX_N)");
  }
}

ReportOptions report_options(const RunConfig& cfg) {
  ReportOptions o;
  o.jobs = cfg.jobs;
  o.max_n = cfg.limits.max_n;
  o.numeric = cfg.numeric;
  o.solve.tol = cfg.tol;
  o.solve.seed = cfg.seed;
  return o;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_limits(cfg, cfg.n, cfg.m);
  const auto r = transversality_report({cfg.n, cfg.m, cfg.tail_i, cfg.tail_j}, report_options(cfg));
  if (cfg.emit == Emit::Json) {
    out << to_json(r).dump(2) << "\n";
  } else if (cfg.emit == Emit::Csv) {
    out << "alpha_re,alpha_im,beta_re,beta_im,residual_F,residual_G,J_re,J_im,multiplicity_hint,strict\n";
    for (const auto& s : r.solutions) {
      out << fmt("%.17g", s.alpha.real()) << "," << fmt("%.17g", s.alpha.imag()) << "," << fmt("%.17g", s.beta.real())
          << "," << fmt("%.17g", s.beta.imag()) << "," << fmt("%.6g", s.residual_F) << "," << fmt("%.6g", s.residual_G)
          << "," << fmt("%.17g", s.jacobian_value.real()) << "," << fmt("%.17g", s.jacobian_value.imag()) << ","
          << s.multiplicity_hint << "," << (s.strict ? 1 : 0) << "\n";
    }
  } else {
    out << to_text(r);
  }
  return r.overall ? kPass : kCertificateFailure;
}

// ---- resultant ---------------------------------------------------------------

int cmd_resultant(const RunConfig& cfg, std::ostream& out) {
  check_limits(cfg, cfg.n, cfg.m);
  if (cfg.method != "ff" && cfg.method != "ei" && cfg.method != "both")
    throw std::invalid_argument("--method must be ff, ei or both");
  const CurvePair cp{cfg.n, cfg.m, cfg.tail_i, cfg.tail_j};
  const auto F = build_F_variant(cp.n, cp.tail_i, cfg.limits.max_n);
  const auto G = build_G_variant(cp.m, cp.tail_j, cfg.limits.max_n);
  const auto S = build_sylvester(F, G);
  long bound = 1;
  for (unsigned i = 0; i + 1 < cp.n + cp.m; ++i) bound *= 3;
  const long expected = bound;
  if (!cp.periodic()) bound = generic_degree_bound(F, G);

  std::optional<ZPoly> ff, ei;
  if (cfg.method != "ei") {
    if (S.size() > cfg.limits.max_size) {
      throw ResourceLimitError("Sylvester size " + std::to_string(S.size()) + " exceeds limit max_size=" +
                               std::to_string(cfg.limits.max_size));
    }
    ff = determinant_fraction_free(S);
  }
  if (cfg.method != "ff") ei = determinant_eval_interp(S, bound, cfg.jobs);
  const ZPoly& R = ei ? *ei : *ff;
  const bool agree = !(ff && ei) || *ff == *ei;

  json j;
  j["n"] = cp.n;
  j["m"] = cp.m;
  j["tails"] = {cp.tail_i, cp.tail_j};
  j["sylvester_size"] = S.size();
  j["method"] = cfg.method;
  j["expected_degree"] = expected;
  bool ok = agree;
  if (R.is_zero()) {
    j["degree"] = nullptr;
    ok = false;
  } else {
    const auto ld = leading_data(R);
    const auto r3 = reduce_mod(R, 3);
    j["degree"] = ld.degree;
    j["lead_coeff"] = ld.lead.get_str();
    j["ord3_lead"] = ld.ord3;
    std::ostringstream lt;
    lt << r3.leading() << "*y^" << r3.degree();
    j["mod3_leading_term"] = r3.is_zero() ? "0" : lt.str();
    ok = ok && ld.ord3 == 0 && (!cp.periodic() || ld.degree == expected);
  }
  j["method_agreement"] = (ff && ei) ? json(agree) : json(nullptr);
  if (cfg.print_poly) j["resultant"] = R.to_string();

  if (cfg.emit == Emit::Json) {
    out << j.dump(2) << "\n";
  } else if (cfg.emit == Emit::Csv) {
    out << "n,m,tail_i,tail_j,degree,expected,lead_coeff,ord3_lead,mod3_leading_term,method_agreement\n";
    out << cp.n << "," << cp.m << "," << cp.tail_i << "," << cp.tail_j << "," << j["degree"].dump() << "," << expected
        << "," << j.value("lead_coeff", "") << "," << j.value("ord3_lead", 0) << "," << j.value("mod3_leading_term", "")
        << "," << j["method_agreement"].dump() << "\n";
  } else {
    out << "Res_x(F, G) for " << cp.label() << ", Sylvester size " << S.size() << ", method " << cfg.method << "\n";
    out << "  degree            " << j["degree"].dump() << " (expected " << expected << ")\n";
    if (j.contains("lead_coeff")) {
      const std::string lead = j["lead_coeff"];
      out << "  leading coeff     " << lead << "  |lead| " << (lead[0] == '-' ? lead.substr(1) : lead) << "\n";
      out << "  ord_3(lead)       " << j["ord3_lead"].get<unsigned>() << "\n";
      out << "  mod 3 leading     " << j["mod3_leading_term"].get<std::string>() << "\n";
    }
    if (ff && ei) out << "  ff == ei          " << (agree ? "yes" : "NO") << "\n";
    if (cfg.print_poly) out << "  R(y) = " << R.to_string() << "\n";
  }
  return ok ? kPass : kCertificateFailure;
}

// ---- artin-schreier ----------------------------------------------------------

int cmd_artin_schreier(const RunConfig& cfg, std::ostream& out) {
  const VarNames ab{"A", "B"};
  const auto closed = artin_schreier_resultant_closed(cfg.p, cfg.n, cfg.m);
  std::optional<ArtinSchreierOracle> oracle;
  if (cfg.oracle) oracle = artin_schreier_resultant_oracle(cfg.p, cfg.n, cfg.m, cfg.limits.max_size);
  const bool ok = !oracle || oracle->sign != 0;

  json j;
  j["p"] = cfg.p;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["d"] = std::gcd(cfg.n, cfg.m);
  j["closed_form"] = closed.to_string(ab);
  if (oracle) {
    j["oracle"] = oracle->determinant.to_string(ab);
    j["sylvester_size"] = oracle->matrix_size;
    j["sign"] = oracle->sign;
    j["sign_determined"] = oracle->sign_determined;
  }
  if (cfg.emit == Emit::Json) {
    out << j.dump(2) << "\n";
  } else if (cfg.emit == Emit::Csv) {
    out << "p,n,m,d,closed_form,oracle,sign,sign_determined\n";
    out << cfg.p << "," << cfg.n << "," << cfg.m << "," << j["d"].dump() << "," << closed.to_string(ab) << ","
        << (oracle ? oracle->determinant.to_string(ab) : "") << "," << (oracle ? std::to_string(oracle->sign) : "")
        << "," << (oracle ? (oracle->sign_determined ? "1" : "0") : "") << "\n";
  } else {
    out << "Res(x^(" << cfg.p << "^" << cfg.n << ") - x - A, x^(" << cfg.p << "^" << cfg.m << ")" << " - x - B) over F_" << cfg.p
        << "\n";
    out << "  closed form  " << closed.to_string(ab) << "\n";
    if (oracle) {
      out << "  oracle       " << oracle->determinant.to_string(ab) << "  (" << oracle->matrix_size << "x"
          << oracle->matrix_size << " Sylvester)\n";
      out << "  sign         ";
      if (oracle->sign == 0) {
        out << "MISMATCH\n";
      } else {
        out << (oracle->sign > 0 ? "+1" : "-1") << (oracle->sign_determined ? "" : " (characteristic 2: signs agree)")
            << "\n";
      }
    }
  }
  return ok ? kPass : kCertificateFailure;
}

// ---- profile -----------------------------------------------------------------

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  check_limits(cfg, cfg.n, 1);
  const auto prof = coefficient_profile(cfg.n, cfg.limits.max_n);
  const auto exact = exact_degree_observation(prof);
  auto deg = [](long d) { return d == kMinusInfinity ? std::string("-inf") : std::to_string(d); };
  if (cfg.emit == Emit::Json) {
    json j;
    j["n"] = prof.n;
    j["rows"] = profile_to_json(prof);
    j["bounds_ok"] = prof.bounds_ok;
    j["leading_ok"] = prof.leading_ok;
    j["constant_ok"] = prof.constant_ok;
    j["first_failing_k"] = prof.first_failing_k ? json(*prof.first_failing_k) : json(nullptr);
    auto obs = json::array();
    for (const auto& e : exact) obs.push_back({{"k", e.k}, {"holds", e.holds}});
    j["exact_degree_observation"] = obs;
    out << j.dump(2) << "\n";
  } else if (cfg.emit == Emit::Csv) {
    out << "n,k,bound,actual_degree,ok,exact_degree_holds\n";
    for (std::size_t i = 0; i < prof.entries.size(); ++i) {
      const auto& e = prof.entries[i];
      out << prof.n << "," << e.k << "," << e.bound << "," << deg(e.actual_degree) << "," << (e.ok() ? 1 : 0) << ","
          << (exact[i].holds ? 1 : 0) << "\n";
    }
  } else {
    out << "f^" << prof.n << "(x) = sum a_k(y) x^(3^n - k), deg a_k <= 4*floor(k/3) - k\n";
    out << "     k  bound  deg a_k  ok   exact-degree pattern (observational)\n";
    char buf[128];
    for (std::size_t i = 0; i < prof.entries.size(); ++i) {
      const auto& e = prof.entries[i];
      std::snprintf(buf, sizeof buf, "%6u %6ld %8s  %-4s %s\n", e.k, e.bound, deg(e.actual_degree).c_str(),
                    e.ok() ? "yes" : "NO", exact[i].holds ? "holds" : "differs");
      out << buf;
    }
    const auto holds = std::count_if(exact.begin(), exact.end(), [](const ExactDegreeRow& r) { return r.holds; });
    out << "a_0 = (-2)^(3^(n-1)): " << (prof.leading_ok ? "yes" : "NO") << "\n";
    out << "a_(3^n) monic of degree 3^(n-1): " << (prof.constant_ok ? "yes" : "NO") << "\n";
    out << "exact-degree pattern holds for " << holds << " of " << exact.size() << " rows (not asserted)\n";
    out << "overall " << (prof.pass() ? "PASS" : "FAIL") << "\n";
  }
  return prof.pass() ? kPass : kCertificateFailure;
}

// ---- solve -------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  check_limits(cfg, cfg.n, cfg.m);
  const CurvePair cp{cfg.n, cfg.m, cfg.tail_i, cfg.tail_j};
  SolveOptions so;
  so.tol = cfg.tol;
  so.seed = cfg.seed;
  const auto rc = certify_resultant(cp, cfg.jobs);
  const auto sr = solve_pcf(cp, rc.resultant, so);
  bool ok = sr.root_count_ok && !sr.solutions.empty();
  for (const auto& s : sr.solutions) {
    ok = ok && std::max(s.residual_F, s.residual_G) <= kResidualThreshold &&
         std::abs(s.jacobian_value) >= kTransversalityThreshold;
  }
  if (cfg.emit == Emit::Json) {
    json j;
    j["n"] = cp.n;
    j["m"] = cp.m;
    j["tails"] = {cp.tail_i, cp.tail_j};
    j["root_count_ok"] = sr.root_count_ok;
    auto arr = json::array();
    for (const auto& s : sr.solutions) {
      arr.push_back({{"alpha", {{"re", s.alpha.real()}, {"im", s.alpha.imag()}}},
                     {"beta", {{"re", s.beta.real()}, {"im", s.beta.imag()}}},
                     {"residual_F", s.residual_F},
                     {"residual_G", s.residual_G},
                     {"jacobian_value", {{"re", s.jacobian_value.real()}, {"im", s.jacobian_value.imag()}}},
                     {"multiplicity_hint", s.multiplicity_hint},
                     {"strict", s.strict}});
    }
    j["solutions"] = arr;
    out << j.dump(2) << "\n";
  } else if (cfg.emit == Emit::Csv) {
    out << "alpha_re,alpha_im,beta_re,beta_im,residual_F,residual_G,J_re,J_im,multiplicity_hint,strict\n";
    for (const auto& s : sr.solutions) {
      out << fmt("%.17g", s.alpha.real()) << "," << fmt("%.17g", s.alpha.imag()) << "," << fmt("%.17g", s.beta.real())
          << "," << fmt("%.17g", s.beta.imag()) << "," << fmt("%.6g", s.residual_F) << "," << fmt("%.6g", s.residual_G)
          << "," << fmt("%.17g", s.jacobian_value.real()) << "," << fmt("%.17g", s.jacobian_value.imag()) << ","
          << s.multiplicity_hint << "," << (s.strict ? 1 : 0) << "\n";
    }
  } else {
    out << sr.solutions.size() << " intersection points of F" << cp.label() << " (resultant degree " << rc.degree
        << ")\n";
    for (const auto& s : sr.solutions) {
      out << "  alpha " << complex_text(s.alpha) << "  beta " << complex_text(s.beta) << "  J "
          << complex_text(s.jacobian_value) << "  res " << fmt("%.2g", std::max(s.residual_F, s.residual_G))
          << (s.strict ? "" : "  non-strict") << "\n";
    }
    out << "root count " << (sr.root_count_ok ? "consistent" : "INCONSISTENT") << "\n";
  }
  return ok ? kPass : kCertificateFailure;
}

// ---- sweep -------------------------------------------------------------------

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = static_cast<unsigned>(std::stoul(s));
      return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, colon))), static_cast<unsigned>(std::stoul(s.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "', expected LO:HI");
  }
}

struct SweepRow {
  CurvePair cp;
  std::optional<TransversalityReport> report;
  std::string error;
};

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto [n0, n1] = parse_range(cfg.n_range);
  const auto [m0, m1] = parse_range(cfg.m_range);
  std::vector<std::pair<unsigned, unsigned>> tails;
  for (const auto& t : cfg.tails) {
    if (t.size() != 2 || (t[0] != '0' && t[0] != '1') || (t[1] != '0' && t[1] != '1'))
      throw std::invalid_argument("bad tail pair '" + t + "', expected one of 00, 01, 10, 11");
    tails.emplace_back(t[0] - '0', t[1] - '0');
  }
  std::vector<SweepRow> rows;
  for (unsigned n = n0; n <= n1 && n0 <= n1; ++n)
    for (unsigned m = m0; m <= m1 && m0 <= m1; ++m)
      for (const auto& [ti, tj] : tails) {
        if (n == 0 || m == 0) throw std::invalid_argument("periods must be >= 1");
        check_limits(cfg, n, m);
        rows.push_back({{n, m, ti, tj}, std::nullopt, {}});
      }

  // Rows run concurrently; output order is the row order above.
  std::atomic<std::size_t> next{0};
  RunConfig inner = cfg;
  inner.jobs = 1;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) {
      try {
        rows[i].report = transversality_report(rows[i].cp, report_options(inner));
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.report && r.report->overall;

  if (cfg.emit == Emit::Json) {
    auto arr = json::array();
    for (const auto& r : rows) {
      if (r.report) {
        arr.push_back(to_json(*r.report));
      } else {
        arr.push_back({{"n", r.cp.n}, {"m", r.cp.m}, {"tails", {r.cp.tail_i, r.cp.tail_j}}, {"error", r.error}, {"overall", "fail"}});
      }
    }
    out << arr.dump(2) << "\n";
  } else if (cfg.emit == Emit::Csv) {
    out << "n,m,tail_i,tail_j,degree,expected,ord3_lead,jac_mod3,num_solutions,min_abs_J,overall\n";
    for (const auto& r : rows) {
      out << r.cp.n << "," << r.cp.m << "," << r.cp.tail_i << "," << r.cp.tail_j << ",";
      if (r.report) {
        const auto& t = *r.report;
        out << t.resultant_degree << "," << t.expected_degree << "," << t.lead_coeff_ord3 << ","
            << (t.jacobian_mod3_ok ? "ok" : "fail") << "," << t.solutions.size() << "," << fmt("%.12g", t.min_abs_J)
            << "," << (t.overall ? "pass" : "fail") << "\n";
      } else {
        out << ",,,,,,error\n";
      }
    }
  } else {
    out << "   n   m  tails  degree  expected  ord3  J=1(3)  sols     min|J|  overall\n";
    char buf[160];
    for (const auto& r : rows) {
      if (r.report) {
        const auto& t = *r.report;
        std::snprintf(buf, sizeof buf, "%4u %3u    %u%u  %6ld  %8ld  %4u  %6s  %4zu  %9.3g  %s\n", r.cp.n, r.cp.m,
                      r.cp.tail_i, r.cp.tail_j, t.resultant_degree, t.expected_degree, t.lead_coeff_ord3,
                      t.jacobian_mod3_ok ? "ok" : "FAIL", t.solutions.size(), t.min_abs_J, t.overall ? "pass" : "FAIL");
      } else {
        std::snprintf(buf, sizeof buf, "%4u %3u    %u%u  error: %s\n", r.cp.n, r.cp.m, r.cp.tail_i, r.cp.tail_j,
                      r.error.c_str());
      }
      out << buf;
    }
    out << rows.size() << " rows, " << (all_pass ? "all pass" : "FAILURES present") << "\n";
  }
  return all_pass ? kPass : kCertificateFailure;
}

template <class T>
void env_override(const char* name, T& target) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return;
  try {
    const unsigned long long parsed = std::stoull(v);
    if (parsed == 0) throw std::invalid_argument("zero");
    target = static_cast<T>(parsed);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("environment variable ") + name + " must be a positive integer");
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.limits.max_n == 0 || cfg.limits.max_size == 0 || cfg.limits.enum_budget == 0)
      throw std::invalid_argument("limits must be positive");
    if (cfg.tail_i > 1 || cfg.tail_j > 1) throw std::invalid_argument("tail lengths must be 0 or 1");
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "resultant") return cmd_resultant(cfg, out);
    if (cfg.subcommand == "artin-schreier") return cmd_artin_schreier(cfg, out);
    if (cfg.subcommand == "profile") return cmd_profile(cfg, out);
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out);
    throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "certificate failure: " << e.what() << "\n";
    return kCertificateFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    env_override("CUBICRIG_MAX_N", cfg.limits.max_n);
    env_override("CUBICRIG_MAX_SIZE", cfg.limits.max_size);
    env_override("CUBICRIG_ENUM_BUDGET", cfg.limits.enum_budget);
    env_override("CUBICRIG_JOBS", cfg.jobs);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Certificates for transversality of critical-orbit curves of cubic polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  std::map<std::string, Emit> emit_map{{"text", Emit::Text}, {"json", Emit::Json}, {"csv", Emit::Csv}};
  app.add_option("--emit", cfg.emit, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(emit_map, CLI::ignore_case));
  app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Concurrent tasks")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized starting points");
  app.add_option("--max-n", cfg.limits.max_n, "Largest iterate count (env CUBICRIG_MAX_N)")->check(CLI::PositiveNumber);
  app.add_option("--max-size", cfg.limits.max_size, "Largest Sylvester size for oracle paths (env CUBICRIG_MAX_SIZE)")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-budget", cfg.limits.enum_budget, "Enumeration budget (env CUBICRIG_ENUM_BUDGET)")
      ->check(CLI::PositiveNumber);

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Period of the first critical point")->required()->check(CLI::PositiveNumber);
    sub->add_option("--m", cfg.m, "Period of the second critical point")->required()->check(CLI::PositiveNumber);
    sub->add_option("--tail-i", cfg.tail_i, "Tail length of the first critical point")->check(CLI::Range(0, 1));
    sub->add_option("--tail-j", cfg.tail_j, "Tail length of the second critical point")->check(CLI::Range(0, 1));
  };

  auto* verify = app.add_subcommand("verify", "Full transversality report for one (n, m, tails)");
  add_pair(verify);
  verify->add_option("--tol", cfg.tol, "Alpha matching tolerance");
  verify->add_flag("!--no-numeric", cfg.numeric, "Skip the numeric exhibit");

  auto* resultant = app.add_subcommand("resultant", "Res_x(F, G) with degree and 3-adic data");
  add_pair(resultant);
  resultant->add_option("--method", cfg.method, "ff, ei or both")->check(CLI::IsMember({"ff", "ei", "both"}));
  resultant->add_flag("--print-poly", cfg.print_poly, "Include the full resultant");

  auto* as = app.add_subcommand("artin-schreier", "Closed form of Res(x^(p^n)-x-A, x^(p^m)-x-B)");
  as->add_option("--p", cfg.p, "Prime")->required();
  as->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  as->add_option("--m", cfg.m)->required()->check(CLI::PositiveNumber);
  as->add_flag("--oracle", cfg.oracle, "Also expand the Sylvester determinant");

  auto* profile = app.add_subcommand("profile", "Degree profile of the coefficients a_k(y)");
  profile->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Numeric intersection points");
  add_pair(solve);
  solve->add_option("--tol", cfg.tol, "Alpha matching tolerance");

  auto* sweep = app.add_subcommand("sweep", "Reports over ranges of (n, m)");
  sweep->add_option("--n-range", cfg.n_range, "LO:HI");
  sweep->add_option("--m-range", cfg.m_range, "LO:HI");
  sweep->add_option("--tails", cfg.tails, "Tail pairs, e.g. 00 11")->delimiter(',');
  sweep->add_flag("!--no-numeric", cfg.numeric, "Skip the numeric exhibit");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  if (cfg.out.empty()) return run(cfg, out, err);
  std::ostringstream buffer;
  const int code = run(cfg, buffer, err);
  std::ofstream file(cfg.out);
  if (!file) {
    err << "cannot open " << cfg.out << " for writing\n";
    return kUsage;
  }
  file << buffer.str();
  return code;
}

}  // namespace cubicrig::cli
