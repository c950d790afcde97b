#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "cubicrig/cubicdyn.hpp"
#include "cubicrig/errors.hpp"
#include "cubicrig/frobres.hpp"
#include "cubicrig/rigidity.hpp"
#include "cubicrig/sylvester.hpp"

namespace py = pybind11;
using namespace cubicrig;

namespace {

using Terms = std::map<std::pair<std::uint32_t, std::uint32_t>, py::int_>;

py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

mpz_class from_py(const py::int_& v) { return mpz_class(py::str(py::object(v)).cast<std::string>()); }

Terms terms_of(const BivarPoly& p) {
  Terms out;
  for (const auto& [m, c] : p.terms()) out[{m.ex, m.ey}] = to_py(c);
  return out;
}

BivarPoly poly_of(const Terms& t) {
  std::vector<std::pair<Monomial, mpz_class>> terms;
  for (const auto& [e, c] : t) terms.push_back({Monomial{e.first, e.second}, from_py(c)});
  return BivarPoly::from_terms(terms);
}

py::list coeffs_of(const ZPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(cubicrig, m) {
  m.doc() = "Exact certificates for critical-orbit curves of the cubic family z^3 - 3x^2 z + y";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_ValueError);
  py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);

  m.def(
      "iterate", [](unsigned n, int sign) { return terms_of(iterate_critical(n, sign).poly); }, py::arg("n"),
      py::arg("sign") = 1, "Terms {(ex, ey): coeff} of f^n(sign * x).");
  m.def(
      "curve_F", [](unsigned n, unsigned tail) { return terms_of(build_F_variant(n, tail)); }, py::arg("n"),
      py::arg("tail") = 0);
  m.def(
      "curve_G", [](unsigned mm, unsigned tail) { return terms_of(build_G_variant(mm, tail)); }, py::arg("m"),
      py::arg("tail") = 0);
  m.def(
      "to_string", [](const Terms& t) { return poly_of(t).to_string(); }, py::arg("terms"));
  m.def(
      "factor_identity", [](unsigned n) { return verify_factor_identity(n).pass; }, py::arg("n"));

  m.def(
      "coefficient_profile",
      [](unsigned n) {
        const auto prof = coefficient_profile(n);
        py::dict d;
        d["n"] = n;
        d["rows"] = json_to_py(profile_to_json(prof));
        d["pass"] = prof.pass();
        return d;
      },
      py::arg("n"));

  m.def(
      "resultant_x",
      [](const Terms& f, const Terms& g) {
        const BivarPoly pf = poly_of(f), pg = poly_of(g);
        ZPoly r;
        {
          py::gil_scoped_release release;
          r = resultant_x(pf, pg);
        }
        return coeffs_of(r);
      },
      py::arg("f"), py::arg("g"), "Coefficients, constant first, of Res_x(f, g) in Z[y].");

  m.def(
      "certify_resultant",
      [](unsigned n, unsigned mm, unsigned ti, unsigned tj, unsigned jobs) {
        ResultantCertificate c;
        {
          py::gil_scoped_release release;
          c = certify_resultant({n, mm, ti, tj}, jobs);
        }
        py::dict d;
        d["degree"] = c.degree;
        d["expected_degree"] = c.expected_degree;
        d["lead"] = to_py(c.lead);
        d["ord3_lead"] = c.ord3_lead;
        d["mod3_leading_term"] = c.mod3_leading_term;
        d["ok"] = c.ok;
        d["coefficients"] = coeffs_of(c.resultant);
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("tail_i") = 0, py::arg("tail_j") = 0, py::arg("jobs") = 1);

  m.def(
      "jacobian_mod3_ok",
      [](unsigned n, unsigned mm, unsigned ti, unsigned tj) { return certify_jacobian_mod3(jacobian({n, mm, ti, tj})).ok; },
      py::arg("n"), py::arg("m"), py::arg("tail_i") = 0, py::arg("tail_j") = 0);

  m.def(
      "solve",
      [](unsigned n, unsigned mm, unsigned ti, unsigned tj, double tol, std::uint64_t seed) {
        SolveOptions o;
        o.tol = tol;
        o.seed = seed;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve_pcf({n, mm, ti, tj}, o);
        }
        py::list out;
        for (const auto& s : r.solutions) {
          py::dict d;
          d["alpha"] = s.alpha;
          d["beta"] = s.beta;
          d["J"] = s.jacobian_value;
          d["residual"] = std::max(s.residual_F, s.residual_G);
          d["strict"] = s.strict;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("tail_i") = 0, py::arg("tail_j") = 0, py::arg("tol") = 1e-6,
      py::arg("seed") = 0);

  m.def(
      "report",
      [](unsigned n, unsigned mm, unsigned ti, unsigned tj, unsigned jobs, bool numeric) {
        ReportOptions o;
        o.jobs = jobs;
        o.numeric = numeric;
        TransversalityReport r;
        {
          py::gil_scoped_release release;
          r = transversality_report({n, mm, ti, tj}, o);
        }
        return json_to_py(to_json(r));
      },
      py::arg("n"), py::arg("m"), py::arg("tail_i") = 0, py::arg("tail_j") = 0, py::arg("jobs") = 1,
      py::arg("numeric") = true, "Full transversality report as a dict.");

  m.def(
      "artin_schreier",
      [](std::uint64_t p, unsigned n, unsigned mm, bool oracle) {
        const VarNames ab{"A", "B"};
        py::dict d;
        d["closed_form"] = artin_schreier_resultant_closed(p, n, mm).to_string(ab);
        if (oracle) {
          const auto o = artin_schreier_resultant_oracle(p, n, mm);
          d["oracle"] = o.determinant.to_string(ab);
          d["sign"] = o.sign;
        }
        return d;
      },
      py::arg("p"), py::arg("n"), py::arg("m"), py::arg("oracle") = false);

  m.def(
      "sum_product",
      [](std::uint64_t p, unsigned n, unsigned mm) {
        const auto closed = sum_product_closed(p, n, mm);
        const auto bf = brute_force_sum_product(p, n, mm);
        return py::make_tuple(closed.coeffs(), bf.product.coeffs());
      },
      py::arg("p"), py::arg("n"), py::arg("m"), "(closed form, enumeration) coefficient lists over F_p.");
}
