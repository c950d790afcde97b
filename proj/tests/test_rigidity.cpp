#include <doctest.h>

#include <cmath>

#include "cubicrig/errors.hpp"
#include "cubicrig/rigidity.hpp"
#include "cubicrig/roots.hpp"

using namespace cubicrig;

namespace {

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

BivarPoly c(long v) { return BivarPoly(v); }

bool close(std::complex<double> a, std::complex<double> b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("jacobian: worked examples") {
  CHECK(jacobian({1, 1, 0, 0}) == c(-12) * X * X - c(2));
  CHECK(jacobian({1, 1, 1, 0}) == c(-12) * X * X + c(1));
  CHECK(reduce_mod(jacobian({2, 1, 0, 0}), 3) == ModBivarPoly(3, 1));
}

TEST_CASE("jacobian certificate") {
  const auto k = certify_jacobian_mod3(c(-12) * X * X - c(2));
  CHECK(k.ok);
  CHECK(k.K == c(-4) * X * X - c(1));
  const auto one = certify_jacobian_mod3(c(1));
  CHECK(one.ok);
  CHECK(one.K.is_zero());
  const auto bad = certify_jacobian_mod3(X);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.offending.has_value());
  CHECK(bad.offending->ex == 1);
  CHECK(bad.offending->ey == 0);
  CHECK(bad.offending_coefficient == 1);
}

TEST_CASE("jacobian is 1 mod 3 for n + m <= 5, all tails") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 1; n + m <= 5; ++m)
      for (unsigned ti = 0; ti <= 1; ++ti)
        for (unsigned tj = 0; tj <= 1; ++tj) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(ti);
          CAPTURE(tj);
          const CurvePair cp{n, m, ti, tj};
          const auto J = jacobian(cp);
          const auto cert = certify_jacobian_mod3(J);
          REQUIRE(cert.ok);
          CHECK(c(1) + c(3) * cert.K == J);
        }
}

TEST_CASE("partial congruences mod 3") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned ti = 0; ti <= 1; ++ti)
      for (unsigned tj = 0; tj <= 1; ++tj) {
        const auto pc = partial_congruences({n, n, ti, tj});
        REQUIRE(pc.size() == 4);
        CHECK(pc[0].derived == -1);
        CHECK(pc[1].derived == 1);
        CHECK(pc[2].derived == 1);
        CHECK(pc[3].derived == 1);
        // det [[Fx, Gx], [Fy, Gy]] = -1 - 1 = -2 = 1 mod 3
        CHECK((*pc[0].derived * *pc[3].derived - *pc[1].derived * *pc[2].derived + 3) % 3 == 1);
      }
  const auto tail = partial_congruences({1, 1, 1, 0});
  CHECK(tail[0].stated == 1);
  CHECK(tail[1].stated == -1);
  CHECK_FALSE(tail[2].stated.has_value());
}

TEST_CASE("resultant certificates") {
  const auto r11 = certify_resultant({1, 1, 0, 0});
  CHECK(r11.ok);
  CHECK(r11.degree == 3);
  CHECK(r11.lead == -64);
  CHECK(r11.ord3_lead == 0);
  CHECK(r11.mod3_leading_term == "2*y^3");
  CHECK(certify_resultant({1, 2, 0, 0}).degree == 9);
  const auto r22 = certify_resultant({2, 2, 0, 0});
  CHECK(r22.degree == 27);
  CHECK(r22.ord3_lead == 0);
  CHECK_THROWS_AS(certify_resultant({4, 3, 0, 0}), ResourceLimitError);
}

TEST_CASE("resultant certificates, n + m <= 5") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 1; n + m <= 5; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto r = certify_resultant({n, m, 0, 0});
      CHECK(r.ok);
      CHECK(r.degree == r.expected_degree);
    }
}

TEST_CASE("tail resultants: unit leading coefficient, degree observed") {
  std::string seen;
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned ti = 0; ti <= 1; ++ti)
        for (unsigned tj = 0; tj <= 1; ++tj) {
          if (ti == 0 && tj == 0) continue;
          const auto r = certify_resultant({n, m, ti, tj});
          CHECK_FALSE(r.degree_asserted);
          CHECK(r.ord3_lead == 0);
          seen += " " + std::to_string(r.degree) + "/" + std::to_string(r.expected_degree);
        }
  MESSAGE("observed/expected tail degrees:" << seen);
}

TEST_CASE("integrality") {
  const auto v = integrality_certificate(CurvePair{1, 1, 0, 0});
  CHECK(v.pass);
  CHECK(integrality_certificate(CurvePair{2, 1, 0, 0}).ord3_lead_x == 0);
  CHECK_FALSE(integrality_certificate(ZPoly(std::vector<mpz_class>{1, 3}), build_F(1)).pass);
}

TEST_CASE("Aberth roots") {
  // (z - 1)(z + 2)(z - i)(z + i) = z^4 + z^3 - z^2 + z - 2
  const auto r = aberth_roots(ZPoly(std::vector<mpz_class>{-2, 1, -1, 1, 1}));
  REQUIRE(r.size() == 4);
  for (const cld want : {cld(1), cld(-2), cld(0, 1), cld(0, -1)}) {
    const bool found = std::any_of(r.begin(), r.end(), [&](cld z) { return std::abs(z - want) < 1e-15L; });
    CHECK(found);
  }
  CHECK(aberth_roots(ZPoly(mpz_class(5))).empty());
}

TEST_CASE("solutions of the first system") {
  const auto sr = solve_pcf({1, 1, 0, 0});
  REQUIRE(sr.solutions.size() == 3);
  CHECK(sr.root_count_ok);
  CHECK(sr.clusters == 1);
  const double h = 1 / std::sqrt(2.0);
  CHECK(close(sr.solutions[0].alpha, {0, -h}, 1e-12));
  CHECK(close(sr.solutions[1].alpha, {0, 0}, 1e-12));
  CHECK(close(sr.solutions[2].alpha, {0, h}, 1e-12));
  CHECK(close(sr.solutions[0].jacobian_value, {4, 0}, 1e-8));
  CHECK(close(sr.solutions[1].jacobian_value, {-2, 0}, 1e-8));
  CHECK(close(sr.solutions[2].jacobian_value, {4, 0}, 1e-8));
  for (const auto& s : sr.solutions) {
    CHECK(s.beta == std::complex<double>(0, 0));
    CHECK(s.multiplicity_hint == 3);
  }
}

TEST_CASE("numeric exhibit, n + m <= 4, all tails") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 1; n + m <= 4; ++m)
      for (unsigned ti = 0; ti <= 1; ++ti)
        for (unsigned tj = 0; tj <= 1; ++tj) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(ti);
          CAPTURE(tj);
          const auto r = transversality_report({n, m, ti, tj});
          CHECK(r.overall);
          CHECK(r.root_count_ok);
          CHECK(r.max_residual <= kResidualThreshold);
          CHECK(r.min_abs_J >= kTransversalityThreshold);
          std::size_t counted = 0;
          for (const auto& s : r.solutions) counted += 1;
          CHECK(static_cast<long>(counted) == r.resultant_degree);
          for (const auto& f : r.failures) MESSAGE(f);
        }
}

TEST_CASE("tail report flags the periodic point") {
  const auto r = transversality_report({1, 1, 1, 1});
  CHECK(r.overall);
  const auto non_strict = std::count_if(r.solutions.begin(), r.solutions.end(), [](const PCFSolution& s) { return !s.strict; });
  CHECK(non_strict == 1);
}

TEST_CASE("report JSON round trip") {
  for (const CurvePair cp : {CurvePair{1, 1, 0, 0}, CurvePair{2, 1, 0, 1}}) {
    const auto r = transversality_report(cp);
    const auto text = to_json(r).dump();
    CHECK(report_from_json(nlohmann::json::parse(text)) == r);
    CHECK(to_json(report_from_json(nlohmann::json::parse(text))).dump() == text);
  }
  const auto t = to_text(transversality_report({1, 1, 0, 0}));
  CHECK(t.find("overall            PASS") != std::string::npos);
  CHECK(t.find("-64") != std::string::npos);
}
