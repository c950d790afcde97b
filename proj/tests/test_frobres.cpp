#include <doctest.h>

#include <random>

#include "cubicrig/errors.hpp"
#include "cubicrig/frobres.hpp"

using namespace cubicrig;

namespace {

using Op = FrobeniusOperator;

FpPoly T(std::uint64_t p) { return FpPoly::monomial(p, 1, 1); }

FpPoly power(FpPoly base, unsigned e) {
  FpPoly r = FpPoly::constant(base.modulus(), 1);
  while (e-- > 0) r = r * base;
  return r;
}

FpPoly random_fp(std::mt19937_64& rng, std::uint64_t p, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  std::vector<std::uint64_t> c(deg(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return FpPoly(p, std::move(c));
}

Op random_op(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<long> c(len(rng));
  for (auto& v : c) v = coeff(rng);
  return Op(std::move(c));
}

}  // namespace

TEST_CASE("operator algebra: products") {
  CHECK(op_multiply(Op({-1, 1}), Op({1, 1})) == Op({-1, 0, 1}));
  CHECK(op_multiply(Op::tau_power(2), Op::artin_schreier(3)) == Op({0, 0, -1, 0, 0, 1}));
  CHECK(op_multiply(Op({-1, 1}), Op({1, 1, 1})) == Op::artin_schreier(3));
  CHECK(Op({-1, 0, 1}).to_string() == "tau^2 - 1");
  CHECK(Op({0, 0, 0}).is_zero());
}

TEST_CASE("operator algebra: exact division") {
  CHECK(op_divide_exact(Op::artin_schreier(2), Op::artin_schreier(1)) == Op({1, 1}));
  CHECK(op_divide_exact(Op::artin_schreier(6), Op::artin_schreier(2)) == Op({1, 0, 1, 0, 1}));
  CHECK_THROWS_AS(op_divide_exact(Op::artin_schreier(2), Op({2, 1})), InexactDivisionError);
  CHECK_THROWS_AS(op_divide_exact(Op({1}), Op({0, 1})), InexactDivisionError);
}

TEST_CASE("operator action on T") {
  CHECK(apply_operator(Op::tau_power(1), T(3)) == FpPoly::monomial(3, 1, 3));
  CHECK(apply_operator(Op::artin_schreier(1), T(3)) == FpPoly(3, {0, 2, 0, 1}));
  const auto expected = power(FpPoly(3, {0, 2, 0, 1}), 3);
  CHECK(apply_operator(op_multiply(Op::tau_power(1), Op::artin_schreier(1)), T(3)) == expected);
  CHECK(expected == FpPoly(3, {0, 0, 0, 2, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("closed product: examples") {
  CHECK(sum_product_closed(3, 1, 1) == power(FpPoly(3, {0, 2, 0, 1}), 3));
  CHECK(sum_product_closed(2, 1, 2) == FpPoly(2, {0, 0, 1, 0, 0, 0, 0, 0, 1}));
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned n = 1; n <= 2; ++n)
      for (unsigned m = 1; m <= 2; ++m) {
        const auto c = sum_product_closed(p, n, m);
        CHECK(c.degree() == static_cast<long>(std::pow(p, n + m)));
        CHECK(c.leading() == 1);
      }
}

TEST_CASE("brute-force product agrees with the closed form") {
  const auto p5 = brute_force_sum_product(5, 1, 1);
  CHECK(p5.product == power(FpPoly(5, {0, 4, 0, 0, 0, 1}), 5));
  CHECK(brute_force_sum_product(3, 1, 1).product == power(FpPoly(3, {0, 2, 0, 1}), 3));
  CHECK(brute_force_sum_product(2, 1, 2).product == FpPoly(2, {0, 0, 1, 0, 0, 0, 0, 0, 1}));

  for (std::uint64_t p : {2, 3, 5})
    for (unsigned n = 1; n <= 2; ++n)
      for (unsigned m = 1; m <= 2; ++m) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(m);
        const auto bf = brute_force_sum_product(p, n, m);
        CHECK(bf.embeddings_match_fixed_sets);
        CHECK(bf.product == sum_product_closed(p, n, m));
        CHECK(bf.product_second_root == bf.product);
      }
  CHECK_THROWS_AS(brute_force_sum_product(5, 2, 2, 100), ResourceLimitError);
}

TEST_CASE("field towers") {
  // Degree two: irreducible iff rootless; compare against the search.
  CHECK(FieldTower(2, 2).modulus() == FpPoly(2, {1, 1, 1}));
  CHECK(FieldTower(3, 2).modulus() == FpPoly(3, {1, 0, 1}));
  CHECK(FieldTower(5, 2).modulus() == FpPoly(5, {2, 0, 1}));
  CHECK(is_irreducible(FpPoly(2, {1, 1, 0, 1})));
  CHECK_FALSE(is_irreducible(FpPoly(2, {1, 0, 0, 1})));
  CHECK_THROWS_AS(FieldTower(4, 2), NotPrimeError);

  for (std::uint64_t p : {2, 3, 5}) {
    const FieldTower F(p, 2);
    // Frobenius permutes the carrier and fixes exactly the prime field.
    std::vector<bool> hit(F.size(), false);
    for (std::uint64_t i = 0; i < F.size(); ++i) hit[F.index(F.frobenius(F.element(i)))] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    CHECK(F.fixed_points(1).size() == p);
    CHECK(F.fixed_points(2).size() == F.size());
    // x * x^-1 via Fermat.
    const auto a = F.element(F.size() - 1);
    CHECK(F.mul(a, F.power(a, F.size() - 2)) == F.one());
  }
  CHECK(FieldTower(2, 4).fixed_points(2).size() == 4);
  CHECK_THROWS_AS(embed_subfield(FieldTower(2, 3), 2), std::invalid_argument);
}

TEST_CASE("Artin-Schreier closed form") {
  const VarNames ab{"A", "B"};
  CHECK(artin_schreier_resultant_closed(3, 1, 1).to_string(ab) == "A^3 + 2*B^3");
  CHECK(artin_schreier_resultant_closed(3, 1, 2).to_string(ab) == "A^9 + A^3 + 2*B^3");
  CHECK(artin_schreier_resultant_closed(2, 2, 2).to_string(ab) == "A^4 + B^4");
}

TEST_CASE("Artin-Schreier Sylvester oracle") {
  const auto o33 = artin_schreier_resultant_oracle(3, 1, 1);
  CHECK(o33.matrix_size == 6);
  CHECK((o33.sign == 1 || o33.sign == -1));
  const auto o2 = artin_schreier_resultant_oracle(2, 1, 1);
  CHECK(o2.determinant.to_string({"A", "B"}) == "A^2 + B^2");
  CHECK_FALSE(o2.sign_determined);
  CHECK(artin_schreier_resultant_oracle(3, 1, 2).matrix_size == 12);

  std::string signs;
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned n = 1; n <= 2; ++n)
      for (unsigned m = 1; m <= 2; ++m) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(m);
        const auto o = artin_schreier_resultant_oracle(p, n, m);
        CHECK(o.sign != 0);
        signs += " (" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m) + ")" +
                 (o.sign > 0 ? "+" : "-");
      }
  MESSAGE("realized signs:" << signs);
  CHECK_THROWS_AS(artin_schreier_resultant_oracle(5, 2, 2, 40), ResourceLimitError);
}

TEST_CASE("operator action is a ring action and additive") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Op a = random_op(rng), b = random_op(rng);
      const FpPoly f = random_fp(rng, p, 4), g = random_fp(rng, p, 4);
      CHECK(apply_operator(op_multiply(a, b), f) == apply_operator(a, apply_operator(b, f)));
      CHECK(apply_operator(a, f + g) == apply_operator(a, f) + apply_operator(a, g));
      CHECK(apply_operator(a + b, f) == apply_operator(a, f) + apply_operator(b, f));
    }
  }
}
