#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubicrig/mod_poly.hpp"
#include "cubicrig/upoly.hpp"

namespace cubicrig {

/// Element sum c_i tau^i of Z[tau], tau the p-power Frobenius.
class FrobeniusOperator {
 public:
  FrobeniusOperator() = default;
  explicit FrobeniusOperator(std::vector<long> coeffs);

  static FrobeniusOperator tau_power(unsigned k);
  /// tau^k - 1
  static FrobeniusOperator artin_schreier(unsigned k);

  [[nodiscard]] const std::vector<long>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] long degree() const;
  [[nodiscard]] std::string to_string() const;

  friend FrobeniusOperator operator+(const FrobeniusOperator& a, const FrobeniusOperator& b);
  friend FrobeniusOperator operator-(const FrobeniusOperator& a, const FrobeniusOperator& b);
  friend bool operator==(const FrobeniusOperator& a, const FrobeniusOperator& b) = default;

 private:
  void trim();
  std::vector<long> c_;
};

/// Composition in Z[tau] (a commutative polynomial ring, so convolution).
FrobeniusOperator op_multiply(const FrobeniusOperator& a, const FrobeniusOperator& b);

/// Exact quotient a / b; InexactDivisionError on a nonzero remainder or when
/// the quotient leaves Z[tau].
FrobeniusOperator op_divide_exact(const FrobeniusOperator& a, const FrobeniusOperator& b);

/// sum c_i f^(p^i) over F_p, f univariate in T.
FpPoly apply_operator(const FrobeniusOperator& op, const FpPoly& f);

/// The F_p-polynomial prod_{u in F_{p^n}, v in F_{p^m}} (T - u - v) from the
/// operator tau^d (tau^n - 1)(tau^m - 1) / (tau^d - 1) applied to T.
FpPoly sum_product_closed(std::uint64_t p, unsigned n, unsigned m);

/// F_p[t]/(mu) with mu the lexicographically smallest monic irreducible of
/// degree k. Elements are residues of degree < k, indexed 0..p^k-1 by their
/// base-p digit string.
class FieldTower {
 public:
  using Elem = std::vector<std::uint64_t>;  ///< k residues, low degree first

  FieldTower(std::uint64_t p, unsigned k);

  [[nodiscard]] std::uint64_t p() const { return p_; }
  [[nodiscard]] unsigned k() const { return k_; }
  [[nodiscard]] const FpPoly& modulus() const { return mu_; }
  [[nodiscard]] std::uint64_t size() const { return size_; }

  [[nodiscard]] Elem element(std::uint64_t index) const;
  [[nodiscard]] std::uint64_t index(const Elem& e) const;
  [[nodiscard]] Elem zero() const { return Elem(k_, 0); }
  [[nodiscard]] Elem one() const;
  [[nodiscard]] Elem from_base(std::uint64_t c) const;

  [[nodiscard]] Elem add(const Elem& a, const Elem& b) const;
  [[nodiscard]] Elem sub(const Elem& a, const Elem& b) const;
  [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const;
  [[nodiscard]] Elem power(const Elem& a, std::uint64_t e) const;
  /// c -> c^(p^i)
  [[nodiscard]] Elem frobenius(const Elem& a, unsigned i = 1) const;

  /// Elements fixed by c -> c^(p^d).
  [[nodiscard]] std::vector<Elem> fixed_points(unsigned d) const;

  /// Roots in this field of a polynomial over F_p, in index order.
  [[nodiscard]] std::vector<Elem> roots_of(const FpPoly& f) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t size_;
  FpPoly mu_;
};

/// True iff f (degree >= 1) is irreducible over F_p.
bool is_irreducible(const FpPoly& f);

/// The subfield F_{p^sub} inside `big`, realised as F_p-combinations of
/// powers of the chosen root of the degree-`sub` modulus. `root_choice`
/// selects among the available roots (0 = first in index order).
std::vector<FieldTower::Elem> embed_subfield(const FieldTower& big, unsigned sub, std::size_t root_choice = 0);

inline constexpr std::uint64_t kDefaultEnumBudget = 100000;

struct BruteForceProduct {
  FpPoly product;
  /// The same product recomputed with a second embedding root; equal to
  /// `product` when the Galois-symmetry argument holds.
  FpPoly product_second_root;
  bool embeddings_match_fixed_sets = false;
};

/// Enumerates u in F_{p^n}, v in F_{p^m} inside F_{p^lcm(n,m)} and multiplies
/// the p^(n+m) factors T - u - v. ResourceLimitError above `budget`.
BruteForceProduct brute_force_sum_product(std::uint64_t p, unsigned n, unsigned m,
                                          std::uint64_t budget = kDefaultEnumBudget);

/// sum_{i=1}^{m/d} A^(p^(id)) - sum_{i=1}^{n/d} B^(p^(id)), with A in the x
/// slot and B in the y slot.
ModBivarPoly artin_schreier_resultant_closed(std::uint64_t p, unsigned n, unsigned m);

inline constexpr std::uint64_t kDefaultSylvesterBudget = 200;

struct ArtinSchreierOracle {
  ModBivarPoly determinant;
  /// determinant = sign * closed form; 0 when neither sign matches.
  int sign = 0;
  /// False in characteristic 2, where both signs agree.
  bool sign_determined = false;
  std::size_t matrix_size = 0;
};

/// Sylvester matrix of x^(p^n) - x - A and x^(p^m) - x - B over F_p[A, B],
/// first polynomial on top, expanded by fraction-free elimination.
ArtinSchreierOracle artin_schreier_resultant_oracle(std::uint64_t p, unsigned n, unsigned m,
                                                    std::uint64_t budget = kDefaultSylvesterBudget);

}  // namespace cubicrig
