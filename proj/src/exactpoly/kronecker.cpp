// Bivariate product by Kronecker substitution: both operands are packed
// into one big integer with fixed-width limb-aligned slots, multiplied by
// GMP, and unpacked with balanced (signed) digits.

#include <algorithm>
#include <bit>
#include <vector>

#include "cubicrig/bivar_poly.hpp"
#include "cubicrig/errors.hpp"

namespace cubicrig {

namespace {

struct Layout {
  std::size_t y_stride;     // slots per x-power
  std::size_t slot_limbs;   // limbs per coefficient slot
};

// Packs the positive and negative parts of p separately; value = pos - neg.
mpz_class pack(const BivarPoly& p, const Layout& lay) {
  const std::size_t slots = (static_cast<std::size_t>(p.deg_x()) + 1) * lay.y_stride;
  std::vector<mp_limb_t> pos(slots * lay.slot_limbs, 0);
  std::vector<mp_limb_t> neg(slots * lay.slot_limbs, 0);
  for (const auto& [m, c] : p.terms()) {
    const std::size_t slot = m.ex * lay.y_stride + m.ey;
    auto& buf = (c < 0) ? neg : pos;
    std::size_t count = 0;
    mpz_export(buf.data() + slot * lay.slot_limbs, &count, -1, sizeof(mp_limb_t), 0, 0, c.get_mpz_t());
    if (count > lay.slot_limbs) throw InvariantViolation("kronecker: coefficient wider than slot");
  }
  mpz_class vp;
  mpz_class vn;
  mpz_import(vp.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  mpz_import(vn.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
  return vp - vn;
}

}  // namespace

BivarPoly multiply_kronecker(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t deg_x = static_cast<std::size_t>(a.deg_x() + b.deg_x());
  Layout lay{};
  lay.y_stride = static_cast<std::size_t>(a.deg_y() + b.deg_y()) + 1;
  const std::size_t n_min = std::min(a.term_count(), b.term_count());
  // |product coeff| < 2^(bits_a + bits_b) * n_min, plus one sign bit.
  const std::size_t bound_bits =
      a.max_coeff_bits() + b.max_coeff_bits() + static_cast<std::size_t>(std::bit_width(n_min)) + 1;
  lay.slot_limbs = (bound_bits + GMP_NUMB_BITS) / GMP_NUMB_BITS;

  mpz_class va = pack(a, lay);
  mpz_class vb = (&a == &b) ? va : pack(b, lay);
  mpz_class prod;
  if (&a == &b) {
    mpz_mul(prod.get_mpz_t(), va.get_mpz_t(), va.get_mpz_t());
  } else {
    mpz_mul(prod.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
  }

  const int sign = sgn(prod);
  const std::size_t slots = (deg_x + 1) * lay.y_stride;
  std::vector<mp_limb_t> limbs(slots * lay.slot_limbs + 1, 0);
  std::size_t count = 0;
  mpz_export(limbs.data(), &count, -1, sizeof(mp_limb_t), 0, 0, prod.get_mpz_t());
  if (count > limbs.size()) throw InvariantViolation("kronecker: product exceeds layout");

  std::vector<std::pair<Monomial, mpz_class>> terms;
  mpz_class digit;
  mpz_class full;
  mpz_class half;
  mpz_setbit(full.get_mpz_t(), lay.slot_limbs * GMP_NUMB_BITS);
  mpz_setbit(half.get_mpz_t(), lay.slot_limbs * GMP_NUMB_BITS - 1);
  bool carry = false;
  for (std::size_t s = 0; s < slots; ++s) {
    const mp_limb_t* slot = limbs.data() + s * lay.slot_limbs;
    const bool empty = std::all_of(slot, slot + lay.slot_limbs, [](mp_limb_t l) { return l == 0; });
    if (empty && !carry) continue;
    mpz_import(digit.get_mpz_t(), lay.slot_limbs, -1, sizeof(mp_limb_t), 0, 0, slot);
    if (carry) digit += 1;
    // digit is in [0, 2^w]; fold into the balanced range [-2^(w-1), 2^(w-1)).
    carry = digit >= half;
    if (carry) digit -= full;
    if (digit != 0) {
      if (sign < 0) digit = -digit;
      terms.push_back({Monomial{static_cast<std::uint32_t>(s / lay.y_stride),
                                static_cast<std::uint32_t>(s % lay.y_stride)},
                       digit});
    }
  }
  if (carry) throw InvariantViolation("kronecker: dangling carry");

  BivarPoly out;
  for (auto& [m, c] : terms) out.terms_.emplace(m, std::move(c));
  return out;
}

}  // namespace cubicrig
