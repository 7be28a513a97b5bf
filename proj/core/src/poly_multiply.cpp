#include <algorithm>
#include <cstdint>

#include "qcarlitz/poly.hpp"

namespace qcarlitz::detail {

namespace {

constexpr std::size_t kSchoolbookLimit = 24;
constexpr std::size_t kLimbBits = 64;

std::vector<BigInt> schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t bits = 0;
  for (const auto& c : v) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

// Packs sum c_i 2^(i * slot_limbs * 64) into one integer. Positive and negative
// coefficients are laid out in separate limb buffers and subtracted.
BigInt pack(const std::vector<BigInt>& v, std::size_t slot_limbs) {
  std::vector<std::uint64_t> pos(v.size() * slot_limbs, 0);
  std::vector<std::uint64_t> neg(v.size() * slot_limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(v[i]);
    if (s == 0) continue;
    auto& buf = s > 0 ? pos : neg;
    any_neg = any_neg || s < 0;
    std::size_t written = 0;
    mpz_export(buf.data() + i * slot_limbs, &written, -1, sizeof(std::uint64_t), 0, 0,
               v[i].get_mpz_t());
  }
  BigInt out;
  mpz_import(out.get_mpz_t(), pos.size(), -1, sizeof(std::uint64_t), 0, 0, pos.data());
  if (any_neg) {
    BigInt n;
    mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(std::uint64_t), 0, 0, neg.data());
    out -= n;
  }
  return out;
}

// Inverse of pack for balanced digits |c_i| < 2^(slot_bits - 1).
std::vector<BigInt> unpack(const BigInt& value, std::size_t count, std::size_t slot_limbs) {
  std::vector<BigInt> out(count);
  const int sign = sgn(value);
  if (sign == 0) return out;
  const std::size_t limb_count = (mpz_sizeinbase(value.get_mpz_t(), 2) + kLimbBits - 1) / kLimbBits;
  std::vector<std::uint64_t> limbs(std::max(limb_count, count * slot_limbs) + slot_limbs, 0);
  std::size_t written = 0;
  mpz_export(limbs.data(), &written, -1, sizeof(std::uint64_t), 0, 0, value.get_mpz_t());

  BigInt half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, slot_limbs * kLimbBits - 1);
  const BigInt full = half * 2;
  BigInt digit;
  bool carry = false;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_import(digit.get_mpz_t(), slot_limbs, -1, sizeof(std::uint64_t), 0, 0,
               limbs.data() + i * slot_limbs);
    if (carry) digit += 1;
    carry = digit >= half;
    if (carry) digit -= full;
    out[i] = sign > 0 ? digit : BigInt(-digit);
  }
  return out;
}

}  // namespace

std::vector<BigInt> multiply_integer(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kSchoolbookLimit) return schoolbook(a, b);

  // |coefficient of a*b| < min(len) * max|a| * max|b|; one more bit for the sign.
  std::size_t len_bits = 0;
  for (std::size_t m = std::min(a.size(), b.size()); m > 0; m >>= 1u) ++len_bits;
  const std::size_t need = max_bits(a) + max_bits(b) + len_bits + 2;
  const std::size_t slot_limbs = (need + kLimbBits - 1) / kLimbBits;

  const BigInt pa = pack(a, slot_limbs);
  const BigInt pb = pack(b, slot_limbs);
  const BigInt product = pa * pb;
  std::vector<BigInt> out = unpack(product, a.size() + b.size() - 1, slot_limbs);
  return out;
}

}  // namespace qcarlitz::detail
