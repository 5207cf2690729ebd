#include "dmagic/natural.hpp"

#include <bit>
#include <cassert>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace dmagic {

namespace {

constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
constexpr std::uint32_t kLimbMask = 0xffffffffu;

// Ten decimal digits fit a 32-bit chunk only up to 4294967295, so decimal
// I/O works in groups of nine.
constexpr std::uint32_t kDecimalChunk = 1'000'000'000u;
constexpr int kDecimalChunkDigits = 9;

}  // namespace

Natural::Natural(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & kLimbMask));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

void Natural::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal literal");
  Natural result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t take =
        std::min<std::size_t>(kDecimalChunkDigits, text.size() - pos);
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < take; ++i, ++pos) {
      const char c = text[pos];
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid decimal digit in literal");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    result.mul_u32(scale).add_u32(chunk);
  }
  return result;
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;
  Natural work = *this;
  while (!work.is_zero()) chunks.push_back(work.div_u32(kDecimalChunk));
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::uint64_t Natural::to_uint64() const {
  if (!fits_uint64()) throw std::overflow_error("value exceeds 64 bits");
  std::uint64_t value = 0;
  if (limbs_.size() > 1) value = std::uint64_t{limbs_[1]} << 32;
  if (!limbs_.empty()) value |= limbs_[0];
  return value;
}

std::strong_ordering operator<=>(const Natural& lhs,
                                 const Natural& rhs) noexcept {
  if (lhs.limbs_.size() != rhs.limbs_.size())
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
    if (carry == 0 && i >= rhs.limbs_.size()) return *this;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw std::underflow_error("natural subtraction underflow");
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sub = borrow;
    if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
    const std::uint64_t cur = limbs_[i];
    borrow = sub > cur ? 1 : 0;
    limbs_[i] = static_cast<std::uint32_t>(cur - sub);
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

Natural operator*(const Natural& lhs, const Natural& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Natural{};
  Natural result;
  result.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    const std::uint64_t a = lhs.limbs_[i];
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      const std::uint64_t cur =
          result.limbs_[i + j] + a * rhs.limbs_[j] + carry;
      result.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    result.limbs_[i + rhs.limbs_.size()] = static_cast<std::uint32_t>(carry);
  }
  result.trim();
  return result;
}

Natural& Natural::mul_u32(std::uint32_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    const std::uint64_t cur = std::uint64_t{limb} * factor + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Natural& Natural::add_u32(std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (auto& limb : limbs_) {
    if (carry == 0) return *this;
    const std::uint64_t cur = limb + carry;
    limb = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::uint32_t Natural::div_u32(std::uint32_t divisor) {
  if (divisor == 0) throw std::domain_error("division by zero");
  std::uint64_t remainder = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const std::uint64_t cur = (remainder << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    remainder = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(remainder);
}

std::uint32_t Natural::mod_u32(std::uint32_t divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  std::uint64_t remainder = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    remainder = ((remainder << 32) | limbs_[i]) % divisor;
  return static_cast<std::uint32_t>(remainder);
}

// Knuth's algorithm D on 32-bit limbs. Requires a multi-limb denominator
// no larger than the numerator.
DivMod Natural::divide_knuth(const Natural& numerator,
                                      const Natural& denominator) {
  const std::size_t n = denominator.limbs_.size();
  const std::size_t m = numerator.limbs_.size() - n;
  assert(n >= 2);

  // D1: normalize so the denominator's top limb has its high bit set.
  const int shift = std::countl_zero(denominator.limbs_.back());
  std::vector<std::uint32_t> v(n);
  std::vector<std::uint32_t> u(numerator.limbs_.size() + 1, 0);
  if (shift == 0) {
    v = denominator.limbs_;
    std::copy(numerator.limbs_.begin(), numerator.limbs_.end(), u.begin());
  } else {
    for (std::size_t i = n; i-- > 1;)
      v[i] = (denominator.limbs_[i] << shift) |
             (denominator.limbs_[i - 1] >> (32 - shift));
    v[0] = denominator.limbs_[0] << shift;
    u[numerator.limbs_.size()] =
        numerator.limbs_.back() >> (32 - shift);
    for (std::size_t i = numerator.limbs_.size(); i-- > 1;)
      u[i] = (numerator.limbs_[i] << shift) |
             (numerator.limbs_[i - 1] >> (32 - shift));
    u[0] = numerator.limbs_[0] << shift;
  }

  Natural quotient;
  quotient.limbs_.assign(m + 1, 0);

  for (std::size_t j = m + 1; j-- > 0;) {
    // D3: estimate the quotient limb from the top two dividend limbs.
    const std::uint64_t top = (std::uint64_t{u[j + n]} << 32) | u[j + n - 1];
    std::uint64_t qhat = top / v[n - 1];
    std::uint64_t rhat = top % v[n - 1];
    while (qhat >= kLimbBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kLimbBase) break;
    }
    assert(qhat < kLimbBase);

    // D4: u[j..j+n] -= qhat * v.
    std::uint64_t mul_carry = 0;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t product = qhat * v[i] + mul_carry;
      mul_carry = product >> 32;
      const std::uint64_t sub = (product & kLimbMask) + borrow;
      const std::uint64_t cur = u[i + j];
      borrow = sub > cur ? 1 : 0;
      u[i + j] = static_cast<std::uint32_t>(cur - sub);
    }
    {
      const std::uint64_t sub = mul_carry + borrow;
      const std::uint64_t cur = u[j + n];
      borrow = sub > cur ? 1 : 0;
      u[j + n] = static_cast<std::uint32_t>(cur - sub);
    }

    // D6: the estimate was one too large; add the denominator back.
    if (borrow) {
      --qhat;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sum = std::uint64_t{u[i + j]} + v[i] + carry;
        u[i + j] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
      }
      u[j + n] = static_cast<std::uint32_t>(u[j + n] + carry);
    }
    quotient.limbs_[j] = static_cast<std::uint32_t>(qhat);
  }

  // D8: denormalize what is left of the dividend.
  Natural remainder;
  remainder.limbs_.assign(n, 0);
  if (shift == 0) {
    std::copy(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n),
              remainder.limbs_.begin());
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      remainder.limbs_[i] = (u[i] >> shift) | (u[i + 1] << (32 - shift));
    remainder.limbs_[n - 1] = u[n - 1] >> shift;
  }
  quotient.trim();
  remainder.trim();
  return {std::move(quotient), std::move(remainder)};
}

DivMod div_mod(const Natural& numerator, const Natural& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by zero");
  if (numerator < denominator) return {Natural{}, numerator};
  if (denominator.limbs_.size() == 1) {
    Natural quotient = numerator;
    const std::uint32_t rem = quotient.div_u32(denominator.limbs_[0]);
    return {std::move(quotient), Natural{rem}};
  }
  return Natural::divide_knuth(numerator, denominator);
}

Natural operator/(const Natural& lhs, const Natural& rhs) {
  return div_mod(lhs, rhs).quotient;
}

Natural operator%(const Natural& lhs, const Natural& rhs) {
  return div_mod(lhs, rhs).remainder;
}

Natural gcd(Natural a, Natural b) {
  while (!b.is_zero()) {
    if (a.fits_uint64() && b.fits_uint64())
      return Natural{std::gcd(a.to_uint64(), b.to_uint64())};
    auto [quotient, remainder] = div_mod(a, b);
    a = std::move(b);
    b = std::move(remainder);
  }
  return a;
}

std::ostream& operator<<(std::ostream& out, const Natural& value) {
  return out << value.to_decimal();
}

}  // namespace dmagic
