#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dmagic {

struct DivMod;

/// Arbitrary-precision unsigned integer.
///
/// All arithmetic is exact. Operations that would leave the domain throw
/// instead of wrapping: subtraction below zero is std::underflow_error,
/// division by zero is std::domain_error.
class Natural {
 public:
  Natural() = default;
  explicit Natural(std::uint64_t value);

  /// Parses a nonempty run of decimal digits. Throws std::invalid_argument
  /// on anything else.
  static Natural from_decimal(std::string_view text);
  std::string to_decimal() const;

  bool is_zero() const noexcept { return limbs_.empty(); }
  std::size_t limb_count() const noexcept { return limbs_.size(); }

  bool fits_uint64() const noexcept { return limbs_.size() <= 2; }
  std::uint64_t to_uint64() const;  // throws std::overflow_error if too big

  friend bool operator==(const Natural&, const Natural&) noexcept = default;
  friend std::strong_ordering operator<=>(const Natural& lhs,
                                          const Natural& rhs) noexcept;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);  // requires *this >= rhs
  friend Natural operator+(Natural lhs, const Natural& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Natural operator-(Natural lhs, const Natural& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Natural operator*(const Natural& lhs, const Natural& rhs);

  friend DivMod div_mod(const Natural& numerator, const Natural& denominator);
  friend Natural operator/(const Natural& lhs, const Natural& rhs);
  friend Natural operator%(const Natural& lhs, const Natural& rhs);

  // Word-sized helpers backing the digit codecs' inner loops. div_u32
  // divides in place and returns the remainder.
  Natural& mul_u32(std::uint32_t factor);
  Natural& add_u32(std::uint32_t addend);
  std::uint32_t div_u32(std::uint32_t divisor);
  std::uint32_t mod_u32(std::uint32_t divisor) const;

 private:
  static DivMod divide_knuth(const Natural& numerator,
                             const Natural& denominator);
  void trim() noexcept;

  // Little-endian 32-bit limbs without trailing zeros; zero is empty.
  std::vector<std::uint32_t> limbs_;
};

/// Quotient and remainder of one exact division.
struct DivMod {
  Natural quotient;
  Natural remainder;
};

DivMod div_mod(const Natural& numerator, const Natural& denominator);

Natural gcd(Natural a, Natural b);

std::ostream& operator<<(std::ostream& out, const Natural& value);

}  // namespace dmagic
