#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmagic/natural.hpp"

namespace dmagic {

/// Value of one positional digit; always less than its radix.
using Digit = std::uint32_t;

/// A positional numeral base. At least 2. Bases up to 36 render with the
/// 0-9a-z alphabet; larger bases render digits as colon-joined decimal
/// values ("10:35:15").
class Radix {
 public:
  explicit Radix(std::uint32_t base) : base_(base) {
    if (base < 2) throw std::invalid_argument("radix must be at least 2");
  }
  std::uint32_t value() const noexcept { return base_; }
  friend bool operator==(Radix, Radix) noexcept = default;

 private:
  std::uint32_t base_;
};

/// A Natural in positional form: digits little-endian, index = power of the
/// radix. Zero is canonically the single digit [0]; any other numeral has a
/// nonzero most significant digit.
class Numeral {
 public:
  Numeral(Radix radix, std::vector<Digit> digits);

  Radix radix() const noexcept { return radix_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  Digit least_significant() const noexcept { return digits_.front(); }

  friend bool operator==(const Numeral&, const Numeral&) noexcept = default;

 private:
  Radix radix_;
  std::vector<Digit> digits_;
};

/// Thrown when numeral text does not match the grammar for its radix.
/// `position` is the zero-based byte offset of the offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Repeated-division conversion; digits come out least significant first.
Numeral to_digits(const Natural& value, Radix base);

/// Divide-and-conquer conversion: splits the operand by divmod at
/// base^(2^k) powers and recurses on the halves, falling back to the
/// schoolbook loop below kSchoolbookLimbThreshold. Output is identical to
/// to_digits for every input.
Numeral to_digits_dc(const Natural& value, Radix base);

/// Exact inverse of to_digits.
Natural from_digits(const Numeral& numeral);

/// Big-endian text. Lowercase 0-9a-z for radix <= 36, colon-joined decimal
/// digit values above that.
std::string render(const Numeral& numeral);

/// Inverse of render; accepts uppercase letters for radix <= 36.
Natural parse(std::string_view text, Radix base);

/// value mod base, without materializing the numeral.
Digit least_significant_digit(const Natural& value, Radix base);

/// Operands at or below this limb count convert via the schoolbook loop.
/// Correctness never depends on the value.
inline constexpr std::size_t kSchoolbookLimbThreshold = 64;

}  // namespace dmagic
