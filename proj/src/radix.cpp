#include "dmagic/radix.hpp"

#include <algorithm>
#include <cassert>

namespace dmagic {

namespace {

constexpr std::string_view kAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz";

void schoolbook_into(Natural value, std::uint32_t base,
                     std::size_t pad_to, std::vector<Digit>& out) {
  std::size_t emitted = 0;
  while (!value.is_zero()) {
    out.push_back(value.div_u32(base));
    ++emitted;
  }
  if (pad_to > 0) {
    assert(emitted <= pad_to);
    for (; emitted < pad_to; ++emitted) out.push_back(0);
  } else if (emitted == 0) {
    out.push_back(0);  // canonical zero
  }
}

// Emits the digits of `value`, least significant first. `powers[k]` holds
// base^(2^k); every table entry is <= the original operand. When pad_to is
// nonzero the caller guarantees value < base^pad_to and exactly pad_to
// digits are produced, zero-filled at the top.
void convert_recursive(const Natural& value,
                       const std::vector<Natural>& powers, std::size_t level,
                       std::uint32_t base, std::size_t pad_to,
                       std::vector<Digit>& out) {
  if (value.limb_count() <= kSchoolbookLimbThreshold) {
    schoolbook_into(value, base, pad_to, out);
    return;
  }
  std::size_t k = level;
  while (value < powers[k]) --k;  // powers[0] = base <= value here
  const std::size_t split = std::size_t{1} << k;
  auto [high, low] = div_mod(value, powers[k]);
  convert_recursive(low, powers, k, base, split, out);
  convert_recursive(high, powers, k, base, pad_to == 0 ? 0 : pad_to - split,
                    out);
}

Digit decode_char(char c, std::uint32_t base, std::size_t position) {
  Digit value;
  if (c >= '0' && c <= '9')
    value = static_cast<Digit>(c - '0');
  else if (c >= 'a' && c <= 'z')
    value = static_cast<Digit>(c - 'a') + 10;
  else if (c >= 'A' && c <= 'Z')
    value = static_cast<Digit>(c - 'A') + 10;
  else
    throw parse_error("invalid character '" + std::string(1, c) +
                          "' at position " + std::to_string(position),
                      position);
  if (value >= base)
    throw parse_error("digit '" + std::string(1, c) +
                          "' out of range for radix " + std::to_string(base) +
                          " at position " + std::to_string(position),
                      position);
  return value;
}

}  // namespace

Numeral::Numeral(Radix radix, std::vector<Digit> digits)
    : radix_(radix), digits_(std::move(digits)) {
  if (digits_.empty())
    throw std::invalid_argument("numeral needs at least one digit");
  for (const Digit d : digits_) {
    if (d >= radix_.value())
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " not below radix " +
                                  std::to_string(radix_.value()));
  }
  if (digits_.size() > 1 && digits_.back() == 0)
    throw std::invalid_argument("most significant digit must be nonzero");
}

Numeral to_digits(const Natural& value, Radix base) {
  std::vector<Digit> digits;
  schoolbook_into(value, base.value(), 0, digits);
  return Numeral(base, std::move(digits));
}

Numeral to_digits_dc(const Natural& value, Radix base) {
  if (value.limb_count() <= kSchoolbookLimbThreshold)
    return to_digits(value, base);

  // Square up a power ladder until the top entry would overshoot the
  // operand; each retained entry is <= value, so the recursion always has
  // a usable split point.
  std::vector<Natural> powers{Natural{base.value()}};
  while (true) {
    Natural next = powers.back() * powers.back();
    if (next > value) break;
    powers.push_back(std::move(next));
  }

  std::vector<Digit> digits;
  convert_recursive(value, powers, powers.size() - 1, base.value(), 0,
                    digits);
  return Numeral(base, std::move(digits));
}

Natural from_digits(const Numeral& numeral) {
  Natural value;
  const auto& digits = numeral.digits();
  for (std::size_t i = digits.size(); i-- > 0;)
    value.mul_u32(numeral.radix().value()).add_u32(digits[i]);
  return value;
}

std::string render(const Numeral& numeral) {
  const auto& digits = numeral.digits();
  std::string out;
  if (numeral.radix().value() <= kAlphabet.size()) {
    out.reserve(digits.size());
    for (std::size_t i = digits.size(); i-- > 0;)
      out += kAlphabet[digits[i]];
  } else {
    for (std::size_t i = digits.size(); i-- > 0;) {
      out += std::to_string(digits[i]);
      if (i > 0) out += ':';
    }
  }
  return out;
}

Natural parse(std::string_view text, Radix base) {
  if (text.empty()) throw parse_error("empty numeral", 0);
  Natural value;
  if (base.value() <= kAlphabet.size()) {
    for (std::size_t i = 0; i < text.size(); ++i)
      value.mul_u32(base.value())
          .add_u32(decode_char(text[i], base.value(), i));
    return value;
  }
  // Colon grammar: nonempty decimal digit runs separated by single colons.
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] == ':')
      throw parse_error("expected digit at position " + std::to_string(pos),
                        pos);
    std::uint64_t digit = 0;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ':') {
      const char c = text[pos];
      if (c < '0' || c > '9')
        throw parse_error("invalid character '" + std::string(1, c) +
                              "' at position " + std::to_string(pos),
                          pos);
      digit = digit * 10 + static_cast<std::uint64_t>(c - '0');
      if (digit >= base.value())
        throw parse_error("digit value out of range for radix " +
                              std::to_string(base.value()) + " at position " +
                              std::to_string(start),
                          start);
      ++pos;
    }
    value.mul_u32(base.value()).add_u32(static_cast<Digit>(digit));
    if (pos == text.size()) break;
    ++pos;  // skip ':'
  }
  return value;
}

Digit least_significant_digit(const Natural& value, Radix base) {
  return value.mod_u32(base.value());
}

}  // namespace dmagic
