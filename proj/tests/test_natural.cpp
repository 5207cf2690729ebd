#include "dmagic/natural.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using dmagic::Natural;
using dmagic::div_mod;

namespace {

// Assembles a Natural from little-endian 32-bit limbs, going through
// multiply/add only, so the division tests do not depend on any private
// representation.
Natural from_limbs(const std::vector<std::uint32_t>& limbs) {
  const Natural shift{std::uint64_t{1} << 32};
  Natural value;
  for (std::size_t i = limbs.size(); i-- > 0;) {
    value = value * shift;
    value.add_u32(limbs[i]);
  }
  return value;
}

constexpr const char* kFactorial100 =
    "933262154439441526816992388562667004907159682643816214685929638952175999"
    "932299156089414639761565182862536979208272237582511852109168640000000000"
    "00000000000000";

}  // namespace

TEST_SUITE("natural") {

TEST_CASE("decimal text survives the round trip") {
  for (const char* text :
       {"0", "1", "9", "4294967295", "4294967296", "18446744073709551615",
        "18446744073709551616", "79228162514264337593543950336",
        "147808829414345923316083210206383297601", kFactorial100}) {
    CHECK(Natural::from_decimal(text).to_decimal() == text);
  }
}

TEST_CASE("from_decimal rejects junk") {
  CHECK_THROWS_AS(Natural::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal("-5"), std::invalid_argument);
}

TEST_CASE("uint64 construction matches decimal text") {
  CHECK(Natural{0}.to_decimal() == "0");
  CHECK(Natural{0}.is_zero());
  CHECK(Natural{1}.to_decimal() == "1");
  CHECK(Natural{0xffffffffu}.to_decimal() == "4294967295");
  CHECK(Natural{0x100000000ull}.to_decimal() == "4294967296");
  CHECK(Natural{UINT64_MAX}.to_decimal() == "18446744073709551615");
  CHECK(Natural{UINT64_MAX}.to_uint64() == UINT64_MAX);
}

TEST_CASE("to_uint64 refuses oversized values") {
  const Natural big = Natural::from_decimal("18446744073709551616");  // 2^64
  CHECK(!big.fits_uint64());
  CHECK_THROWS_AS(big.to_uint64(), std::overflow_error);
}

TEST_CASE("multiplication reproduces 100!") {
  Natural factorial{1};
  for (std::uint32_t k = 2; k <= 100; ++k) factorial = factorial * Natural{k};
  CHECK(factorial.to_decimal() == kFactorial100);
  CHECK(factorial.mod_u32(999999937u) == 311613153u);
}

TEST_CASE("multiplication of two 61-digit primes") {
  const Natural a = Natural::from_decimal(
      "1000000000000000000000000000000000000000000000000000000000007");
  const Natural b = Natural::from_decimal(
      "1000000000000000000000000000000000000000000000000000000000009");
  CHECK((a * b).to_decimal() ==
        "100000000000000000000000000000000000000000000000000000000001600000000"
        "0000000000000000000000000000000000000000000000000063");
}

TEST_CASE("ordering is by value") {
  const Natural small{41};
  const Natural large = Natural::from_decimal("79228162514264337593543950336");
  CHECK(small < large);
  CHECK(large > small);
  CHECK(small == Natural{41});
  CHECK(Natural{} < Natural{1});
}

TEST_CASE("subtraction underflow and zero division throw") {
  CHECK_THROWS_AS(Natural{3} - Natural{4}, std::underflow_error);
  CHECK_THROWS_AS(div_mod(Natural{3}, Natural{}), std::domain_error);
  Natural three{3};
  CHECK_THROWS_AS(three.div_u32(0), std::domain_error);
  CHECK_THROWS_AS(three.mod_u32(0), std::domain_error);
}

TEST_CASE("64-bit arithmetic agrees with the hardware") {
  std::mt19937_64 rng{0x5eed0001};
  for (int i = 0; i < 4000; ++i) {
    const std::uint64_t a = rng() >> (rng() % 64);
    const std::uint64_t b = rng() >> (rng() % 64);
    CAPTURE(a);
    CAPTURE(b);
    if (a <= UINT64_MAX - b) CHECK(Natural{a} + Natural{b} == Natural{a + b});
    if (a >= b) CHECK(Natural{a} - Natural{b} == Natural{a - b});
    if (b != 0) {
      const auto [q, r] = div_mod(Natural{a}, Natural{b});
      CHECK(q == Natural{a / b});
      CHECK(r == Natural{a % b});
    }
    CHECK(gcd(Natural{a}, Natural{b}) == Natural{std::gcd(a, b)});
  }
}

TEST_CASE("division identity holds on boundary limb patterns") {
  const std::vector<std::uint32_t> patterns{0u,          1u,
                                            0x7fffffffu, 0x80000000u,
                                            0xfffffffeu, 0xffffffffu};
  std::vector<std::vector<std::uint32_t>> dividends;
  std::vector<std::vector<std::uint32_t>> divisors;
  for (const auto a : patterns)
    for (const auto b : patterns) {
      divisors.push_back({a, b});
      for (const auto c : patterns) {
        dividends.push_back({a, b, c});
        dividends.push_back({a, b, c, 0x90000000u});
      }
    }
  for (const auto& upattern : dividends) {
    const Natural u = from_limbs(upattern);
    for (const auto& vpattern : divisors) {
      const Natural v = from_limbs(vpattern);
      if (v.is_zero()) continue;
      const auto [q, r] = div_mod(u, v);
      CHECK(q * v + r == u);
      CHECK(r < v);
    }
  }
}

TEST_CASE("division identity holds on random wide operands") {
  std::mt19937_64 rng{0x5eed0002};
  const auto random_natural = [&rng](std::size_t max_limbs) {
    std::vector<std::uint32_t> limbs(1 + rng() % max_limbs);
    for (auto& limb : limbs) limb = static_cast<std::uint32_t>(rng());
    return from_limbs(limbs);
  };
  for (int i = 0; i < 600; ++i) {
    const Natural u = random_natural(24);
    const Natural v = random_natural(12);
    if (v.is_zero()) continue;
    const auto [q, r] = div_mod(u, v);
    CHECK(q * v + r == u);
    CHECK(r < v);
  }
}

TEST_CASE("quotient reconstruction: u = q*v + r exactly inverts") {
  std::mt19937_64 rng{0x5eed0003};
  const auto random_natural = [&rng](std::size_t limbs_wanted) {
    std::vector<std::uint32_t> limbs(limbs_wanted);
    for (auto& limb : limbs) limb = static_cast<std::uint32_t>(rng());
    if (limbs.back() == 0) limbs.back() = 1;
    return from_limbs(limbs);
  };
  for (int i = 0; i < 300; ++i) {
    const Natural q = random_natural(1 + i % 9);
    const Natural v = random_natural(2 + i % 7);
    const Natural r = div_mod(random_natural(9), v).remainder;  // any r < v
    const Natural u = q * v + r;
    const auto result = div_mod(u, v);
    CHECK(result.quotient == q);
    CHECK(result.remainder == r);
  }
}

TEST_CASE("word-sized helpers agree with full division") {
  std::mt19937_64 rng{0x5eed0004};
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint32_t> limbs(1 + rng() % 8);
    for (auto& limb : limbs) limb = static_cast<std::uint32_t>(rng());
    const Natural value = from_limbs(limbs);
    const std::uint32_t divisor =
        static_cast<std::uint32_t>(rng()) | 1u;  // nonzero
    Natural quotient = value;
    const std::uint32_t remainder = quotient.div_u32(divisor);
    const auto expected = div_mod(value, Natural{divisor});
    CHECK(quotient == expected.quotient);
    CHECK(Natural{remainder} == expected.remainder);
    CHECK(value.mod_u32(divisor) == remainder);
  }
}

TEST_CASE("gcd facts") {
  const Natural factorial = Natural::from_decimal(kFactorial100);
  const Natural pow2_96 =
      Natural::from_decimal("79228162514264337593543950336");
  CHECK(gcd(factorial, pow2_96) == pow2_96);
  CHECK(gcd(pow2_96, factorial) == pow2_96);
  CHECK(gcd(Natural{42}, Natural{}) == Natural{42});
  CHECK(gcd(Natural{}, Natural{42}) == Natural{42});
  CHECK(gcd(Natural{}, Natural{}).is_zero());
}

TEST_CASE("addition carries across many limbs") {
  // 2^256 - 1 plus 1 rolls over to 2^256.
  Natural all_ones;
  for (int i = 0; i < 8; ++i) {
    all_ones = all_ones * Natural{std::uint64_t{1} << 32};
    all_ones.add_u32(0xffffffffu);
  }
  const Natural rolled = all_ones + Natural{1};
  CHECK(rolled.to_decimal() ==
        "115792089237316195423570985008687907853269984665640564039457584007913"
        "129639936");
  CHECK(rolled - Natural{1} == all_ones);
}

}  // TEST_SUITE
