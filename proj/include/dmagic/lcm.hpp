#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dmagic/natural.hpp"

namespace dmagic {

/// Upper end L of the inclusive range {2..L}. L = 1 denotes the empty
/// range, whose lcm is 1 by convention.
class RangeCeiling {
 public:
  explicit RangeCeiling(std::uint32_t limit) : limit_(limit) {
    if (limit < 1)
      throw std::invalid_argument("range ceiling must be at least 1");
  }
  std::uint32_t value() const noexcept { return limit_; }
  friend bool operator==(RangeCeiling, RangeCeiling) noexcept = default;

 private:
  std::uint32_t limit_;
};

/// a*b / gcd(a,b). Zero arguments are rejected: the lcm(x, 0) = 0
/// convention would poison range folds.
Natural lcm_pair(const Natural& a, const Natural& b);

/// Primes in [2, limit], ascending.
std::vector<std::uint32_t> sieve_primes(RangeCeiling limit);

/// lcm(2..L) as a fold of lcm_pair over the range.
Natural lcm_range_fold(RangeCeiling limit);

/// lcm(2..L) as the product over primes p <= L of p^floor(log_p L).
/// Exponents are found by repeated multiplication, no floating point.
/// Agrees with lcm_range_fold on every input.
Natural lcm_range_prime_power(RangeCeiling limit);

/// All of lcm(2..0)..lcm(2..max) in one pass, index = L. Element L equals
/// lcm_range_fold(L); the fold recurrence is evaluated incrementally so a
/// full sweep costs one fold instead of max of them.
std::vector<Natural> lcm_table_fold(RangeCeiling max_limit);

/// Same table via the prime-power route: a smallest-prime-factor sieve
/// finds the prime powers, and entry L multiplies entry L-1 by p exactly
/// when L = p^k. Shares no arithmetic with the fold route.
std::vector<Natural> lcm_table_prime_power(RangeCeiling max_limit);

}  // namespace dmagic
