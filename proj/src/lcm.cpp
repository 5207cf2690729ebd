#include "dmagic/lcm.hpp"

namespace dmagic {

Natural lcm_pair(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("lcm_pair arguments must be nonzero");
  const Natural divisor = gcd(a, b);
  return (a / divisor) * b;
}

std::vector<std::uint32_t> sieve_primes(RangeCeiling limit) {
  const std::uint32_t n = limit.value();
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t multiple = std::uint64_t{p} * p; multiple <= n;
         multiple += p)
      composite[static_cast<std::size_t>(multiple)] = true;
  }
  return primes;
}

Natural lcm_range_fold(RangeCeiling limit) {
  Natural acc{1};
  for (std::uint32_t k = 2; k <= limit.value(); ++k)
    acc = lcm_pair(acc, Natural{k});
  return acc;
}

Natural lcm_range_prime_power(RangeCeiling limit) {
  const std::uint32_t n = limit.value();
  Natural acc{1};
  for (const std::uint32_t p : sieve_primes(limit)) {
    std::uint64_t power = p;
    while (power * p <= n) power *= p;  // largest p^e <= L, e = floor(log_p L)
    acc.mul_u32(static_cast<std::uint32_t>(power));
  }
  return acc;
}

std::vector<Natural> lcm_table_fold(RangeCeiling max_limit) {
  const std::uint32_t n = max_limit.value();
  std::vector<Natural> table;
  table.reserve(n + 1);
  table.emplace_back(1u);  // L = 0, empty range
  Natural acc{1};
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (k >= 2) acc = lcm_pair(acc, Natural{k});
    table.push_back(acc);
  }
  return table;
}

std::vector<Natural> lcm_table_prime_power(RangeCeiling max_limit) {
  const std::uint32_t n = max_limit.value();
  std::vector<std::uint32_t> smallest_factor(n + 1, 0);
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (smallest_factor[p] != 0) continue;
    for (std::uint64_t multiple = p; multiple <= n; multiple += p) {
      if (smallest_factor[static_cast<std::size_t>(multiple)] == 0)
        smallest_factor[static_cast<std::size_t>(multiple)] = p;
    }
  }

  std::vector<Natural> table;
  table.reserve(n + 1);
  table.emplace_back(1u);
  Natural acc{1};
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (k >= 2) {
      // k contributes exactly when it is a prime power p^e; then the
      // exponent of p in the running product steps from e-1 to e.
      const std::uint32_t p = smallest_factor[k];
      std::uint32_t rest = k;
      while (rest % p == 0) rest /= p;
      if (rest == 1) acc.mul_u32(p);
    }
    table.push_back(acc);
  }
  return table;
}

}  // namespace dmagic
