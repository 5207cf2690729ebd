#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dmagic/lcm.hpp"
#include "dmagic/natural.hpp"
#include "dmagic/radix.hpp"

namespace dmagic {

/// A number built as lcm(2..L) * n + j, with its provenance.
struct MagicCandidate {
  Natural value;         // M
  RangeCeiling ceiling;  // L
  Natural multiplier;    // n
  Digit last_digit;      // j, always < L
};

/// One base of a verification run: M rendered in base `base`, its least
/// significant digit there, and whether that digit equals the reference
/// digit (M's digit in the ceiling base).
struct MagicRow {
  std::uint32_t base;
  std::string numeral;
  Digit least_significant;
  bool match;

  friend bool operator==(const MagicRow&, const MagicRow&) = default;
};

/// Digit-invariance report for one candidate M and ceiling base L. Rows
/// run from L down to 2; full_magic means every base kept the reference
/// digit.
struct MagicReport {
  Natural value;
  RangeCeiling ceiling;
  Digit reference_digit;
  bool full_magic;
  std::vector<MagicRow> rows;
  std::set<std::uint32_t> matching_bases;
};

/// Builds lcm(2..L) * n + j. Requires L >= 2 and j < L (j must be a valid
/// digit of the ceiling base).
MagicCandidate construct_magic(RangeCeiling ceiling, const Natural& multiplier,
                               Digit last_digit);

/// lcm(2..L) * n + j for n = start .. start+count-1.
std::vector<Natural> generate_family(RangeCeiling ceiling, Digit last_digit,
                                     const Natural& start, std::uint64_t count);

/// Checks whether value keeps its least significant digit in every base
/// from the ceiling down to 2. Requires ceiling >= 2.
MagicReport verify(const Natural& value, RangeCeiling ceiling);

/// Bases l in [2, L] where value's last digit equals its digit in base L.
/// For value = lcm(2..L)*n + j with n >= 1 this is exactly {l : j < l <= L}.
std::set<std::uint32_t> partial_magic_bases(const Natural& value,
                                            RangeCeiling ceiling);

/// Exhaustive scan of [0, bound]: every M whose digit is invariant across
/// bases 2..L, ascending. Checks each M by direct per-base remainders and
/// never touches the lcm machinery, so it can arbitrate between the
/// construction and the verifier. The scan may be split across `jobs`
/// worker threads; output is identical for any job count.
std::vector<Natural> oracle_enumerate(RangeCeiling ceiling,
                                      const Natural& bound,
                                      unsigned jobs = 1);

/// Hard ceiling for oracle_enumerate's scan bound.
inline constexpr std::uint64_t kOracleScanGuard = 10'000'000;

/// Digit-invariance table as TSV text: one row per base, descending from
/// the ceiling to 2, each row "l<TAB><numeral without its last digit>
/// <TAB><last digit>". Byte-stable across runs and platforms.
std::string magic_table(const Natural& value, RangeCeiling ceiling);

/// Aligned, human-oriented rendering of the same table.
std::string magic_table_pretty(const Natural& value, RangeCeiling ceiling);

/// Line-oriented key-value form: "m", "ceiling_base", "reference_digit",
/// "full_magic", "matching_bases", then one "row" line per base.
std::string to_tsv(const MagicReport& report);

/// Human-oriented aligned form.
std::string to_pretty(const MagicReport& report);

/// JSON document with fields m, ceiling_base, reference_digit, full_magic,
/// matching_bases, rows[].
std::string to_json(const MagicReport& report);

}  // namespace dmagic
