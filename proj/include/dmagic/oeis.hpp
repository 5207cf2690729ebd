#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmagic/natural.hpp"

namespace dmagic {

/// Parsed OEIS b-file: values over a contiguous ascending index range.
struct BFileSequence {
  std::int64_t first_index = 0;
  std::vector<Natural> values;

  bool empty() const noexcept { return values.empty(); }
  std::int64_t last_index() const noexcept {
    return first_index + static_cast<std::int64_t>(values.size()) - 1;
  }
  std::optional<Natural> at(std::int64_t index) const;
};

/// Thrown on malformed b-file input; carries the offending line number.
class bfile_error : public std::runtime_error {
 public:
  bfile_error(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when fetch_bfile cannot produce a b-file body.
class fetch_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses b-file text: '#' comment lines and blank lines are ignored,
/// every other line is "n a(n)" separated by whitespace. Indices must be
/// contiguous and ascending. Empty input is a valid empty sequence.
BFileSequence parse_bfile(std::string_view text);

/// Canonical "n a(n)" lines; comments are not preserved.
std::string serialize_bfile(const BFileSequence& sequence);

/// Result of comparing lcm(2..n) against a b-file prefix.
struct CrossCheckReport {
  struct Mismatch {
    std::int64_t index;
    Natural expected;  // lcm(2..n)
    Natural found;     // b-file value
  };
  std::int64_t max_index = 0;
  std::int64_t checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::int64_t> skipped;  // indices <= max_index not covered

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares lcm(2..n) (1 for n <= 1) against the sequence for every
/// covered n in [0, max_index]. Uncovered indices are reported as skipped,
/// not failed; equality is exact.
CrossCheckReport cross_check(std::int64_t max_index,
                             const BFileSequence& sequence);

/// Default b-file location for a sequence id like "A003418".
std::string default_bfile_url(std::string_view sequence_id);

/// Downloads a b-file over HTTP(S). An empty endpoint uses
/// default_bfile_url(sequence_id). Responses over 8 MiB abort mid-stream;
/// transport failures are retried once after a short backoff. Returns the
/// raw body for parse_bfile.
std::string fetch_bfile(std::string_view sequence_id,
                        std::string_view endpoint = {});

/// Response cap for fetch_bfile.
inline constexpr std::size_t kFetchSizeCap = 8u << 20;

}  // namespace dmagic
