#include "dmagic/magic.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace dmagic {

namespace {

void require_verifiable_ceiling(RangeCeiling ceiling) {
  if (ceiling.value() < 2)
    throw std::invalid_argument("ceiling base must be at least 2");
}

// Splits a rendered numeral into everything-but-last-digit and the last
// digit, respecting the colon grammar of large radices.
std::pair<std::string, std::string> split_last_digit(const std::string& text,
                                                     Radix base) {
  if (base.value() <= 36)
    return {text.substr(0, text.size() - 1), text.substr(text.size() - 1)};
  const std::size_t colon = text.rfind(':');
  if (colon == std::string::npos) return {"", text};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

MagicCandidate construct_magic(RangeCeiling ceiling, const Natural& multiplier,
                               Digit last_digit) {
  require_verifiable_ceiling(ceiling);
  if (last_digit >= ceiling.value())
    throw std::invalid_argument("digit " + std::to_string(last_digit) +
                                " is not a digit of base " +
                                std::to_string(ceiling.value()));
  Natural value = lcm_range_fold(ceiling) * multiplier;
  value.add_u32(last_digit);
  return MagicCandidate{std::move(value), ceiling, multiplier, last_digit};
}

std::vector<Natural> generate_family(RangeCeiling ceiling, Digit last_digit,
                                     const Natural& start,
                                     std::uint64_t count) {
  require_verifiable_ceiling(ceiling);
  if (last_digit >= ceiling.value())
    throw std::invalid_argument("digit " + std::to_string(last_digit) +
                                " is not a digit of base " +
                                std::to_string(ceiling.value()));
  const Natural base_value = lcm_range_fold(ceiling);
  std::vector<Natural> family;
  family.reserve(count);
  Natural multiplier = start;
  for (std::uint64_t i = 0; i < count; ++i) {
    Natural value = base_value * multiplier;
    value.add_u32(last_digit);
    family.push_back(std::move(value));
    multiplier.add_u32(1);
  }
  return family;
}

MagicReport verify(const Natural& value, RangeCeiling ceiling) {
  require_verifiable_ceiling(ceiling);
  const Digit reference = value.mod_u32(ceiling.value());

  MagicReport report{value, ceiling, reference, true, {}, {}};
  report.rows.reserve(ceiling.value() - 1);
  for (std::uint32_t base = ceiling.value(); base >= 2; --base) {
    const Numeral numeral = to_digits(value, Radix{base});
    const Digit digit = numeral.least_significant();
    const bool match = digit == reference;
    report.rows.push_back(MagicRow{base, render(numeral), digit, match});
    if (match)
      report.matching_bases.insert(base);
    else
      report.full_magic = false;
  }
  return report;
}

std::set<std::uint32_t> partial_magic_bases(const Natural& value,
                                            RangeCeiling ceiling) {
  require_verifiable_ceiling(ceiling);
  const Digit reference = value.mod_u32(ceiling.value());
  std::set<std::uint32_t> bases;
  for (std::uint32_t base = 2; base <= ceiling.value(); ++base) {
    if (value.mod_u32(base) == reference) bases.insert(base);
  }
  return bases;
}

std::vector<Natural> oracle_enumerate(RangeCeiling ceiling,
                                      const Natural& bound, unsigned jobs) {
  require_verifiable_ceiling(ceiling);
  if (bound > Natural{kOracleScanGuard})
    throw std::invalid_argument("oracle bound exceeds the exhaustive-scan "
                                "guard of 10^7");
  const std::uint64_t top = bound.to_uint64();
  const std::uint32_t limit = ceiling.value();

  const auto invariant = [limit](std::uint64_t candidate) {
    const std::uint64_t reference = candidate % limit;
    for (std::uint32_t base = 2; base < limit; ++base)
      if (candidate % base != reference) return false;
    return true;
  };

  const std::uint64_t total = top + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(jobs, 1u), total));
  std::vector<std::vector<std::uint64_t>> found(workers);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;

  std::vector<std::thread> pool;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t size = chunk + (w < extra ? 1 : 0);
    const std::uint64_t end = begin + size;  // half-open
    pool.emplace_back([&invariant, &found, w, begin, end] {
      for (std::uint64_t candidate = begin; candidate < end; ++candidate)
        if (invariant(candidate)) found[w].push_back(candidate);
    });
    begin = end;
  }
  for (auto& worker : pool) worker.join();

  std::vector<Natural> members;
  for (const auto& part : found)
    for (const std::uint64_t candidate : part)
      members.emplace_back(candidate);
  return members;
}

std::string magic_table(const Natural& value, RangeCeiling ceiling) {
  require_verifiable_ceiling(ceiling);
  std::string out;
  for (std::uint32_t base = ceiling.value(); base >= 2; --base) {
    const Radix radix{base};
    const auto [prefix, digit] =
        split_last_digit(render(to_digits(value, radix)), radix);
    out += std::to_string(base);
    out += '\t';
    out += prefix;
    out += '\t';
    out += digit;
    out += '\n';
  }
  return out;
}

std::string magic_table_pretty(const Natural& value, RangeCeiling ceiling) {
  require_verifiable_ceiling(ceiling);
  struct Line {
    std::uint32_t base;
    std::string prefix;
    std::string digit;
  };
  std::vector<Line> lines;
  std::size_t widest = 0;
  for (std::uint32_t base = ceiling.value(); base >= 2; --base) {
    const Radix radix{base};
    auto [prefix, digit] =
        split_last_digit(render(to_digits(value, radix)), radix);
    widest = std::max(widest, prefix.size() + digit.size());
    lines.push_back(Line{base, std::move(prefix), std::move(digit)});
  }
  std::ostringstream out;
  out << std::setw(3) << "l" << "  numeral\n";
  for (const auto& line : lines) {
    out << std::setw(3) << line.base << "  "
        << std::setw(static_cast<int>(widest - line.digit.size()))
        << line.prefix << ' ' << line.digit << '\n';
  }
  return out.str();
}

std::string to_tsv(const MagicReport& report) {
  std::string out = "m\t" + report.value.to_decimal() + '\n';
  out += "ceiling_base\t" + std::to_string(report.ceiling.value()) + '\n';
  out += "reference_digit\t" + std::to_string(report.reference_digit) + '\n';
  out += std::string("full_magic\t") + (report.full_magic ? "true" : "false") +
         '\n';
  out += "matching_bases\t";
  bool first = true;
  for (const std::uint32_t base : report.matching_bases) {
    if (!first) out += ',';
    out += std::to_string(base);
    first = false;
  }
  out += '\n';
  for (const auto& row : report.rows) {
    out += "row\t" + std::to_string(row.base) + '\t' + row.numeral + '\t' +
           std::to_string(row.least_significant) + '\t' +
           (row.match ? "match" : "mismatch") + '\n';
  }
  return out;
}

std::string to_pretty(const MagicReport& report) {
  std::ostringstream out;
  out << "m                " << report.value.to_decimal() << '\n';
  out << "ceiling base     " << report.ceiling.value() << '\n';
  out << "reference digit  " << report.reference_digit << '\n';
  out << "full magic       " << (report.full_magic ? "yes" : "no") << '\n';
  out << "matching bases  ";
  for (const std::uint32_t base : report.matching_bases) out << ' ' << base;
  out << '\n' << '\n';
  std::size_t widest = 7;  // "numeral"
  for (const auto& row : report.rows)
    widest = std::max(widest, row.numeral.size());
  out << std::setw(4) << "l" << "  " << std::left
      << std::setw(static_cast<int>(widest)) << "numeral" << std::right
      << "  lsd  match\n";
  for (const auto& row : report.rows) {
    out << std::setw(4) << row.base << "  " << std::left
        << std::setw(static_cast<int>(widest)) << row.numeral << std::right
        << "  " << std::setw(3) << row.least_significant << "  "
        << (row.match ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string to_json(const MagicReport& report) {
  nlohmann::json doc;
  doc["m"] = report.value.to_decimal();
  doc["ceiling_base"] = report.ceiling.value();
  doc["reference_digit"] = report.reference_digit;
  doc["full_magic"] = report.full_magic;
  doc["matching_bases"] = report.matching_bases;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    doc["rows"].push_back({{"base", row.base},
                           {"numeral", row.numeral},
                           {"digit", row.least_significant},
                           {"match", row.match}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace dmagic
