#include "dmagic/oeis.hpp"

#include <cctype>
#include <chrono>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "dmagic/lcm.hpp"

namespace dmagic {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    const std::size_t start = pos;
    while (pos < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::int64_t parse_index(std::string_view token, std::size_t line_no) {
  bool negative = false;
  std::size_t pos = 0;
  if (!token.empty() && (token[0] == '-' || token[0] == '+')) {
    negative = token[0] == '-';
    pos = 1;
  }
  if (pos == token.size()) throw bfile_error("missing index", line_no);
  std::int64_t value = 0;
  for (; pos < token.size(); ++pos) {
    const char c = token[pos];
    if (c < '0' || c > '9')
      throw bfile_error("non-integer index token", line_no);
    if (value > (INT64_MAX - (c - '0')) / 10)
      throw bfile_error("index out of range", line_no);
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

std::optional<Natural> BFileSequence::at(std::int64_t index) const {
  if (empty() || index < first_index || index > last_index())
    return std::nullopt;
  return values[static_cast<std::size_t>(index - first_index)];
}

BFileSequence parse_bfile(std::string_view text) {
  BFileSequence sequence;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_first = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;          // blank
    if (tokens.front().front() == '#') continue;  // comment
    if (tokens.size() != 2)
      throw bfile_error("expected two tokens, found " +
                            std::to_string(tokens.size()),
                        line_no);

    const std::int64_t index = parse_index(tokens[0], line_no);
    Natural value;
    try {
      value = Natural::from_decimal(tokens[1]);
    } catch (const std::invalid_argument&) {
      throw bfile_error("non-integer value token", line_no);
    }

    if (!have_first) {
      sequence.first_index = index;
      have_first = true;
    } else if (index != sequence.last_index() + 1) {
      throw bfile_error("non-contiguous index " + std::to_string(index) +
                            " after " + std::to_string(sequence.last_index()),
                        line_no);
    }
    sequence.values.push_back(std::move(value));
  }
  return sequence;
}

std::string serialize_bfile(const BFileSequence& sequence) {
  std::string out;
  for (std::size_t i = 0; i < sequence.values.size(); ++i) {
    out += std::to_string(sequence.first_index +
                          static_cast<std::int64_t>(i));
    out += ' ';
    out += sequence.values[i].to_decimal();
    out += '\n';
  }
  return out;
}

CrossCheckReport cross_check(std::int64_t max_index,
                             const BFileSequence& sequence) {
  CrossCheckReport report;
  report.max_index = max_index;
  if (max_index < 0) return report;
  if (max_index > 0xffffffff)
    throw std::invalid_argument("cross-check bound does not fit 32 bits");

  // lcm(2..n) with the empty-range convention for n <= 1; A003418 has
  // offset 0 and a(0) = a(1) = 1, so indices line up directly.
  const auto table =
      lcm_table_fold(RangeCeiling{std::max<std::uint32_t>(
          1, static_cast<std::uint32_t>(max_index))});

  for (std::int64_t n = 0; n <= max_index; ++n) {
    const auto found = sequence.at(n);
    if (!found) {
      report.skipped.push_back(n);
      continue;
    }
    const Natural& expected = table[static_cast<std::size_t>(n)];
    ++report.checked;
    if (*found != expected)
      report.mismatches.push_back({n, expected, *found});
  }
  return report;
}

std::string default_bfile_url(std::string_view sequence_id) {
  if (sequence_id.size() < 2 || sequence_id.front() != 'A')
    throw std::invalid_argument("sequence id must look like A003418");
  for (const char c : sequence_id.substr(1))
    if (c < '0' || c > '9')
      throw std::invalid_argument("sequence id must look like A003418");
  std::string digits(sequence_id.substr(1));
  return "https://oeis.org/" + std::string(sequence_id) + "/b" + digits +
         ".txt";
}

namespace {

struct SplitUrl {
  std::string base;  // scheme://host[:port]
  std::string path;
};

SplitUrl split_url(std::string_view url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos)
    throw fetch_error("endpoint must start with http:// or https://");
  const std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https")
    throw fetch_error("unsupported scheme \"" + std::string(scheme) + "\"");
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos)
    return {std::string(url), "/"};
  return {std::string(url.substr(0, path_start)),
          std::string(url.substr(path_start))};
}

}  // namespace

std::string fetch_bfile(std::string_view sequence_id,
                        std::string_view endpoint) {
  const std::string url = endpoint.empty() ? default_bfile_url(sequence_id)
                                           : std::string(endpoint);
  const SplitUrl split = split_url(url);

  const auto attempt = [&split](std::string& body) -> httplib::Result {
    httplib::Client client(split.base);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(30, 0);
    client.set_follow_location(true);
    body.clear();
    return client.Get(split.path, [&body](const char* data,
                                          std::size_t length) {
      if (body.size() + length > kFetchSizeCap) return false;  // abort
      body.append(data, length);
      return true;
    });
  };

  std::string body;
  httplib::Result result = attempt(body);
  if (!result && result.error() != httplib::Error::Canceled) {
    // One retry after a short backoff; transport errors only.
    std::this_thread::sleep_for(std::chrono::milliseconds(250));
    result = attempt(body);
  }
  if (!result) {
    if (result.error() == httplib::Error::Canceled)
      throw fetch_error("response for " + url + " exceeds the " +
                        std::to_string(kFetchSizeCap) + " byte cap");
    throw fetch_error("fetch of " + url + " failed: " +
                      httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300)
    throw fetch_error("fetch of " + url + " returned HTTP status " +
                      std::to_string(result->status));
  return body;
}

}  // namespace dmagic
