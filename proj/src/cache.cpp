#include "dmagic/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace dmagic {

namespace {

constexpr std::string_view kHeaderPrefix = "#dmagic-lcm-cache ";
constexpr std::string_view kVersion = "v1";

bool all_decimal(std::string_view text) {
  if (text.empty()) return false;
  for (const char c : text)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

LcmCache::LcmCache(std::filesystem::path file) : path_(std::move(file)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in.is_open()) return;  // fresh

  const auto fail = [this](std::size_t line_no, const std::string& what) {
    entries_.clear();
    load_status_ = LoadStatus::corrupt;
    load_message_ = path_.string() + ": line " + std::to_string(line_no) +
                    ": " + what + "; ignoring cache contents";
  };

  std::string line;
  if (!std::getline(in, line) || !line.starts_with(kHeaderPrefix)) {
    fail(1, "missing cache header");
    return;
  }
  const std::string version = line.substr(kHeaderPrefix.size());

  std::size_t line_no = 1;
  std::uint32_t previous = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(line_no, "missing tab");
      return;
    }
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    if (!all_decimal(key) || !all_decimal(value)) {
      fail(line_no, "malformed row");
      return;
    }
    std::uint32_t limit = 0;
    try {
      const unsigned long parsed = std::stoul(key);
      if (parsed > 0xfffffffful) throw std::out_of_range("key");
      limit = static_cast<std::uint32_t>(parsed);
    } catch (const std::exception&) {
      fail(line_no, "ceiling out of range");
      return;
    }
    if (!first && limit <= previous) {
      fail(line_no, "ceilings not strictly ascending");
      return;
    }
    first = false;
    previous = limit;
    entries_.emplace(limit, Natural::from_decimal(value));
  }
  load_status_ = LoadStatus::loaded;

  if (version != kVersion) {
    // Another producer wrote this file; recheck every entry against the
    // independent prime-power route before trusting it.
    std::size_t repaired = 0;
    for (auto& [limit, value] : entries_) {
      Natural expected = lcm_range_prime_power(RangeCeiling{limit});
      if (value != expected) {
        value = std::move(expected);
        ++repaired;
      }
    }
    load_status_ = LoadStatus::revalidated;
    load_message_ = path_.string() + ": version \"" + version +
                    "\" differs from \"" + std::string(kVersion) + "\"; " +
                    std::to_string(entries_.size()) + " entries revalidated, " +
                    std::to_string(repaired) + " repaired";
    persist();
  }
}

std::optional<Natural> LcmCache::lookup(std::uint32_t limit) const {
  const auto it = entries_.find(limit);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void LcmCache::store(std::uint32_t limit, const Natural& value) {
  entries_.insert_or_assign(limit, value);
  persist();
}

void LcmCache::persist() const {
  std::error_code ec;
  if (path_.has_parent_path())
    std::filesystem::create_directories(path_.parent_path(), ec);

  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out.is_open())
      throw std::runtime_error("cannot write cache file " + tmp.string());
    out << kHeaderPrefix << kVersion << '\n';
    for (const auto& [limit, value] : entries_)
      out << limit << '\t' << value.to_decimal() << '\n';
    out.flush();
    if (!out.good())
      throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

Natural cache_get_or_compute(RangeCeiling limit, LcmCache& cache) {
  if (auto hit = cache.lookup(limit.value())) return *std::move(hit);
  Natural value = lcm_range_fold(limit);
  cache.store(limit.value(), value);
  return value;
}

}  // namespace dmagic
