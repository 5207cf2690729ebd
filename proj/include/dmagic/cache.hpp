#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "dmagic/lcm.hpp"
#include "dmagic/natural.hpp"

namespace dmagic {

/// Persisted map from range ceiling L to lcm(2..L).
///
/// Backing file is line-oriented UTF-8 text: a header
/// "#dmagic-lcm-cache v1", then "L<TAB><decimal>" rows in ascending L.
/// Loading never trusts blindly: a corrupt file is reported through
/// load_status() and dropped, and a file written by a different version
/// has every entry revalidated against lcm_range_prime_power before use.
/// Writes replace the whole file atomically via rename, so concurrent
/// readers always see a complete file.
class LcmCache {
 public:
  enum class LoadStatus {
    fresh,         // no file yet
    loaded,        // parsed and trusted
    revalidated,   // version header differed; entries rechecked
    corrupt,       // unparsable; contents dropped
  };

  explicit LcmCache(std::filesystem::path file);

  LoadStatus load_status() const noexcept { return load_status_; }
  const std::string& load_message() const noexcept { return load_message_; }

  std::optional<Natural> lookup(std::uint32_t limit) const;
  std::size_t size() const noexcept { return entries_.size(); }

  /// Inserts and immediately persists (write-through).
  void store(std::uint32_t limit, const Natural& value);

  const std::filesystem::path& file() const noexcept { return path_; }

 private:
  void persist() const;

  std::filesystem::path path_;
  std::map<std::uint32_t, Natural> entries_;
  LoadStatus load_status_ = LoadStatus::fresh;
  std::string load_message_;
};

/// Cache hit, or lcm_range_fold(L) computed and written through.
Natural cache_get_or_compute(RangeCeiling limit, LcmCache& cache);

}  // namespace dmagic
