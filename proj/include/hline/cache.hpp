#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hline/classify.hpp"
#include "hline/report.hpp"

namespace hline {

struct CacheStats {
  std::string dir;
  std::size_t segments = 0;
  std::size_t records = 0;   // well-formed lines across all segments
  std::size_t keys = 0;      // distinct live keys for this tool version
  std::size_t stale = 0;     // records written by another tool version
  std::size_t corrupt = 0;   // lines failing the checksum or JSON parse
  std::uintmax_t bytes = 0;
};

/// Append-only record store. Each process appends to its own segment file
/// (`segment-<pid>.log`), one record per line as `<fnv1a64 hex> TAB <json>`;
/// readers merge every segment and the newest record per key wins.
/// Records from another tool version read as misses, and lines whose
/// checksum does not match are skipped with a warning.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  /// HLINE_CACHE_DIR, else $XDG_CACHE_HOME/hline, else $HOME/.cache/hline,
  /// else ./.hline-cache.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::optional<Json> get(const std::string& key);
  /// Throws IoError when the segment cannot be written.
  void put(const std::string& key, const Json& value);

  CacheStats stats();
  /// Removes every segment file; returns how many were removed.
  std::size_t clear();

  /// Warnings collected while reading segments (corrupt lines).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  struct Slot {
    std::uint64_t stamp = 0;
    std::uint64_t seq = 0;
    Json value;
  };
  void load();

  std::filesystem::path dir_;
  bool loaded_ = false;
  std::map<std::string, Slot> index_;
  CacheStats stats_;
  std::vector<std::string> warnings_;
  std::uint64_t seq_ = 0;
};

/// Key for a classification: canonical code, n and budget fingerprint.
std::string classification_key(const CanonicalCode& code, std::size_t n, const Budget& budget);

struct CachedClassification {
  Json report;       // classification_to_json of the canonical form
  bool hit = false;
  Outcome outcome = Outcome::Unknown;
};

/// Classifies the canonical form of g, consulting and filling `cache` when
/// given. The report gains an "input_labeling" member mapping each input
/// vertex to its canonical vertex, which is not part of the cached value.
CachedClassification classify_cached(const Graph& g, std::size_t n, const Budget& budget, Cache* cache);

}  // namespace hline
