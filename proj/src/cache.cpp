#include "hline/cache.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <system_error>
#include <tuple>
#include <unistd.h>

#include "hline/error.hpp"
#include "hline/version.hpp"

namespace hline {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSegmentPrefix = "segment-";
constexpr std::string_view kSegmentSuffix = ".log";

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
  return out;
}

bool is_segment(const fs::path& p) {
  const std::string name = p.filename().string();
  return name.size() > kSegmentPrefix.size() + kSegmentSuffix.size() && name.starts_with(kSegmentPrefix) &&
         name.ends_with(kSegmentSuffix);
}

std::vector<fs::path> segments(const fs::path& dir) {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file(ec) && is_segment(entry.path())) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::system_clock::now().time_since_epoch())
          .count());
}

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_dir() {
  if (const char* d = std::getenv("HLINE_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "hline";
  if (const char* d = std::getenv("HOME"); d && *d) return fs::path(d) / ".cache" / "hline";
  return ".hline-cache";
}

void Cache::load() {
  if (loaded_) return;
  loaded_ = true;
  stats_ = {};
  stats_.dir = dir_.string();
  for (const fs::path& seg : segments(dir_)) {
    ++stats_.segments;
    std::error_code ec;
    stats_.bytes += fs::file_size(seg, ec);
    std::ifstream in(seg);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      auto corrupt = [&](const char* why) {
        ++stats_.corrupt;
        warnings_.push_back("cache: skipping " + seg.filename().string() + ":" + std::to_string(lineno) + " (" +
                            why + ")");
      };
      const auto tab = line.find('\t');
      if (tab != 16) {
        corrupt("malformed record");
        continue;
      }
      const std::string_view body = std::string_view(line).substr(tab + 1);
      if (line.compare(0, 16, hex64(fnv1a64(body))) != 0) {
        corrupt("checksum mismatch");
        continue;
      }
      Json rec = Json::parse(body, nullptr, false);
      if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") || !rec.contains("version") ||
          !rec.contains("value")) {
        corrupt("unreadable record");
        continue;
      }
      ++stats_.records;
      if (rec["version"] != kToolVersion) {
        ++stats_.stale;
        continue;
      }
      Slot slot{rec.value("stamp", std::uint64_t{0}), rec.value("seq", std::uint64_t{0}), std::move(rec["value"])};
      auto [it, fresh] = index_.try_emplace(rec["key"].get<std::string>(), slot);
      if (!fresh && std::tie(slot.stamp, slot.seq) >= std::tie(it->second.stamp, it->second.seq)) {
        it->second = std::move(slot);
      }
    }
  }
  stats_.keys = index_.size();
}

std::optional<Json> Cache::get(const std::string& key) {
  load();
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second.value;
}

void Cache::put(const std::string& key, const Json& value) {
  load();
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path seg = dir_ / (std::string(kSegmentPrefix) + std::to_string(::getpid()) + std::string(kSegmentSuffix));
  Slot slot{now_ns(), ++seq_, value};
  const Json rec{{"key", key}, {"version", kToolVersion}, {"stamp", slot.stamp}, {"seq", slot.seq}, {"value", value}};
  const std::string body = rec.dump();
  std::ofstream out(seg, std::ios::app);
  out << hex64(fnv1a64(body)) << '\t' << body << '\n';
  out.flush();
  if (!out) throw IoError("cache: cannot write " + seg.string());
  index_[key] = std::move(slot);
  stats_.keys = index_.size();
}

CacheStats Cache::stats() {
  loaded_ = false;
  index_.clear();
  warnings_.clear();
  load();
  return stats_;
}

std::size_t Cache::clear() {
  std::size_t removed = 0;
  for (const fs::path& seg : segments(dir_)) {
    std::error_code ec;
    if (fs::remove(seg, ec)) ++removed;
  }
  index_.clear();
  loaded_ = false;
  return removed;
}

std::string classification_key(const CanonicalCode& code, std::size_t n, const Budget& budget) {
  return code.hex() + "|n=" + std::to_string(n) + "|" + budget.fingerprint();
}

CachedClassification classify_cached(const Graph& g, std::size_t n, const Budget& budget, Cache* cache) {
  CanonOptions opts;
  opts.max_order = std::max(opts.max_order, g.order());
  const auto perm = canonical_labeling(g, opts);
  const Graph canon = g.relabeled(perm);
  const CanonicalCode code = canonical_code(canon, opts);
  const std::string key = classification_key(code, n, budget);

  CachedClassification out;
  if (cache) {
    if (auto hit = cache->get(key)) {
      out.report = std::move(*hit);
      out.hit = true;
    }
  }
  if (!out.hit) {
    out.report = classification_to_json(classify(canon, n, budget), n, code, budget);
    if (cache) cache->put(key, out.report);
  }
  const std::string outcome = out.report.at("outcome").get<std::string>();
  for (auto o : {Outcome::Converged, Outcome::Terminated, Outcome::DivergedByOrder, Outcome::Unknown}) {
    if (outcome == to_string(o)) out.outcome = o;
  }
  out.report["input_labeling"] = perm;
  return out;
}

}  // namespace hline
