#pragma once

#include <optional>
#include <string>

#include "logtangent/graphs.hpp"
#include "logtangent/ratfunc.hpp"

namespace logtangent {

// Persistent store of per-class contribution values, one JSON file per
// canonical key. Entries carry an evaluator version string; a mismatch, a
// hash collision or a corrupt file is treated as a miss and overwritten on
// the next store. An unusable directory disables the cache with a warning
// and computation proceeds.
class DiskCache {
 public:
  static const char* current_version();

  explicit DiskCache(std::string dir, std::string version = current_version());

  bool enabled() const { return enabled_; }
  const std::string& dir() const { return dir_; }

  std::optional<RatFunc> load(const CanonKey& key);
  void store(const CanonKey& key, const RatFunc& value);

  // 16-hex-digit FNV-1a hash used as the file stem for a key.
  static std::string key_hash(const CanonKey& key);

 private:
  std::string path_for(const CanonKey& key) const;

  std::string dir_;
  std::string version_;
  bool enabled_ = false;
};

}  // namespace logtangent
