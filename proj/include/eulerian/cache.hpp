#pragma once

// Content-addressed table cache for the CLI. One JSON file per key under a
// root directory; writes go to a temp file first and are renamed into place.

#include <filesystem>
#include <optional>
#include <string>

#include "eulerian/serialize.hpp"

namespace eulerian {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "EULERIAN_CACHE_DIR";

class TableCache {
 public:
  explicit TableCache(std::filesystem::path root);
  /// Root from the environment, or nothing when the variable is unset/empty.
  static std::optional<TableCache> from_env();

  /// The stored payload for key, if present and written under the same key.
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path root_;
};

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& text);

}  // namespace eulerian
