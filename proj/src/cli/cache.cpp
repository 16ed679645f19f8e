#include "eulerian/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>

namespace eulerian {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TableCache::TableCache(std::filesystem::path root) : root_(std::move(root)) {}

std::optional<TableCache> TableCache::from_env() {
  const char* dir = std::getenv(kCacheEnvVar);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return TableCache(dir);
}

std::filesystem::path TableCache::path_for(const std::string& key) const {
  return root_ / (fnv1a_hex(std::string(kArtifactVersion) + "|" + key) + ".json");
}

std::optional<Json> TableCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const Json doc = Json::parse(in);
    if (doc.at("version") != kArtifactVersion || doc.at("key") != key) return std::nullopt;
    return doc.at("payload");
  } catch (const Json::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
}

void TableCache::store(const std::string& key, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  const auto target = path_for(key);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << Json{{"version", kArtifactVersion}, {"key", key}, {"payload", payload}}.dump() << '\n';
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace eulerian
