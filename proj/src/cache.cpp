#include "stanley/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "stanley/replay.hpp"

namespace stanley {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 15];
  return out;
}

}  // namespace

std::string cache_key(const SquarefreeIdeal& ideal, const std::string& kind,
                      int field_char) {
  std::string material = "v";
  material += kAlgoVersion;
  material += "|" + kind + "|" + std::to_string(field_char) + "|" +
              std::to_string(ideal.ambient()) + "|";
  for (const Support& g : ideal.gens()) {
    for (int i : g.indices()) material += std::to_string(i) + ".";
    material += ";";
  }
  return hex64(fnv1a(material));
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_env() {
  if (const char* env = std::getenv("STANLEY_CACHE_DIR"); env && *env)
    return ResultCache(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return ResultCache(std::filesystem::path(xdg) / "stanley");
  if (const char* home = std::getenv("HOME"); home && *home)
    return ResultCache(std::filesystem::path(home) / ".cache" / "stanley");
  return ResultCache(".stanley-cache");
}

std::optional<Json> ResultCache::get(const std::string& key) const {
  std::filesystem::path file = dir_ / (key + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
}

void ResultCache::put(const std::string& key, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;  // caching is best effort
  std::filesystem::path tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << payload.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace stanley
