#ifndef STANLEY_CACHE_HPP
#define STANLEY_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "stanley/serialize.hpp"

namespace stanley {

// Content hash of (normalized generators, ambient, computation kind, field
// characteristic, algorithm version). Equal ideals produce equal keys; an
// algorithm-version bump invalidates everything.
std::string cache_key(const SquarefreeIdeal& ideal, const std::string& kind,
                      int field_char);

// One JSON file per key, written via rename so concurrent writers are safe.
// Location: STANLEY_CACHE_DIR, else XDG_CACHE_HOME/stanley, else
// ~/.cache/stanley, else ./.stanley-cache.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  static ResultCache from_env();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, const Json& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace stanley

#endif
