#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kcycles::cli {

inline constexpr int kCacheSchemaVersion = 1;

// On-disk result cache. Each entry lives in <dir>/<key>.json where the key is
// a hash of (operation, parameters, schema version); the document repeats the
// operation, parameters and schema so entries can be recomputed and checked.
// Writes go to a temporary file that is renamed into place.
class ResultCache {
 public:
  ResultCache() = default;  // disabled
  explicit ResultCache(std::filesystem::path dir);

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  static std::string key(const std::string& op, const nlohmann::json& params);

  // The cached result, or nothing on a miss, a schema mismatch or an
  // unreadable entry.
  std::optional<nlohmann::json> load(const std::string& op, const nlohmann::json& params) const;
  // Throws std::filesystem::filesystem_error / std::runtime_error on I/O failure.
  void store(const std::string& op, const nlohmann::json& params, const nlohmann::json& result) const;

  struct Entry {
    std::filesystem::path path;
    bool readable = false;  // false: not a parseable current-schema entry
    std::string op;
    nlohmann::json params;
    nlohmann::json result;
  };
  // Every *.json file in the directory, sorted by file name.
  std::vector<Entry> entries() const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace kcycles::cli
