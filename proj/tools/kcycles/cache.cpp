#include "kcycles/cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace kcycles::cli {

namespace {

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::optional<nlohmann::json> read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ResultCache::key(const std::string& op, const nlohmann::json& params) {
  const std::string material = op + "|" + params.dump() + "|" + std::to_string(kCacheSchemaVersion);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(material)));
  return buf;
}

std::optional<nlohmann::json> ResultCache::load(const std::string& op, const nlohmann::json& params) const {
  if (!dir_) return std::nullopt;
  auto doc = read_json(*dir_ / (key(op, params) + ".json"));
  if (!doc || !doc->is_object()) return std::nullopt;
  if (doc->value("schema", -1) != kCacheSchemaVersion) return std::nullopt;
  if (doc->value("op", std::string()) != op || doc->value("params", nlohmann::json()) != params) return std::nullopt;
  if (!doc->contains("result")) return std::nullopt;
  return (*doc)["result"];
}

void ResultCache::store(const std::string& op, const nlohmann::json& params, const nlohmann::json& result) const {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  const nlohmann::json doc = {{"schema", kCacheSchemaVersion}, {"op", op}, {"params", params}, {"result", result}};
  const std::filesystem::path target = *dir_ / (key(op, params) + ".json");

  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << "." << target.filename().string() << "." << ::getpid() << "." << counter++ << ".tmp";
  const std::filesystem::path tmp = *dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::vector<ResultCache::Entry> ResultCache::entries() const {
  std::vector<Entry> out;
  if (!dir_ || !std::filesystem::is_directory(*dir_)) return out;
  for (const auto& item : std::filesystem::directory_iterator(*dir_)) {
    const auto& path = item.path();
    if (path.extension() != ".json" || path.filename().string().front() == '.') continue;
    Entry entry{path, false, {}, {}, {}};
    auto doc = read_json(path);
    if (doc && doc->is_object() && doc->value("schema", -1) == kCacheSchemaVersion && doc->contains("op") &&
        (*doc)["op"].is_string() && doc->contains("params") && doc->contains("result")) {
      entry.readable = true;
      entry.op = (*doc)["op"].get<std::string>();
      entry.params = (*doc)["params"];
      entry.result = (*doc)["result"];
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.path < b.path; });
  return out;
}

}  // namespace kcycles::cli
