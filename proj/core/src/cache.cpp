#include "noodle/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "noodle/errors.hpp"
#include "noodle/serialize.hpp"

namespace noodle {

namespace fs = std::filesystem;
using nlohmann::json;

EnumerationCache::EnumerationCache(fs::path dir, int meander_cap, int shape_cap)
    : dir_(std::move(dir)), meander_cap_(meander_cap), shape_cap_(shape_cap) {
  fs::create_directories(dir_);
}

fs::path EnumerationCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("NOODLE_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "noodle";
  }
  return fs::path(".noodle-cache");
}

namespace {

json load_manifest(const fs::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) return json::object();
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() ||
      j.value("format_version", -1) != EnumerationCache::kFormatVersion) {
    return json::object();  // stale or foreign format: rebuild entries
  }
  return j;
}

void store_manifest(const fs::path& dir, const json& manifest) {
  fs::path tmp = dir / "manifest.json.tmp";
  {
    std::ofstream out(tmp);
    out << manifest.dump(2) << '\n';
  }
  fs::rename(tmp, dir / "manifest.json");
}

fs::path data_file(const fs::path& dir, const std::string& kind, int k) {
  return dir / (kind + "_k" + std::to_string(k) + ".jsonl");
}

}  // namespace

std::optional<std::int64_t> EnumerationCache::manifest_count(const std::string& kind, int k) const {
  json manifest = load_manifest(dir_);
  if (!manifest.contains(kind)) return std::nullopt;
  const json& section = manifest[kind];
  std::string key = std::to_string(k);
  if (!section.contains(key)) return std::nullopt;
  return section[key].get<std::int64_t>();
}

void EnumerationCache::record(const std::string& kind, int k, std::int64_t count) {
  json manifest = load_manifest(dir_);
  manifest["format_version"] = kFormatVersion;
  manifest[kind][std::to_string(k)] = count;
  store_manifest(dir_, manifest);
}

std::string EnumerationCache::manifest_text() const { return load_manifest(dir_).dump(2); }

std::vector<Meander> EnumerationCache::meanders(int k) {
  if (auto count = manifest_count("meanders", k)) {
    std::ifstream in(data_file(dir_, "meanders", k));
    std::vector<Meander> out;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) out.push_back(meander_from_json(line));
    }
    if (static_cast<std::int64_t>(out.size()) == *count) return out;
    // fall through and rebuild on count mismatch
  }
  if (k > meander_cap_) {
    throw ResourceError("meander enumeration for k=" + std::to_string(k) +
                        " not cached and above cap " + std::to_string(meander_cap_) +
                        " (use --allow-long)");
  }
  std::vector<Meander> built = enumerate_meanders(k);
  {
    fs::path tmp = data_file(dir_, "meanders", k);
    std::ofstream out(tmp);
    for (const Meander& m : built) out << meander_to_json(m) << '\n';
  }
  record("meanders", k, static_cast<std::int64_t>(built.size()));
  return built;
}

std::vector<PartialShape> EnumerationCache::shapes(int k) {
  if (auto count = manifest_count("shapes", k)) {
    std::ifstream in(data_file(dir_, "shapes", k));
    std::vector<PartialShape> out;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) out.push_back(partial_shape_from_json(line));
    }
    if (static_cast<std::int64_t>(out.size()) == *count) return out;
  }
  if (k > shape_cap_) {
    throw ResourceError("shape enumeration for k=" + std::to_string(k) +
                        " not cached and above cap " + std::to_string(shape_cap_) +
                        " (use --allow-long)");
  }
  std::vector<PartialShape> built = enumerate_partial_shapes(k);
  {
    std::ofstream out(data_file(dir_, "shapes", k));
    for (const PartialShape& p : built) out << partial_shape_to_json(p) << '\n';
  }
  record("shapes", k, static_cast<std::int64_t>(built.size()));
  return built;
}

}  // namespace noodle
