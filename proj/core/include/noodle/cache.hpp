#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "noodle/kappa.hpp"

namespace noodle {

/// Disk-backed enumeration store: one line-delimited JSON file per
/// half-size plus a versioned manifest with counts. A manifest with a
/// different format version is treated as absent and rebuilt.
class EnumerationCache : public EnumerationSource {
 public:
  static constexpr int kFormatVersion = 1;

  explicit EnumerationCache(std::filesystem::path dir, int meander_cap = 3, int shape_cap = 3);

  /// Flag > NOODLE_CACHE_DIR > $HOME/.cache/noodle > ./.noodle-cache.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  /// Enumerations load from disk when present, are built and stored when
  /// absent and within the cap, and throw ResourceError beyond it.
  std::vector<Meander> meanders(int k) override;
  std::vector<PartialShape> shapes(int k) override;

  void set_caps(int meander_cap, int shape_cap) {
    meander_cap_ = meander_cap;
    shape_cap_ = shape_cap;
  }

  const std::filesystem::path& dir() const { return dir_; }
  std::string manifest_text() const;

 private:
  std::optional<std::int64_t> manifest_count(const std::string& kind, int k) const;
  void record(const std::string& kind, int k, std::int64_t count);

  std::filesystem::path dir_;
  int meander_cap_;
  int shape_cap_;
};

}  // namespace noodle
