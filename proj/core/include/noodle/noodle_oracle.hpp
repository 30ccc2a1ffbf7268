#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "noodle/rng.hpp"
#include "noodle/words.hpp"

namespace noodle {

enum class NoodleSide : std::uint8_t { Upper, Lower };

/// Lazy access to the two i.i.d. fair letter sequences of an infinite
/// noodle. Letters are counter-based: letter(side, pos) is a pure function
/// of (seed, side, pos), so a position's letter never changes and the
/// query order is irrelevant. The cache only exists to count fresh draws
/// against exploration budgets.
class NoodleOracle {
 public:
  explicit NoodleOracle(std::uint64_t seed);

  /// Oracle whose listed positions are forced; everything else falls back
  /// to the seeded stream. Forced letters do not count as draws.
  static NoodleOracle with_letters(std::uint64_t seed,
                                   const std::unordered_map<Pos, Letter>& upper,
                                   const std::unordered_map<Pos, Letter>& lower);

  Letter letter(NoodleSide side, Pos pos);

  std::uint64_t seed() const { return seed_; }
  std::int64_t draws() const { return draws_; }
  bool is_cached(NoodleSide side, Pos pos) const;

 private:
  struct Table {
    std::vector<std::uint8_t> nonneg;  // index pos
    std::vector<std::uint8_t> neg;     // index -1-pos
  };

  std::uint8_t& slot(NoodleSide side, Pos pos);
  void force(NoodleSide side, Pos pos, Letter l);

  std::uint64_t seed_;
  std::uint64_t side_salt_[2];
  Table tables_[2];
  std::int64_t draws_ = 0;
};

}  // namespace noodle
