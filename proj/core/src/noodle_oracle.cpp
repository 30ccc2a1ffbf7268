#include "noodle/noodle_oracle.hpp"

namespace noodle {

namespace {

constexpr std::uint8_t kUnknown = 0;
constexpr std::uint8_t kL = 1;
constexpr std::uint8_t kR = 2;

}  // namespace

NoodleOracle::NoodleOracle(std::uint64_t seed) : seed_(seed) {
  side_salt_[0] = mix64(seed ^ 0x75b9a63eb3c4a2d1ULL);
  side_salt_[1] = mix64(seed ^ 0x1d2c5f8a9be47136ULL);
}

NoodleOracle NoodleOracle::with_letters(std::uint64_t seed,
                                        const std::unordered_map<Pos, Letter>& upper,
                                        const std::unordered_map<Pos, Letter>& lower) {
  NoodleOracle oracle(seed);
  for (const auto& [pos, l] : upper) oracle.force(NoodleSide::Upper, pos, l);
  for (const auto& [pos, l] : lower) oracle.force(NoodleSide::Lower, pos, l);
  return oracle;
}

std::uint8_t& NoodleOracle::slot(NoodleSide side, Pos pos) {
  Table& t = tables_[static_cast<std::size_t>(side)];
  std::vector<std::uint8_t>& v = pos >= 0 ? t.nonneg : t.neg;
  auto idx = static_cast<std::size_t>(pos >= 0 ? pos : -1 - pos);
  if (idx >= v.size()) {
    std::size_t grown = v.size() * 2 + 16;
    v.resize(grown > idx + 1 ? grown : idx + 1, kUnknown);
  }
  return v[idx];
}

void NoodleOracle::force(NoodleSide side, Pos pos, Letter l) {
  slot(side, pos) = l == Letter::L ? kL : kR;
}

Letter NoodleOracle::letter(NoodleSide side, Pos pos) {
  std::uint8_t& s = slot(side, pos);
  if (s == kUnknown) {
    std::uint64_t zig = pos >= 0 ? static_cast<std::uint64_t>(pos) << 1
                                 : (static_cast<std::uint64_t>(-1 - pos) << 1) | 1;
    std::uint64_t h = mix64(side_salt_[static_cast<std::size_t>(side)] ^ mix64(zig));
    s = (h & 1) ? kR : kL;
    ++draws_;
  }
  return s == kL ? Letter::L : Letter::R;
}

bool NoodleOracle::is_cached(NoodleSide side, Pos pos) const {
  const Table& t = tables_[static_cast<std::size_t>(side)];
  const std::vector<std::uint8_t>& v = pos >= 0 ? t.nonneg : t.neg;
  auto idx = static_cast<std::size_t>(pos >= 0 ? pos : -1 - pos);
  return idx < v.size() && v[idx] != kUnknown;
}

}  // namespace noodle
