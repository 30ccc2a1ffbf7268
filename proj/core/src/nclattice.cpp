#include "noodle/nclattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "noodle/enumeration.hpp"
#include "noodle/errors.hpp"
#include "noodle/sampling.hpp"
#include "noodle/union_find.hpp"

namespace noodle {

namespace {

bool blocks_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int e : blocks[b]) block_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
  }
  // stack test: scanning 1..n, a block must be closed before any enclosing
  // block resumes
  std::vector<int> stack;
  std::vector<int> remaining(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) remaining[b] = static_cast<int>(blocks[b].size());
  for (int e = 1; e <= n; ++e) {
    int b = block_of[static_cast<std::size_t>(e)];
    if (stack.empty() || stack.back() != b) {
      if (std::find(stack.begin(), stack.end(), b) != stack.end()) return false;  // crossing
      stack.push_back(b);
    }
    if (--remaining[static_cast<std::size_t>(b)] == 0) {
      if (stack.back() != b) return false;
      stack.pop_back();
    }
  }
  return true;
}

}  // namespace

NCPartition::NCPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::domain_error("NCPartition: n < 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (auto& block : blocks_) {
    if (block.empty()) throw InvariantError("NCPartition: empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) {
        throw InvariantError("NCPartition: blocks must partition 1..n");
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (!seen[static_cast<std::size_t>(e)]) {
      throw InvariantError("NCPartition: blocks must partition 1..n");
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (!blocks_noncrossing(n_, blocks_)) throw InvariantError("NCPartition: crossing blocks");
}

NCPartition NCPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int e = 1; e <= n; ++e) blocks.push_back({e});
  return NCPartition(n, std::move(blocks));
}

NCPartition NCPartition::one_block(int n) {
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) block[static_cast<std::size_t>(e - 1)] = e;
  return NCPartition(n, {block});
}

NCPartition NCPartition::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, '|')) {
    std::vector<int> block;
    std::stringstream bs(chunk);
    std::string elem;
    while (std::getline(bs, elem, ',')) {
      if (elem.empty()) continue;
      block.push_back(std::stoi(elem));
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return NCPartition(n, std::move(blocks));
}

std::string NCPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

int NCPartition::block_index_of(int element) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), element)) {
      return static_cast<int>(b);
    }
  }
  throw std::domain_error("NCPartition: element outside 1..n");
}

bool leq(const NCPartition& a, const NCPartition& b) {
  if (a.n() != b.n()) throw std::domain_error("leq: mismatched n");
  for (const auto& block : a.blocks()) {
    int bb = b.block_index_of(block.front());
    const auto& host = b.blocks()[static_cast<std::size_t>(bb)];
    for (int e : block) {
      if (!std::binary_search(host.begin(), host.end(), e)) return false;
    }
  }
  return true;
}

std::vector<NCPartition> all_noncrossing_partitions(int n) {
  // one partition per non-crossing matching, through the doubling bijection
  std::vector<NCPartition> out;
  for (const PartialMatching& m : enumerate_noncrossing_matchings(n)) {
    out.push_back(partition_from_matching(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Merging two blocks of pi (keeping it non-crossing) is exactly a cover in
// NC(n): block counts drop by one along any chain.
std::vector<NCPartition> up_covers(const NCPartition& pi) {
  std::vector<NCPartition> out;
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<std::vector<int>> merged;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b == i || b == j) continue;
        merged.push_back(blocks[b]);
      }
      std::vector<int> joined = blocks[i];
      joined.insert(joined.end(), blocks[j].begin(), blocks[j].end());
      merged.push_back(std::move(joined));
      if (!blocks_noncrossing(pi.n(), merged)) continue;
      out.emplace_back(pi.n(), std::move(merged));
    }
  }
  return out;
}

}  // namespace

std::int64_t hasse_distance(const NCPartition& a, const NCPartition& b, int cap) {
  if (a.n() != b.n()) throw std::domain_error("hasse_distance: mismatched n");
  if (a.n() > cap) {
    throw ResourceError("hasse_distance: n exceeds BFS cap " + std::to_string(cap));
  }
  std::vector<NCPartition> vertices = all_noncrossing_partitions(a.n());
  std::map<NCPartition, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (const NCPartition& up : up_covers(vertices[i])) {
      std::size_t j = index.at(up);
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }
  std::size_t src = index.at(a);
  std::size_t dst = index.at(b);
  std::vector<std::int64_t> dist(vertices.size(), -1);
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (v == dst) return dist[v];
    for (std::size_t w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  throw InvariantError("hasse_distance: diagram is disconnected");
}

PairSystem gnp_meandric_system(const NCPartition& pi, const NCPartition& rho) {
  if (pi.n() != rho.n()) throw std::domain_error("gnp_meandric_system: mismatched n");
  auto matching_word = [](const NCPartition& p) {
    const Pos size = 2 * p.n();
    std::vector<std::pair<Pos, Pos>> pairs;
    auto left = [](int i) { return static_cast<Pos>(2 * i - 2); };
    auto right = [](int i) { return static_cast<Pos>(2 * i - 1); };
    for (const auto& block : p.blocks()) {
      for (std::size_t j = 0; j + 1 < block.size(); ++j) {
        pairs.emplace_back(right(block[j]), left(block[j + 1]));
      }
      pairs.emplace_back(left(block.front()), right(block.back()));
    }
    return matching_to_word(PartialMatching(Interval{0, size - 1}, pairs, {}));
  };
  return PairSystem(matching_word(pi), matching_word(rho));
}

NCPartition partition_from_matching(const PartialMatching& m) {
  if (m.domain().lo != 0 || m.domain().length() % 2 != 0 || !m.is_complete()) {
    throw std::domain_error("partition_from_matching: need a complete matching on [0, 2n-1]");
  }
  int n = static_cast<int>(m.domain().length() / 2);
  UnionFind uf(static_cast<std::size_t>(n));
  for (const auto& [a, b] : m.pairs()) {
    // point 2i-2 or 2i-1 belongs to integer i
    auto owner = [](Pos p) { return static_cast<std::size_t>(p / 2); };
    uf.merge(owner(a), owner(b));
  }
  std::map<std::size_t, std::vector<int>> by_root;
  for (int i = 1; i <= n; ++i) by_root[uf.find(static_cast<std::size_t>(i - 1))].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, block] : by_root) blocks.push_back(std::move(block));
  return NCPartition(n, std::move(blocks));
}

std::int64_t distance_via_cc(const NCPartition& pi, const NCPartition& rho) {
  return pi.n() - components(gnp_meandric_system(pi, rho)).count;
}

NCPartition sample_nc_partition(std::int64_t n, RandomSource& rng) {
  Word w = sample_balanced_word(n, rng);
  return partition_from_matching(word_to_matching(w));
}

TypicalDistanceResult typical_distance_experiment(std::int64_t n, std::int64_t samples,
                                                  std::uint64_t seed) {
  if (n < 1) throw std::domain_error("typical_distance_experiment: n < 1");
  if (samples < 1) throw std::domain_error("typical_distance_experiment: samples < 1");
  NCPartition zero = NCPartition::singletons(static_cast<int>(n));
  double sum_d = 0;
  double sum_d0 = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    RandomSource rng(RandomSource::mix(seed, static_cast<std::uint64_t>(i)));
    NCPartition pi = sample_nc_partition(n, rng);
    NCPartition rho = sample_nc_partition(n, rng);
    sum_d += static_cast<double>(distance_via_cc(pi, rho)) / static_cast<double>(n);
    sum_d0 += static_cast<double>(distance_via_cc(zero, rho)) / static_cast<double>(n);
  }
  TypicalDistanceResult result;
  result.mean_d_over_n = sum_d / static_cast<double>(samples);
  result.mean_d0_over_n = sum_d0 / static_cast<double>(samples);
  result.n = n;
  result.samples = samples;
  result.seed = seed;
  return result;
}

}  // namespace noodle
