#include "noodle/kappa.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "noodle/errors.hpp"
#include "noodle/union_find.hpp"

namespace noodle {

namespace {

struct BlockFace {
  bool central_binom;
  std::vector<int> gaps;  // block-local indices, ascending
};

// Shared weight tables w(s) = Cat_s 4^-s and C(2s,s) 4^-s.
struct WeightTables {
  std::vector<Dyadic> cat;
  std::vector<Dyadic> cb;

  explicit WeightTables(int max_sum) {
    cat.reserve(static_cast<std::size_t>(max_sum) + 1);
    cb.reserve(static_cast<std::size_t>(max_sum) + 1);
    for (int s = 0; s <= max_sum; ++s) {
      cat.push_back(Dyadic::scaled(catalan(s), 2 * s));
      cb.push_back(Dyadic::scaled(central_binomial(s), 2 * s));
    }
  }

  const std::vector<Dyadic>& of(const BlockFace& f) const { return f.central_binom ? cb : cat; }
};

int max_face_span(const std::vector<BlockFace>& faces, int cap) {
  int m = 0;
  for (const BlockFace& f : faces) m = std::max(m, static_cast<int>(f.gaps.size()) * cap);
  return m;
}

// Reference evaluator: plain odometer over [0, cap]^gaps. Exponential in
// the block dimension; kept as the second algebraic route for testing and
// as a fallback for non-tree incidence (which the planar geometry does not
// produce).
class OdometerBlockSum {
 public:
  OdometerBlockSum(std::vector<BlockFace> faces, int n_gaps, int cap)
      : faces_(std::move(faces)), n_gaps_(n_gaps), cap_(cap),
        tables_(max_face_span(faces_, cap)) {
    faces_with_gap_.resize(static_cast<std::size_t>(n_gaps));
    faces_ending_at_.resize(static_cast<std::size_t>(n_gaps));
    partial_.assign(faces_.size(), 0);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      for (int g : faces_[f].gaps) faces_with_gap_[static_cast<std::size_t>(g)].push_back(f);
      faces_ending_at_[static_cast<std::size_t>(faces_[f].gaps.back())].push_back(f);
    }
  }

  Dyadic run() {
    total_ = Dyadic(0);
    rec(0, Dyadic(1));
    return total_;
  }

 private:
  void rec(int d, const Dyadic& prod) {
    if (d == n_gaps_) {
      total_ += prod;
      return;
    }
    const auto& ending = faces_ending_at_[static_cast<std::size_t>(d)];
    const auto& touching = faces_with_gap_[static_cast<std::size_t>(d)];
    for (int ell = 0; ell <= cap_; ++ell) {
      Dyadic p = prod;
      for (std::size_t f : ending) {
        p *= tables_.of(faces_[f])[static_cast<std::size_t>(partial_[f])];
      }
      rec(d + 1, p);
      for (std::size_t f : touching) ++partial_[f];
    }
    for (std::size_t f : touching) partial_[f] -= cap_ + 1;
  }

  std::vector<BlockFace> faces_;
  int n_gaps_;
  int cap_;
  WeightTables tables_;
  std::vector<std::vector<std::size_t>> faces_with_gap_;
  std::vector<std::vector<std::size_t>> faces_ending_at_;
  std::vector<int> partial_;
  Dyadic total_;
};

// Tree evaluator. Faces are vertices; a gap covered by two faces is an
// edge, a gap covered by one face a free variable of that face. Every
// factor depends only on the sum of its incident variables, so subtree
// sums compose by 1-D convolution: cost O(faces * cap^2) instead of
// cap^gaps.
class TreeBlockSum {
 public:
  TreeBlockSum(std::vector<BlockFace> faces, int n_gaps, int cap)
      : faces_(std::move(faces)), cap_(cap), tables_(max_face_span(faces_, cap)) {
    free_gaps_.assign(faces_.size(), 0);
    adjacency_.assign(faces_.size(), {});
    std::vector<std::vector<std::size_t>> faces_of_gap(static_cast<std::size_t>(n_gaps));
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      for (int g : faces_[f].gaps) faces_of_gap[static_cast<std::size_t>(g)].push_back(f);
    }
    UnionFind uf(faces_.size());
    is_tree_ = true;
    for (const auto& owners : faces_of_gap) {
      if (owners.size() == 1) {
        ++free_gaps_[owners[0]];
      } else if (owners.size() == 2) {
        if (!uf.merge(owners[0], owners[1])) {
          is_tree_ = false;  // parallel edge or cycle
          return;
        }
        adjacency_[owners[0]].push_back(owners[1]);
        adjacency_[owners[1]].push_back(owners[0]);
      }
    }
  }

  bool is_tree() const { return is_tree_; }

  Dyadic run() {
    std::vector<Dyadic> dist = subtree_distribution(0, SIZE_MAX);
    const auto& w = tables_.of(faces_[0]);
    Dyadic total(0);
    for (std::size_t s = 0; s < dist.size(); ++s) {
      if (!dist[s].is_zero()) total += dist[s] * w[s];
    }
    return total;
  }

 private:
  // distribution of the sum of all subtree variables except the edge to
  // the parent, weighted by every factor strictly below `face`
  std::vector<Dyadic> subtree_distribution(std::size_t face, std::size_t parent) {
    std::vector<Dyadic> dist{Dyadic(1)};
    for (int i = 0; i < free_gaps_[face]; ++i) dist = convolve_ones(dist);
    for (std::size_t child : adjacency_[face]) {
      if (child == parent) continue;
      dist = convolve(dist, message(child, face));
    }
    return dist;
  }

  // message over the connecting edge variable t: subtree sum with the
  // child's own factor evaluated at t + (child subtree sum)
  std::vector<Dyadic> message(std::size_t face, std::size_t parent) {
    std::vector<Dyadic> dist = subtree_distribution(face, parent);
    const auto& w = tables_.of(faces_[face]);
    std::vector<Dyadic> out(static_cast<std::size_t>(cap_) + 1);
    for (int t = 0; t <= cap_; ++t) {
      Dyadic sum(0);
      for (std::size_t s = 0; s < dist.size(); ++s) {
        if (!dist[s].is_zero()) sum += dist[s] * w[static_cast<std::size_t>(t) + s];
      }
      out[static_cast<std::size_t>(t)] = sum;
    }
    return out;
  }

  std::vector<Dyadic> convolve(const std::vector<Dyadic>& a, const std::vector<Dyadic>& b) {
    std::vector<Dyadic> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  // convolution with the all-ones vector on [0, cap], via a sliding
  // window over prefix sums
  std::vector<Dyadic> convolve_ones(const std::vector<Dyadic>& a) {
    std::vector<Dyadic> prefix(a.size());
    Dyadic acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc += a[i];
      prefix[i] = acc;
    }
    std::vector<Dyadic> out(a.size() + static_cast<std::size_t>(cap_));
    for (std::size_t s = 0; s < out.size(); ++s) {
      Dyadic hi = prefix[std::min(s, a.size() - 1)];
      if (s > static_cast<std::size_t>(cap_)) {
        std::size_t cut = s - static_cast<std::size_t>(cap_) - 1;
        if (cut < a.size()) hi -= prefix[cut];
      }
      out[s] = hi;
    }
    return out;
  }

  std::vector<BlockFace> faces_;
  int cap_;
  WeightTables tables_;
  std::vector<int> free_gaps_;
  std::vector<std::vector<std::size_t>> adjacency_;
  bool is_tree_ = true;
};

struct Block {
  std::vector<BlockFace> faces;
  int n_gaps = 0;
};

std::vector<Block> decompose_blocks(const FaceDecomposition& d) {
  struct RawFace {
    bool central_binom;
    const std::vector<std::int64_t>* gaps;
  };
  std::vector<RawFace> raw;
  for (const Face* f : d.all_faces()) {
    for (std::int64_t g : f->gaps) {
      if (g < 0 || g >= d.gap_count) throw InvariantError("face_product_sum: gap out of range");
      if (((g ^ f->gaps.front()) & 1) != 0) {
        throw InvariantError("face_product_sum: face mixes gap parities");
      }
    }
    if (f->gaps.empty()) continue;  // Cat_0 = C(0,0) = 1
    raw.push_back(RawFace{f->open, &f->gaps});
  }

  auto n_gaps = static_cast<std::size_t>(d.gap_count);
  UnionFind uf(n_gaps);
  std::vector<bool> covered(n_gaps, false);
  for (const RawFace& f : raw) {
    for (std::int64_t g : *f.gaps) {
      covered[static_cast<std::size_t>(g)] = true;
      uf.merge(static_cast<std::size_t>(g), static_cast<std::size_t>(f.gaps->front()));
    }
  }
  for (std::size_t g = 0; g < n_gaps; ++g) {
    // a gap with no face over it would disconnect the shape
    if (!covered[g]) throw InvariantError("face_product_sum: uncovered gap");
  }

  std::map<std::size_t, std::vector<std::size_t>> block_gaps;  // root -> global gaps
  for (std::size_t g = 0; g < n_gaps; ++g) block_gaps[uf.find(g)].push_back(g);

  std::vector<Block> blocks;
  for (auto& [root, gaps] : block_gaps) {
    Block block;
    block.n_gaps = static_cast<int>(gaps.size());
    for (const RawFace& f : raw) {
      if (uf.find(static_cast<std::size_t>(f.gaps->front())) != root) continue;
      BlockFace bf;
      bf.central_binom = f.central_binom;
      for (std::int64_t g : *f.gaps) {
        auto it = std::lower_bound(gaps.begin(), gaps.end(), static_cast<std::size_t>(g));
        bf.gaps.push_back(static_cast<int>(it - gaps.begin()));
      }
      std::sort(bf.gaps.begin(), bf.gaps.end());
      block.faces.push_back(std::move(bf));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// nullopt unless the block is a lone gap under a lone face
std::optional<Dyadic> closed_form_block(const Block& block) {
  if (block.n_gaps != 1 || block.faces.size() != 1) return std::nullopt;
  if (block.faces[0].central_binom) {
    // would diverge; cannot occur over a connected shape
    throw InvariantError("face_product_sum: open face alone on a gap");
  }
  // sum_{l>=0} Cat_l 4^-l telescopes to exactly 2
  return Dyadic(2);
}

}  // namespace

Dyadic face_product_sum(const FaceDecomposition& d, int l_max) {
  if (l_max < 0) throw std::domain_error("face_product_sum: l_max < 0");
  Dyadic result(1);
  for (Block& block : decompose_blocks(d)) {
    if (auto exact = closed_form_block(block)) {
      result *= *exact;
       continue;
    }
    TreeBlockSum tree(block.faces, block.n_gaps, l_max);
    if (tree.is_tree()) {
      result *= tree.run();
    } else {
      result *= OdometerBlockSum(std::move(block.faces), block.n_gaps, l_max).run();
    }
  }
  return result;
}

Dyadic face_product_sum_reference(const FaceDecomposition& d, int l_max) {
  if (l_max < 0) throw std::domain_error("face_product_sum_reference: l_max < 0");
  Dyadic result(1);
  for (Block& block : decompose_blocks(d)) {
    if (auto exact = closed_form_block(block)) {
      result *= *exact;
      continue;
    }
    result *= OdometerBlockSum(std::move(block.faces), block.n_gaps, l_max).run();
  }
  return result;
}

Dyadic prob_shape_lower(const Meander& c, int l_max) {
  auto k = c.half_size();
  Dyadic scale = Dyadic::scaled(BigInt(k), 4 * k - 1);  // k * 2^(1-4k)
  return scale * face_product_sum(faces(c), l_max);
}

Dyadic prob_shape_upper_term(const PartialShape& p, int l_max) {
  auto k = p.half_size();
  Dyadic scale = Dyadic::scaled(BigInt(1), 4 * k + 2);  // 2^(-4k-2)
  return scale * face_product_sum(open_faces(p), l_max);
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Exact commutative sum, so the chunking is schedule-independent.
template <typename Item, typename Fn>
Dyadic parallel_sum(const std::vector<Item>& items, int threads, Fn fn) {
  threads = std::min<int>(resolve_threads(threads), std::max<std::size_t>(items.size(), 1));
  if (threads <= 1 || items.size() <= 1) {
    Dyadic total(0);
    for (const Item& it : items) total += fn(it);
    return total;
  }
  std::vector<std::future<Dyadic>> futures;
  std::size_t chunk = (items.size() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(items.size(), begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&items, begin, end, &fn]() {
      Dyadic total(0);
      for (std::size_t i = begin; i < end; ++i) total += fn(items[i]);
      return total;
    }));
  }
  Dyadic total(0);
  for (auto& f : futures) total += f.get();
  return total;
}

}  // namespace

Rational kappa_lower(const TruncationSpec& spec, EnumerationSource& source, int threads,
                     std::vector<PerKContribution>* per_k) {
  if (spec.k_max < 1) throw std::domain_error("kappa_lower: k_max < 1");
  Rational total(0);
  for (int k = 1; k <= spec.k_max; ++k) {
    std::vector<Meander> meanders = source.meanders(k);
    Dyadic sum = parallel_sum(meanders, threads,
                              [&](const Meander& c) { return prob_shape_lower(c, spec.l_max); });
    Rational contribution = Rational(sum) * Rational(1, k);
    total += contribution;
    if (per_k) {
      per_k->push_back({k, static_cast<std::int64_t>(meanders.size()), contribution});
    }
  }
  return total;
}

Rational kappa_upper(const TruncationSpec& spec, EnumerationSource& source, int threads,
                     std::vector<PerKContribution>* per_k) {
  if (spec.k_max < 0) throw std::domain_error("kappa_upper: k_max < 0");
  Rational subtracted(0);
  for (int k = 1; k <= spec.k_max; ++k) {
    std::vector<PartialShape> shapes = source.shapes(k);
    Dyadic sum = parallel_sum(shapes, threads, [&](const PartialShape& p) {
      return prob_shape_upper_term(p, spec.l_max);
    });
    Rational contribution = Rational(sum) * Rational(2);
    subtracted += contribution;
    if (per_k) {
      per_k->push_back({k, static_cast<std::int64_t>(shapes.size()), contribution});
    }
  }
  return Rational(1, 2) - subtracted;
}

BoundsReport kappa_bounds(const TruncationSpec& spec, EnumerationSource& source, int threads) {
  BoundsReport report;
  report.spec = spec;
  report.lower = kappa_lower(spec, source, threads, &report.lower_per_k);
  report.upper = kappa_upper(spec, source, threads, &report.upper_per_k);
  if (!(report.lower < report.upper) || report.lower <= Rational(0) ||
      report.upper >= Rational(1)) {
    throw InvariantError("kappa_bounds: bounds failed the sandwich check");
  }
  return report;
}

}  // namespace noodle
