#include "noodle/faces.hpp"

#include <algorithm>

#include "noodle/errors.hpp"

namespace noodle {

namespace {

struct ArcRec {
  Pos left;
  Pos right;
  bool open;
};

// I(arc) = the arc's gap span minus its direct children's gap spans.
// Arcs are non-crossing, so nesting is a forest; children of (a, b) are the
// maximal arcs strictly inside.
std::vector<Face> side_faces(std::vector<ArcRec> arcs, SystemSide side) {
  std::sort(arcs.begin(), arcs.end(), [](const ArcRec& x, const ArcRec& y) {
    return x.left < y.left;
  });
  std::vector<Face> out;
  out.reserve(arcs.size());
  // Stack of (arc index in `out`, right endpoint, gap cursor).
  struct OpenArc {
    std::size_t face;
    Pos right;
    Pos cursor;
  };
  std::vector<OpenArc> stack;
  auto close_until = [&](Pos left) {
    while (!stack.empty() && stack.back().right < left) {
      OpenArc top = stack.back();
      stack.pop_back();
      Face& f = out[top.face];
      for (Pos g = top.cursor; g < top.right; ++g) f.gaps.push_back(g);
      if (!stack.empty()) stack.back().cursor = top.right;  // child consumed its span
    }
  };
  for (const ArcRec& arc : arcs) {
    close_until(arc.left);
    out.push_back(Face{side, arc.left, arc.right, {}, arc.open});
    if (!stack.empty()) {
      // gaps between the previous child (or parent's left end) and this arc
      Face& parent = out[stack.back().face];
      for (Pos g = stack.back().cursor; g < arc.left; ++g) parent.gaps.push_back(g);
      stack.back().cursor = arc.left;
    }
    stack.push_back(OpenArc{out.size() - 1, arc.right, arc.left});
  }
  close_until(INT64_MAX);
  return out;
}

std::vector<ArcRec> arcs_of(const PartialMatching& m) {
  std::vector<ArcRec> arcs;
  for (const auto& [a, b] : m.pairs()) arcs.push_back(ArcRec{a, b, false});
  return arcs;
}

}  // namespace

std::vector<const Face*> FaceDecomposition::all_faces() const {
  std::vector<const Face*> out;
  out.reserve(bounded.size() + 2);
  for (const Face& f : bounded) out.push_back(&f);
  if (open_faces) {
    out.push_back(&open_faces->first);
    out.push_back(&open_faces->second);
  }
  return out;
}

FaceDecomposition faces(const Meander& c) {
  FaceDecomposition d;
  d.half_size = c.half_size();
  d.gap_count = 2 * c.half_size() - 1;
  auto upper = side_faces(arcs_of(word_to_matching(c.system().upper())), SystemSide::Upper);
  auto lower = side_faces(arcs_of(word_to_matching(c.system().lower())), SystemSide::Lower);
  d.bounded = std::move(upper);
  d.bounded.insert(d.bounded.end(), lower.begin(), lower.end());
  return d;
}

FaceDecomposition open_faces(const PartialShape& p) {
  const Pos last = p.system().domain().hi;  // = 2k
  auto extend = [&](const PartialMatching& m) {
    std::vector<ArcRec> arcs = arcs_of(m);
    auto singles = m.singletons();
    // exactly one singleton per side by the shape invariants
    const auto& [pos, dec] = singles.front();
    if (dec == Letter::L) {
      arcs.push_back(ArcRec{pos, last + 1, true});
    } else {
      arcs.push_back(ArcRec{-1, pos, true});
    }
    return arcs;
  };
  auto upper = side_faces(extend(p.system().upper()), SystemSide::Upper);
  auto lower = side_faces(extend(p.system().lower()), SystemSide::Lower);

  FaceDecomposition d;
  d.half_size = p.half_size();
  d.gap_count = 2 * p.half_size();
  Face f0, finf;
  for (auto* group : {&upper, &lower}) {
    for (Face& f : *group) {
      // sentinel gaps -1 and 2k contribute no ell variable
      std::erase_if(f.gaps, [&](std::int64_t g) { return g < 0 || g >= d.gap_count; });
      if (!f.open) {
        d.bounded.push_back(std::move(f));
      } else if (f.left == -1) {
        f0 = std::move(f);
      } else {
        finf = std::move(f);
      }
    }
  }
  d.open_faces = std::make_pair(std::move(f0), std::move(finf));
  return d;
}

}  // namespace noodle
