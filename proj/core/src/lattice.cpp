#include "romp/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace romp {

Pattern Pattern::from_points(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("a pattern needs at least one generating point");
  std::vector<LatticePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  // Sweep by increasing k1; a point is minimal iff its k2 beats every k2 seen so far.
  std::vector<LatticePoint> minimal;
  unsigned best_k2 = std::numeric_limits<unsigned>::max();
  for (const auto& p : sorted) {
    if (p.k2 < best_k2) {
      minimal.push_back(p);
      best_k2 = p.k2;
    }
  }
  return Pattern(std::move(minimal));
}

std::vector<LatticePoint> StaircasePath::points() const {
  std::vector<LatticePoint> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes) out.push_back(n.point);
  return out;
}

std::string to_string(StaircaseType type) {
  switch (type) {
    case StaircaseType::I: return "I";
    case StaircaseType::II: return "II";
    case StaircaseType::III: return "III";
    case StaircaseType::IV: return "IV";
  }
  return "?";
}

bool closure_membership(const Pattern& pattern, LatticePoint k) {
  return std::any_of(pattern.foundation().begin(), pattern.foundation().end(),
                     [&](LatticePoint f) { return f.k1 <= k.k1 && f.k2 <= k.k2; });
}

StaircasePath staircase(const Pattern& pattern) {
  StaircasePath path;
  const auto& f = pattern.foundation();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) path.nodes.push_back({meet_corner(f[i - 1], f[i]), true});
    path.nodes.push_back({f[i], false});
  }
  return path;
}

StaircaseType classify_type(const Pattern& pattern) {
  const auto& f = pattern.foundation();
  // Staircase order puts the minimal k1 first and the minimal k2 last.
  const bool touches_t_axis = f.front().k1 == 0;
  const bool touches_s_axis = f.back().k2 == 0;
  if (touches_t_axis && touches_s_axis) return StaircaseType::III;
  if (touches_t_axis) return StaircaseType::I;
  if (touches_s_axis) return StaircaseType::II;
  return StaircaseType::IV;
}

LatticePoint meet_corner(LatticePoint p, LatticePoint q) { return {std::max(p.k1, q.k1), std::max(p.k2, q.k2)}; }

bool staircase_precedes(LatticePoint p, LatticePoint q) { return p.k1 <= q.k1 && p.k2 >= q.k2; }

LatticePoint join_origin(LatticePoint p, LatticePoint q) {
  if (!staircase_precedes(p, q)) {
    throw std::invalid_argument("join_origin: " + to_string(p) + " does not precede " + to_string(q));
  }
  return {p.k1, q.k2};
}

}  // namespace romp
