#pragma once

// Full sets P (P + Z+^2 = P) of the lattice, represented by their foundation:
// the antichain of componentwise-minimal points, listed along the
// descending staircase (first coordinates increasing, second decreasing).

#include <string>
#include <vector>

#include "romp/moments.hpp"

namespace romp {

class Pattern {
 public:
  /// Foundation of the full set generated by `points`. Throws
  /// std::invalid_argument on empty input.
  static Pattern from_points(const std::vector<LatticePoint>& points);

  const std::vector<LatticePoint>& foundation() const { return foundation_; }
  std::size_t size() const { return foundation_.size(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  explicit Pattern(std::vector<LatticePoint> foundation) : foundation_(std::move(foundation)) {}
  std::vector<LatticePoint> foundation_;
};

inline Pattern foundation(const std::vector<LatticePoint>& points) { return Pattern::from_points(points); }

struct StaircaseNode {
  LatticePoint point;
  bool is_corner = false;

  friend bool operator==(const StaircaseNode&, const StaircaseNode&) = default;
};

/// Foundation points interleaved with the corners (q1, p2) between
/// consecutive foundation points p, q.
struct StaircasePath {
  std::vector<StaircaseNode> nodes;

  std::vector<LatticePoint> points() const;
};

enum class StaircaseType { I, II, III, IV };

std::string to_string(StaircaseType type);

bool closure_membership(const Pattern& pattern, LatticePoint k);
StaircasePath staircase(const Pattern& pattern);

/// I: touches {0} x Z+ only; II: Z+ x {0} only; III: both; IV: neither.
StaircaseType classify_type(const Pattern& pattern);

/// Index of L_p intersected with L_q: the componentwise maximum.
LatticePoint meet_corner(LatticePoint p, LatticePoint q);

/// (p1, q2) for p before q in staircase order. Throws std::invalid_argument
/// when p does not precede (or equal) q.
LatticePoint join_origin(LatticePoint p, LatticePoint q);

/// p <= q in the staircase order: p1 <= q1 and p2 >= q2.
bool staircase_precedes(LatticePoint p, LatticePoint q);

}  // namespace romp
