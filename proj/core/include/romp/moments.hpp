#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "romp/measures.hpp"
#include "romp/rational.hpp"

namespace romp {

struct LatticePoint {
  unsigned k1 = 0;
  unsigned k2 = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.k1 + b.k1, a.k2 + b.k2}; }
};

std::string to_string(LatticePoint p);

/// Moments of the ambient shift on a finite set of lattice points. Entries
/// are strictly positive and gamma(0,0) = 1 whenever (0,0) is present.
class GammaTable {
 public:
  GammaTable() = default;

  /// Throws std::invalid_argument on a non-positive value or gamma(0,0) != 1.
  void set(LatticePoint p, Rational value);

  std::optional<Rational> find(LatticePoint p) const;
  bool contains(LatticePoint p) const { return entries_.count(p) != 0; }

  /// Throws std::out_of_range naming the missing point.
  const Rational& at(LatticePoint p) const;

  const std::map<LatticePoint, Rational>& entries() const { return entries_; }
  unsigned max1() const;
  unsigned max2() const;
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const GammaTable&, const GammaTable&) = default;

 private:
  std::map<LatticePoint, Rational> entries_;
};

/// Squared weights over the rectangle [0, max1] x [0, max2]. alpha_sq is
/// defined at (i, j) with i < max1, beta_sq at (i, j) with j < max2.
struct WeightDiagram {
  unsigned max1 = 0;
  unsigned max2 = 0;
  std::map<LatticePoint, Rational> alpha_sq;
  std::map<LatticePoint, Rational> beta_sq;

  friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;
};

/// gamma(m, n) = integral of s^m t^n over [0, max1] x [0, max2]. Zero entries
/// are omitted. Throws MeasureError unless mu is a probability measure.
GammaTable gamma_from_measure(const Measure2& mu, unsigned max1, unsigned max2);

/// alpha^2_k = gamma_{k+e1} / gamma_k, beta^2_k = gamma_{k+e2} / gamma_k.
/// Requires every entry of the rectangle spanned by the table's bounds.
WeightDiagram weights_from_gamma(const GammaTable& g);

enum class PathOrder { row_first, column_first };

/// Product of squared weights along a monotone path to p. Row-first walks
/// (0,0) -> (p1,0) -> p as in the definition of the moments; column-first
/// is the other extreme path, used to test path independence.
Rational gamma_from_weights(const WeightDiagram& w, LatticePoint p, PathOrder order = PathOrder::row_first);

bool check_commuting(const WeightDiagram& w);

struct Restriction {
  Measure2 nu;
  Rational gamma;

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

/// Berger measure of the restriction to L_p: nu = s^p1 t^p2 mu / gamma_p.
/// Throws MeasureError when gamma_p <= 0.
Restriction restriction_measure(const Measure2& mu, LatticePoint p);

/// First k <= max_order with gamma_k(weights) != integral t^k d sigma, if any.
std::optional<unsigned> first_berger_mismatch(const std::vector<Rational>& squared_weights, const Measure1& sigma,
                                              unsigned max_order);

/// Bounded verification of the one-variable Berger identity up to order
/// max_order (requires max_order <= squared_weights.size()).
bool check_berger_1d(const std::vector<Rational>& squared_weights, const Measure1& sigma, unsigned max_order);

}  // namespace romp
