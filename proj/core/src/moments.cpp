#include "romp/moments.hpp"

#include <stdexcept>

namespace romp {

std::string to_string(LatticePoint p) { return "(" + std::to_string(p.k1) + "," + std::to_string(p.k2) + ")"; }

void GammaTable::set(LatticePoint p, Rational value) {
  if (sgn(value) <= 0) throw std::invalid_argument("gamma" + to_string(p) + " must be positive");
  if (p == LatticePoint{0, 0} && value != 1) throw std::invalid_argument("gamma(0,0) must equal 1");
  entries_[p] = std::move(value);
}

std::optional<Rational> GammaTable::find(LatticePoint p) const {
  auto it = entries_.find(p);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const Rational& GammaTable::at(LatticePoint p) const {
  auto it = entries_.find(p);
  if (it == entries_.end()) throw std::out_of_range("gamma table has no entry at " + to_string(p));
  return it->second;
}

unsigned GammaTable::max1() const {
  unsigned m = 0;
  for (const auto& [p, v] : entries_) m = std::max(m, p.k1);
  return m;
}

unsigned GammaTable::max2() const {
  unsigned m = 0;
  for (const auto& [p, v] : entries_) m = std::max(m, p.k2);
  return m;
}

GammaTable gamma_from_measure(const Measure2& mu, unsigned max1, unsigned max2) {
  if (!is_probability(mu)) throw MeasureError("gamma_from_measure requires a probability measure");
  GammaTable table;
  for (unsigned m = 0; m <= max1; ++m) {
    for (unsigned n = 0; n <= max2; ++n) {
      Rational v = integrate_monomial(mu, m, n);
      if (sgn(v) > 0) table.set({m, n}, std::move(v));
    }
  }
  return table;
}

WeightDiagram weights_from_gamma(const GammaTable& g) {
  WeightDiagram w;
  w.max1 = g.max1();
  w.max2 = g.max2();
  for (unsigned i = 0; i <= w.max1; ++i) {
    for (unsigned j = 0; j <= w.max2; ++j) {
      const Rational& here = g.at({i, j});
      if (i < w.max1) w.alpha_sq[{i, j}] = g.at({i + 1, j}) / here;
      if (j < w.max2) w.beta_sq[{i, j}] = g.at({i, j + 1}) / here;
    }
  }
  return w;
}

namespace {

const Rational& weight(const std::map<LatticePoint, Rational>& table, LatticePoint p, const char* name) {
  auto it = table.find(p);
  if (it == table.end()) throw std::out_of_range(std::string(name) + to_string(p) + " outside the weight diagram");
  return it->second;
}

}  // namespace

Rational gamma_from_weights(const WeightDiagram& w, LatticePoint p, PathOrder order) {
  if (p.k1 > w.max1 || p.k2 > w.max2) throw std::out_of_range("point " + to_string(p) + " outside the weight diagram");
  Rational g(1);
  if (order == PathOrder::row_first) {
    for (unsigned i = 0; i < p.k1; ++i) g *= weight(w.alpha_sq, {i, 0}, "alpha");
    for (unsigned j = 0; j < p.k2; ++j) g *= weight(w.beta_sq, {p.k1, j}, "beta");
  } else {
    for (unsigned j = 0; j < p.k2; ++j) g *= weight(w.beta_sq, {0, j}, "beta");
    for (unsigned i = 0; i < p.k1; ++i) g *= weight(w.alpha_sq, {i, p.k2}, "alpha");
  }
  return g;
}

bool check_commuting(const WeightDiagram& w) {
  for (const auto& [k, a] : w.alpha_sq) {
    auto b = w.beta_sq.find(k);
    auto b_right = w.beta_sq.find({k.k1 + 1, k.k2});
    auto a_up = w.alpha_sq.find({k.k1, k.k2 + 1});
    if (b == w.beta_sq.end() || b_right == w.beta_sq.end() || a_up == w.alpha_sq.end()) continue;
    if (b_right->second * a != a_up->second * b->second) return false;
  }
  return true;
}

Restriction restriction_measure(const Measure2& mu, LatticePoint p) {
  Rational g = integrate_monomial(mu, p.k1, p.k2);
  if (sgn(g) <= 0) throw MeasureError("moment at " + to_string(p) + " vanishes; restriction undefined");
  return {density_scale(mu, p.k1, p.k2, 1 / g), g};
}

std::optional<unsigned> first_berger_mismatch(const std::vector<Rational>& squared_weights, const Measure1& sigma,
                                              unsigned max_order) {
  if (max_order > squared_weights.size()) throw std::invalid_argument("not enough weights for the requested order");
  Rational g(1);
  for (unsigned k = 0; k <= max_order; ++k) {
    if (k > 0) g *= squared_weights[k - 1];
    if (g != moment(sigma, k)) return k;
  }
  return std::nullopt;
}

bool check_berger_1d(const std::vector<Rational>& squared_weights, const Measure1& sigma, unsigned max_order) {
  return !first_berger_mismatch(squared_weights, sigma, max_order).has_value();
}

}  // namespace romp
