#include "romp/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "checks.hpp"

namespace romp {

RompInstance generate_instance(const Measure2& mu, const Pattern& pattern) {
  if (!is_probability(mu)) throw MeasureError("generate_instance requires a probability measure");
  RompInstance inst;
  inst.pattern = pattern;
  unsigned max1 = 0;
  unsigned max2 = 0;
  for (const auto& k : pattern.foundation()) {
    inst.localized.emplace(k, restriction_measure(mu, k).nu);
    max1 = std::max(max1, k.k1);
    max2 = std::max(max2, k.k2);
  }
  inst.sigma = marginal_x(mu);
  inst.tau = marginal_y(mu);
  inst.gamma = gamma_from_measure(mu, max1, max2);
  return inst;
}

unsigned default_moment_bound(const Measure2& mu) { return 2 * static_cast<unsigned>(mu.size()); }

ConditionReport verify_solution(const RompInstance& inst, const Measure2& mu, unsigned moment_bound) {
  ConditionReport report;
  const bool probability = is_probability(mu);
  if (probability) {
    report.holds("v.prob");
  } else {
    Witness w;
    if (auto neg = most_negative_atom(mu)) w = detail::atom_witness(*neg);
    w.values = {total_mass(mu), Rational(1)};
    report.fails("v.prob", std::move(w));
  }
  for (const auto& [k, nu] : inst.localized) {
    const std::string id = "v.restrict" + to_string(k);
    const Rational g = integrate_monomial(mu, k.k1, k.k2);
    if (sgn(g) <= 0) {
      report.fails(id, Witness{{}, std::nullopt, {g}, "vanishing moment"});
      continue;
    }
    detail::check_equal(report, id, density_scale(mu, k.k1, k.k2, 1 / g), nu);
  }
  detail::check_equal(report, "v.sigma", marginal_x(mu), inst.sigma);
  detail::check_equal(report, "v.tau", marginal_y(mu), inst.tau);
  for (const auto& [p, value] : inst.gamma.entries()) {
    if (p.k1 > moment_bound || p.k2 > moment_bound) continue;
    detail::check_scalar_eq(report, "v.moment" + to_string(p), integrate_monomial(mu, p.k1, p.k2), value);
  }
  return report;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  unsigned between(unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(engine_() % (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

Rational random_coordinate(Draw& draw, unsigned den_bound, bool allow_zero) {
  if (allow_zero && draw.between(0, 3) == 0) return Rational(0);
  const unsigned den = draw.between(1, den_bound);
  Rational r(draw.between(1, 4 * den), den);
  r.canonicalize();
  return r;
}

std::vector<unsigned> distinct_sample(Draw& draw, unsigned count, unsigned lo, unsigned hi) {
  std::vector<unsigned> pool;
  for (unsigned v = lo; v <= hi; ++v) pool.push_back(v);
  for (unsigned i = 0; i < count; ++i) std::swap(pool[i], pool[draw.between(i, static_cast<unsigned>(pool.size()) - 1)]);
  pool.resize(count);
  return pool;
}

}  // namespace

Measure2 random_measure(std::uint64_t seed, unsigned atom_count, unsigned coordinate_den_bound, Support support) {
  if (atom_count == 0) throw std::invalid_argument("random_measure needs at least one atom");
  if (coordinate_den_bound == 0) throw std::invalid_argument("coordinate denominator bound must be positive");
  Draw draw(seed);
  std::set<std::array<Rational, 2>> seen;
  std::vector<Atom2> atoms;
  unsigned weight_sum = 0;
  std::vector<unsigned> weights;
  while (atoms.size() < atom_count) {
    const bool allow_zero = support == Support::anywhere && !atoms.empty();
    std::array<Rational, 2> at{random_coordinate(draw, coordinate_den_bound, allow_zero),
                               random_coordinate(draw, coordinate_den_bound, allow_zero)};
    if (!seen.insert(at).second) continue;
    const unsigned w = draw.between(1, 10);
    weights.push_back(w);
    weight_sum += w;
    atoms.push_back({at, Rational(0)});
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    atoms[i].mass = Rational(weights[i], weight_sum);
    atoms[i].mass.canonicalize();
  }
  return Measure2(std::move(atoms));
}

Pattern random_pattern(std::uint64_t seed, StaircaseType type, unsigned max_coordinate) {
  if (max_coordinate == 0) throw std::invalid_argument("max_coordinate must be at least 1");
  Draw draw(seed);
  const bool on_t_axis = type == StaircaseType::I || type == StaircaseType::III;
  const bool on_s_axis = type == StaircaseType::II || type == StaircaseType::III;
  const unsigned count = draw.between(1, max_coordinate);

  std::vector<unsigned> firsts = distinct_sample(draw, on_t_axis ? count - 1 : count, 1, max_coordinate);
  if (on_t_axis) firsts.push_back(0);
  std::vector<unsigned> seconds = distinct_sample(draw, on_s_axis ? count - 1 : count, 1, max_coordinate);
  if (on_s_axis) seconds.push_back(0);
  std::sort(firsts.begin(), firsts.end());
  std::sort(seconds.begin(), seconds.end(), std::greater<>());

  std::vector<LatticePoint> points;
  for (unsigned i = 0; i < count; ++i) points.push_back({firsts[i], seconds[i]});
  return Pattern::from_points(points);
}

}  // namespace romp
