#include "romp/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "checks.hpp"

namespace romp {

std::string to_string(Verdict verdict) { return verdict == Verdict::subnormal ? "subnormal" : "insoluble"; }

std::string to_string(PairMode mode) {
  switch (mode) {
    case PairMode::consecutive: return "consecutive";
    case PairMode::all_pairs: return "all-pairs";
    case PairMode::nondegenerate_pairs: return "nondegenerate-pairs";
  }
  return "?";
}

PairMode parse_pair_mode(const std::string& text) {
  if (text == "consecutive") return PairMode::consecutive;
  if (text == "all-pairs") return PairMode::all_pairs;
  if (text == "nondegenerate-pairs") return PairMode::nondegenerate_pairs;
  throw std::invalid_argument("unknown pair mode \"" + text + "\"");
}

ConditionReport check_compatibility(const RompInstance& inst, LatticePoint p, LatticePoint q) {
  if (!staircase_precedes(p, q)) throw std::invalid_argument(to_string(p) + " does not precede " + to_string(q));
  const Measure2& nu_p = inst.localized.at(p);
  const Measure2& nu_q = inst.localized.at(q);
  ConditionReport report;
  detail::check_equal(report, "os.compat", density_scale(nu_p, q.k1 - p.k1, 0, inst.gamma.at(p)),
                      density_scale(nu_q, 0, p.k2 - q.k2, inst.gamma.at(q)),
                      "gamma_p s^(q1-p1) nu_p vs gamma_q t^(p2-q2) nu_q");
  return report;
}

MergeResult merge_pair(const Measure2& nu_p, const Rational& gamma_p, LatticePoint p, const Measure2& nu_q,
                       const Rational& gamma_q, LatticePoint q, const Rational& gamma_o) {
  if (!(p.k1 < q.k1 && p.k2 > q.k2)) {
    throw std::invalid_argument("merge_pair: " + to_string(p) + " must strictly precede " + to_string(q));
  }
  const unsigned k = q.k1 - p.k1;
  const unsigned l = p.k2 - q.k2;

  MergeResult out;
  auto& report = out.report;
  const auto norm_t = detail::check_reciprocal<2>(report, "os.i", nu_p, {0, l});
  const Measure2 q_floor = split_regions(nu_q).t_axis + dirac2(Rational(0), Rational(0), nu_q.mass_at({0, 0}));
  const auto norm_s = detail::check_reciprocal<2>(report, "os.ii", q_floor, {k, 0});
  if (!norm_t || !norm_s) {
    report.not_applicable("os.iv");
    report.not_applicable("os.restrict");
    return out;
  }

  const Measure2 upper = reciprocal_scale(nu_p, 0, l, gamma_p / gamma_o);
  const Measure2 floor = reciprocal_scale(q_floor, k, 0, gamma_q / gamma_o);
  const Rational placed = total_mass(upper) + total_mass(floor);
  const bool origin_ok = detail::check_scalar_leq(report, "os.iv", placed, Rational(1), "mass placed off the origin");
  Measure2 merged = upper + floor + dirac2(Rational(0), Rational(0), 1 - placed);

  const bool restrict_p = detail::check_equal(report, "os.restrict", density_scale(merged, 0, l, gamma_o / gamma_p),
                                              nu_p, "restriction to L_p vs nu_p");
  const bool restrict_q = detail::check_equal(report, "os.restrict", density_scale(merged, k, 0, gamma_o / gamma_q),
                                              nu_q, "restriction to L_q vs nu_q");
  if (origin_ok && restrict_p && restrict_q) out.measure = std::move(merged);
  return out;
}

namespace {

std::vector<std::pair<LatticePoint, LatticePoint>> screened_pairs(const Pattern& pattern, PairMode mode) {
  const auto& f = pattern.foundation();
  std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      const bool take = [&] {
        switch (mode) {
          case PairMode::consecutive: return j == i + 1;
          case PairMode::all_pairs: return true;
          case PairMode::nondegenerate_pairs: return f[i].k1 != f[j].k1 && f[i].k2 != f[j].k2;
        }
        return false;
      }();
      if (take) pairs.emplace_back(f[i], f[j]);
    }
  }
  return pairs;
}

// Pairs that are not consecutive but are screened by the mode get a local merge.
std::vector<std::pair<LatticePoint, LatticePoint>> local_merge_pairs(const Pattern& pattern, PairMode mode) {
  const auto& f = pattern.foundation();
  std::vector<std::pair<LatticePoint, LatticePoint>> out;
  for (const auto& [p, q] : screened_pairs(pattern, mode)) {
    const auto ip = std::find(f.begin(), f.end(), p) - f.begin();
    const auto iq = std::find(f.begin(), f.end(), q) - f.begin();
    if (iq > ip + 1) out.emplace_back(p, q);
  }
  return out;
}

LatticePoint reached_point(const Pattern& pattern) {
  return {pattern.foundation().front().k1, pattern.foundation().back().k2};
}

std::string pair_step(const char* kind, LatticePoint p, LatticePoint q) {
  return std::string(kind) + " " + to_string(p) + "+" + to_string(q) + "->" + to_string(join_origin(p, q));
}

}  // namespace

std::vector<LatticePoint> required_gamma_points(const Pattern& pattern, PairMode mode, FoldDirection direction) {
  const auto& f = pattern.foundation();
  std::set<LatticePoint> needed(f.begin(), f.end());
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (direction == FoldDirection::left_to_right) {
      needed.insert({f.front().k1, f[i].k2});
    } else {
      needed.insert({f[f.size() - 1 - i].k1, f.back().k2});
    }
  }
  for (const auto& [p, q] : local_merge_pairs(pattern, mode)) needed.insert(join_origin(p, q));
  const LatticePoint m = reached_point(pattern);
  needed.insert(m);
  if (classify_type(pattern) == StaircaseType::IV) {
    needed.insert({m.k1, 0});
    needed.insert({0, m.k2});
  }
  return {needed.begin(), needed.end()};
}

void validate_instance(const RompInstance& inst, PairMode mode, FoldDirection direction) {
  const auto& f = inst.pattern.foundation();
  if (inst.localized.size() != f.size()) {
    throw std::invalid_argument("localized measures must be given exactly at the foundation points");
  }
  for (const auto& k : f) {
    auto it = inst.localized.find(k);
    if (it == inst.localized.end()) throw std::invalid_argument("no localized measure at foundation point " + to_string(k));
    if (!is_probability(it->second)) {
      throw std::invalid_argument("localized measure at " + to_string(k) + " is not a probability measure");
    }
  }
  if (!is_probability(inst.sigma)) throw std::invalid_argument("sigma is not a probability measure");
  if (!is_probability(inst.tau)) throw std::invalid_argument("tau is not a probability measure");
  for (const auto& p : required_gamma_points(inst.pattern, mode, direction)) {
    if (!inst.gamma.contains(p)) throw std::invalid_argument("gamma table lacks the required entry " + to_string(p));
  }
}

RompSolution solve_canonical(const RompInstance& inst, PairMode mode, FoldDirection direction) {
  validate_instance(inst, mode, direction);
  RompSolution solution;
  auto record = [&](std::string step, ConditionReport report) {
    const bool ok = report.ok();
    solution.reports.push_back({std::move(step), std::move(report)});
    return ok;
  };

  bool compatible = true;
  for (const auto& [p, q] : screened_pairs(inst.pattern, mode)) {
    compatible &= record("compat " + to_string(p) + "~" + to_string(q), check_compatibility(inst, p, q));
  }
  if (!compatible) return solution;

  bool local_ok = true;
  for (const auto& [p, q] : local_merge_pairs(inst.pattern, mode)) {
    auto merged = merge_pair(inst.localized.at(p), inst.gamma.at(p), p, inst.localized.at(q), inst.gamma.at(q), q,
                             inst.gamma.at(join_origin(p, q)));
    local_ok &= record(pair_step("local", p, q), std::move(merged.report));
  }
  if (!local_ok) return solution;

  // Fold the staircase, replacing each merged pair by the measure at its join.
  const auto& f = inst.pattern.foundation();
  const bool forward = direction == FoldDirection::left_to_right;
  LatticePoint at = forward ? f.front() : f.back();
  Measure2 current = inst.localized.at(at);
  for (std::size_t i = 1; i < f.size(); ++i) {
    const LatticePoint next = forward ? f[i] : f[f.size() - 1 - i];
    const LatticePoint p = forward ? at : next;
    const LatticePoint q = forward ? next : at;
    const Measure2& nu_p = forward ? current : inst.localized.at(next);
    const Measure2& nu_q = forward ? inst.localized.at(next) : current;
    const LatticePoint o = join_origin(p, q);
    auto merged = merge_pair(nu_p, inst.gamma.at(p), p, nu_q, inst.gamma.at(q), q, inst.gamma.at(o));
    if (!record(pair_step("merge", p, q), std::move(merged.report))) return solution;
    current = std::move(*merged.measure);
    at = o;
  }

  const StaircaseType type = classify_type(inst.pattern);
  const Rational& gamma_m = inst.gamma.at(at);
  const std::string final_step = "final type " + to_string(type) + " at " + to_string(at);
  std::optional<Measure2> result;
  switch (type) {
    case StaircaseType::III: {
      ConditionReport report;
      const bool sx = detail::check_equal(report, "fin.sigma", marginal_x(current), inst.sigma, "marginal_x vs sigma");
      const bool ty = detail::check_equal(report, "fin.tau", marginal_y(current), inst.tau, "marginal_y vs tau");
      record(final_step, std::move(report));
      if (sx && ty) result = std::move(current);
      break;
    }
    case StaircaseType::I:
    case StaircaseType::II: {
      auto ext = type == StaircaseType::I
                     ? multistep_axis(current, at.k2, gamma_m, inst.sigma, inst.tau, Direction::vertical)
                     : multistep_axis(current, at.k1, gamma_m, inst.sigma, inst.tau, Direction::horizontal);
      record(final_step, std::move(ext.report));
      result = std::move(ext.measure);
      break;
    }
    case StaircaseType::IV: {
      auto ext = two_step(current, inst.sigma, inst.tau, at.k1, at.k2, gamma_m, inst.gamma.at({at.k1, 0}),
                          inst.gamma.at({0, at.k2}));
      record(final_step, std::move(ext.report));
      result = std::move(ext.measure);
      solution.sigma_correction = std::move(ext.sigma_correction);
      solution.tau_correction = std::move(ext.tau_correction);
      break;
    }
  }
  if (!result) return solution;

  for (const auto& [p, value] : inst.gamma.entries()) {
    const Rational actual = integrate_monomial(*result, p.k1, p.k2);
    if (actual != value) {
      solution.warnings.push_back("moment " + to_string(p) + " of the reconstruction is " + to_string(actual) +
                                  ", table has " + to_string(value));
    }
  }
  solution.measure = std::move(result);
  solution.verdict = Verdict::subnormal;
  return solution;
}

}  // namespace romp
