#include "romp/extensions.hpp"

#include <stdexcept>

#include "checks.hpp"

namespace romp {

namespace detail {

ConditionReport transpose_witnesses(const ConditionReport& report) {
  ConditionReport out;
  for (Condition c : report.conditions()) {
    if (c.witness && c.witness->point.size() == 2) std::swap(c.witness->point[0], c.witness->point[1]);
    out.add(std::move(c));
  }
  return out;
}

}  // namespace detail

namespace {

using detail::check_dominated;
using detail::check_equal;
using detail::check_reciprocal;
using detail::check_scalar_eq;
using detail::check_scalar_leq;

void require_probability(const Measure2& m, const char* name) {
  if (!is_probability(m)) throw MeasureError(std::string(name) + " must be a probability measure");
}

void require_probability(const Measure1& m, const char* name) {
  if (!is_probability(m)) throw MeasureError(std::string(name) + " must be a probability measure");
}

void require_positive(const Rational& v, const char* name) {
  if (sgn(v) <= 0) throw MeasureError(std::string(name) + " must be positive");
}

struct BackStepIds {
  const char* integrable;
  const char* norm_bound;
  const char* row_bound;
};

constexpr BackStepIds kBackStep2d{"2d.i", "2d.ii", "2d.iii"};

// Back-extension of nu through l rows down to the zeroth row of the target
// subspace, whose row measure is `row`:
//   mu = ratio nu / t^l + (row - ratio (nu / t^l)^X) x delta_0.
Extension2 back_extend_vertical(const Measure2& nu, unsigned l, const Rational& ratio, const Measure1& row,
                                const BackStepIds& ids) {
  Extension2 out;
  auto norm = check_reciprocal<2>(out.report, ids.integrable, nu, {0, l});
  if (!norm) {
    out.report.not_applicable(ids.norm_bound);
    out.report.not_applicable(ids.row_bound);
    return out;
  }
  const Rational mass_above = ratio * *norm;
  const bool norm_ok = check_scalar_leq(out.report, ids.norm_bound, mass_above, Rational(1));

  const Measure2 upper = reciprocal_scale(nu, 0, l, ratio);
  const Measure1 upper_x = marginal_x(upper);
  bool row_ok = false;
  if (mass_above == 1 && upper_x != row && is_positive(row - upper_x)) {
    // Equality clause: a saturated norm bound forces the row inequality to be tight.
    check_equal(out.report, ids.row_bound, upper_x, row, "norm bound saturated but row inequality is strict");
  } else {
    row_ok = check_dominated(out.report, ids.row_bound, upper_x, row);
  }
  if (norm_ok && row_ok) out.measure = upper + embed_axis(row - upper_x, Axis::s);
  return out;
}

Extension2 mirrored(Extension2 ext) {
  Extension2 out;
  out.report = detail::transpose_witnesses(ext.report);
  if (ext.measure) out.measure = transpose(*ext.measure);
  return out;
}

}  // namespace

Extension1 backstep_1d(const Measure1& mu_l1, const Rational& omega0_sq) {
  require_probability(mu_l1, "mu_L1");
  require_positive(omega0_sq, "omega0_sq");
  Extension1 out;
  auto norm = check_reciprocal<1>(out.report, "1d.i", mu_l1, {1});
  if (!norm) {
    out.report.not_applicable("1d.ii");
    return out;
  }
  const Rational used = omega0_sq * *norm;
  if (!check_scalar_leq(out.report, "1d.ii", used, Rational(1))) return out;
  out.measure = reciprocal_scale(mu_l1, 1, omega0_sq) + dirac1(Rational(0), 1 - used);
  return out;
}

Extension2 backstep_2d(const Measure2& mu01, const Measure1& sigma, const Rational& beta00_sq) {
  require_probability(mu01, "mu_(0,1)");
  require_probability(sigma, "sigma");
  require_positive(beta00_sq, "beta00_sq");
  return back_extend_vertical(mu01, 1, beta00_sq, sigma, kBackStep2d);
}

Extension2 build_mu_k0(const Measure2& nu, unsigned k, unsigned l, const Rational& gamma_kl, const Rational& gamma_k0,
                       const Measure1& sigma) {
  require_probability(nu, "nu");
  require_positive(gamma_kl, "gamma_kl");
  require_positive(gamma_k0, "gamma_k0");
  // Row (k, 0) of the ambient shift carries s^k sigma / gamma_k0.
  return back_extend_vertical(nu, l, gamma_kl / gamma_k0, density_scale(sigma, k, 1 / gamma_k0), kBackStep2d);
}

Extension2 build_mu_0l(const Measure2& nu, unsigned k, unsigned l, const Rational& gamma_kl, const Rational& gamma_0l,
                       const Measure1& tau) {
  require_probability(nu, "nu");
  require_positive(gamma_kl, "gamma_kl");
  require_positive(gamma_0l, "gamma_0l");
  return mirrored(
      back_extend_vertical(transpose(nu), k, gamma_kl / gamma_0l, density_scale(tau, l, 1 / gamma_0l), kBackStep2d));
}

Extension2 one_step_generalized(const Measure2& mu_k0, const Measure2& mu_0l, unsigned k, unsigned l,
                                const Rational& gamma_k0, const Rational& gamma_0l, const Measure1& sigma) {
  require_probability(mu_k0, "mu_(k,0)");
  require_probability(mu_0l, "mu_(0,l)");
  require_positive(gamma_k0, "gamma_(k,0)");
  require_positive(gamma_0l, "gamma_(0,l)");
  const Rational lambda = gamma_k0 / gamma_0l;

  Extension2 out;
  auto& report = out.report;
  const bool compatible = check_equal(report, "os.compat", density_scale(mu_0l, k, 0, Rational(1)),
                                      density_scale(mu_k0, 0, l, lambda), "s^k mu_0l vs lambda t^l mu_k0");
  auto norm_t = check_reciprocal<2>(report, "os.i", mu_0l, {0, l});
  auto norm_s = check_reciprocal<2>(report, "os.ii", mu_k0, {k, 0});

  bool bounded = false;
  if (norm_s) {
    bounded = check_scalar_leq(report, "os.iii", gamma_k0 * *norm_s, Rational(1));
  } else {
    report.not_applicable("os.iii");
  }

  bool dominated = false;
  std::optional<Measure2> upper;
  if (norm_t && norm_s) {
    upper = reciprocal_scale(mu_0l, 0, l, gamma_0l);
    const Measure1 lhs = marginal_x(*upper) + dirac1(Rational(0), gamma_0l * lambda * *norm_s) -
                         reciprocal_scale(marginal_x(mu_k0), k, gamma_0l * lambda);
    dominated = check_dominated(report, "os.iv", lhs, dirac1(Rational(0)));
  } else {
    report.not_applicable("os.iv");
  }

  const bool row_consistent = check_equal(report, "os.sigma", density_scale(sigma, k, Rational(1)),
                                          scale(gamma_k0, marginal_x(mu_k0)), "s^k sigma vs gamma_k0 (mu_k0)^X");

  if (compatible && bounded && dominated && row_consistent) {
    out.measure = *upper + embed_axis(sigma - marginal_x(*upper), Axis::s);
  }
  return out;
}

TwoStepResult two_step(const Measure2& nu, const Measure1& sigma, const Measure1& tau, unsigned k, unsigned l,
                       const Rational& gamma_kl, const Rational& gamma_k0, const Rational& gamma_0l) {
  if (k == 0 || l == 0) throw std::invalid_argument("two_step needs k, l >= 1; use multistep_axis for axis subspaces");
  require_probability(nu, "nu");
  require_probability(sigma, "sigma");
  require_probability(tau, "tau");
  require_positive(gamma_kl, "gamma_(k,l)");
  require_positive(gamma_k0, "gamma_(k,0)");
  require_positive(gamma_0l, "gamma_(0,l)");

  TwoStepResult out;
  auto& report = out.report;
  auto norm = check_reciprocal<2>(report, "nc1", nu, {k, l});
  if (!norm) {
    for (const char* id : {"nc2", "nc3", "nc4"}) report.not_applicable(id);
    return out;
  }
  const bool nc2 = check_dominated(report, "nc2", marginal_y(reciprocal_scale(nu, k, 0, gamma_kl)),
                                   density_scale(tau, l, Rational(1)), "gamma_kl int_X nu/s^k vs t^l tau");
  const bool nc3 = check_dominated(report, "nc3", marginal_x(reciprocal_scale(nu, 0, l, gamma_kl)),
                                   density_scale(sigma, k, Rational(1)), "gamma_kl int_Y nu/t^l vs s^k sigma");
  const bool nc4 = check_scalar_eq(report, "nc4", *norm, 1 / gamma_kl, "||1/(s^k t^l)||_nu vs 1/gamma_kl");
  if (!(nc2 && nc3 && nc4)) return out;

  const Measure2 core = reciprocal_scale(nu, k, l, gamma_kl);
  Measure1 sigma_corr = sigma - marginal_x(core);
  Measure1 tau_corr = tau - marginal_y(core);
  out.measure = core + embed_axis(sigma_corr, Axis::s) + embed_axis(tau_corr, Axis::t);
  out.sigma_correction = std::move(sigma_corr);
  out.tau_correction = std::move(tau_corr);
  return out;
}

namespace {

Extension2 multistep_vertical(const Measure2& nu, unsigned l, const Rational& gamma, const Measure1& sigma,
                              const Measure1& tau) {
  Extension2 out;
  auto& report = out.report;
  if (!check_reciprocal<2>(report, "ms.a", nu, {0, l})) {
    for (const char* id : {"ms.b", "ms.c", "ms.d"}) report.not_applicable(id);
    return out;
  }
  const Measure2 upper = reciprocal_scale(nu, 0, l, gamma);
  const Measure1 upper_x = marginal_x(upper);
  if (!check_dominated(report, "ms.b", upper_x, sigma)) {
    for (const char* id : {"ms.c", "ms.d"}) report.not_applicable(id);
    return out;
  }
  Measure2 candidate = upper + embed_axis(sigma - upper_x, Axis::s);
  const bool tau_ok = check_equal(report, "ms.c", marginal_y(candidate), tau, "candidate column marginal vs tau");
  bool prob_ok = true;
  if (is_probability(candidate)) {
    report.holds("ms.d");
  } else {
    prob_ok = false;
    Witness w;
    if (auto neg = most_negative_atom(candidate)) w = detail::atom_witness(*neg);
    w.values = {total_mass(candidate), Rational(1)};
    w.note = "candidate is not a probability measure";
    report.fails("ms.d", std::move(w));
  }
  if (tau_ok && prob_ok) out.measure = std::move(candidate);
  return out;
}

}  // namespace

Extension2 multistep_axis(const Measure2& nu, unsigned exponent, const Rational& gamma, const Measure1& sigma,
                          const Measure1& tau, Direction direction) {
  require_probability(nu, "nu");
  require_positive(gamma, "gamma");
  if (direction == Direction::vertical) return multistep_vertical(nu, exponent, gamma, sigma, tau);
  return mirrored(multistep_vertical(transpose(nu), exponent, gamma, tau, sigma));
}

}  // namespace romp
