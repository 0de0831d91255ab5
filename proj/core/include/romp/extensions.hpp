#pragma once

// Constructive back-step and one/two-step extension results. Each operation
// checks its solubility conditions exactly and either returns the
// reconstructed Berger measure or leaves it empty; the attached ConditionReport lists every condition (with equality flags for
// inequalities that hold and witnesses for those that fail).
//
// Stable condition ids:
//   backstep_1d           1d.i 1d.ii
//   backstep_2d           2d.i 2d.ii 2d.iii
//   build_mu_k0 / _0l     2d.i 2d.ii 2d.iii  (the same back step, shifted by (k, l))
//   one_step_generalized  os.compat os.i os.ii os.iii os.iv os.sigma
//   two_step              nc1 nc2 nc3 nc4
//   multistep_axis        ms.a ms.b ms.c ms.d

#include <optional>

#include "romp/measures.hpp"
#include "romp/report.hpp"

namespace romp {

template <class M>
struct Extension {
  std::optional<M> measure;
  ConditionReport report;

  bool ok() const { return measure.has_value(); }
};

using Extension1 = Extension<Measure1>;
using Extension2 = Extension<Measure2>;

/// One-variable back step: from the Berger measure of the shift restricted
/// to L_1 and the squared first weight, recover the Berger measure
///   mu = (omega0_sq / s) mu_L1 + (1 - omega0_sq ||1/s||) delta_0.
/// Throws MeasureError unless mu_L1 is a probability measure and omega0_sq > 0.
Extension1 backstep_1d(const Measure1& mu_l1, const Rational& omega0_sq);

/// Two-variable back step from L_(0,1) with zeroth-row measure sigma:
///   mu = beta00_sq mu01 / t + (sigma - beta00_sq (mu01 / t)^X) x delta_0.
Extension2 backstep_2d(const Measure2& mu01, const Measure1& sigma, const Rational& beta00_sq);

/// Recovers the Berger measure from those on L_(k,0) and L_(0,l) given the
/// compatibility s^k mu_0l = lambda t^l mu_k0 with lambda = gamma_k0 / gamma_0l.
/// Besides os.compat and os.i-os.iv this checks os.sigma: the row data
/// agree, s^k sigma = gamma_k0 (mu_k0)^X.
Extension2 one_step_generalized(const Measure2& mu_k0, const Measure2& mu_0l, unsigned k, unsigned l,
                                const Rational& gamma_k0, const Rational& gamma_0l, const Measure1& sigma);

/// Back-extends nu on L_(k,l) to L_(k,0) using the zeroth-row measure sigma.
Extension2 build_mu_k0(const Measure2& nu, unsigned k, unsigned l, const Rational& gamma_kl, const Rational& gamma_k0,
                       const Measure1& sigma);

/// Mirror of build_mu_k0: back-extends nu on L_(k,l) to L_(0,l) using tau.
Extension2 build_mu_0l(const Measure2& nu, unsigned k, unsigned l, const Rational& gamma_kl, const Rational& gamma_0l,
                       const Measure1& tau);

struct TwoStepResult : Extension2 {
  /// sigma - gamma_kl (nu / s^k t^l)^Y-integral and its tau counterpart; set on success.
  std::optional<Measure1> sigma_correction;
  std::optional<Measure1> tau_correction;
};

/// Two-step extension from L_(k,l), k, l >= 1, with marginals sigma and tau.
/// Throws std::invalid_argument for k = 0 or l = 0 (use multistep_axis) and
/// MeasureError when nu, sigma or tau is not a probability measure.
/// gamma_k0 and gamma_0l do not enter the formula; they are validated only.
TwoStepResult two_step(const Measure2& nu, const Measure1& sigma, const Measure1& tau, unsigned k, unsigned l,
                       const Rational& gamma_kl, const Rational& gamma_k0, const Rational& gamma_0l);

enum class Direction { vertical, horizontal };

/// Closed-form extension from an axis subspace. Vertical: nu lives on
/// L_(0,l) and the candidate is gamma nu / t^l + (sigma - gamma (nu/t^l)^X) x delta_0,
/// then verified against tau and for being a probability measure. Horizontal
/// is the s/t mirror (nu on L_(k,0), exponent = k).
Extension2 multistep_axis(const Measure2& nu, unsigned exponent, const Rational& gamma, const Measure1& sigma,
                          const Measure1& tau, Direction direction);

}  // namespace romp
