#pragma once

// Reconstruction of the Berger measure from the localized Berger measures at
// the foundation points of a canonical invariant subspace, plus the zeroth
// row and column marginals.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "romp/extensions.hpp"
#include "romp/lattice.hpp"
#include "romp/measures.hpp"
#include "romp/moments.hpp"
#include "romp/report.hpp"

namespace romp {

struct RompInstance {
  Pattern pattern = Pattern::from_points({{0, 0}});
  std::map<LatticePoint, Measure2> localized;  ///< nu_k for every foundation point k
  Measure1 sigma;
  Measure1 tau;
  GammaTable gamma;

  friend bool operator==(const RompInstance&, const RompInstance&) = default;
};

enum class Verdict { subnormal, insoluble };

std::string to_string(Verdict verdict);

struct StepReport {
  std::string step;
  ConditionReport report;

  friend bool operator==(const StepReport&, const StepReport&) = default;
};

struct RompSolution {
  Verdict verdict = Verdict::insoluble;
  std::optional<Measure2> measure;
  std::vector<StepReport> reports;
  /// Moment-table entries the reconstructed measure disagrees with. These
  /// do not affect the verdict.
  std::vector<std::string> warnings;
  /// Axis correction terms of the two-step formula (Type IV only).
  std::optional<Measure1> sigma_correction;
  std::optional<Measure1> tau_correction;

  friend bool operator==(const RompSolution&, const RompSolution&) = default;
};

/// Which foundation pairs are screened for compatibility (and, beyond the
/// consecutive ones, checked by a local merge).
enum class PairMode { consecutive, all_pairs, nondegenerate_pairs };

std::string to_string(PairMode mode);
PairMode parse_pair_mode(const std::string& text);

enum class FoldDirection { left_to_right, right_to_left };

/// gamma_p s^(q1-p1) nu_p == gamma_q t^(p2-q2) nu_q, atomwise (id os.compat).
ConditionReport check_compatibility(const RompInstance& inst, LatticePoint p, LatticePoint q);

struct MergeResult {
  std::optional<Measure2> measure;
  ConditionReport report;
};

/// Berger measure on L_o, o = (p1, q2), from the compatible pair nu_p, nu_q:
/// {t>0} from nu_p, {t=0, s>0} from the t=0 atoms of nu_q, the origin takes
/// the remaining mass. Both restriction identities are verified exactly.
/// Condition ids: os.i, os.ii, os.iv (origin mass), os.restrict.
MergeResult merge_pair(const Measure2& nu_p, const Rational& gamma_p, LatticePoint p, const Measure2& nu_q,
                       const Rational& gamma_q, LatticePoint q, const Rational& gamma_o);

/// Lattice points whose moments the solver reads for this mode and direction.
std::vector<LatticePoint> required_gamma_points(const Pattern& pattern, PairMode mode,
                                                FoldDirection direction = FoldDirection::left_to_right);

/// Throws std::invalid_argument describing the first defect of a malformed
/// instance (localized keys differ from the foundation, a measure that is not
/// a probability measure, a missing moment).
void validate_instance(const RompInstance& inst, PairMode mode = PairMode::consecutive,
                       FoldDirection direction = FoldDirection::left_to_right);

RompSolution solve_canonical(const RompInstance& inst, PairMode mode = PairMode::consecutive,
                             FoldDirection direction = FoldDirection::left_to_right);

}  // namespace romp
