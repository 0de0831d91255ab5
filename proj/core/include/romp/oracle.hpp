#pragma once

// Forward direction: from a chosen global Berger measure build the data a
// reconstruction starts from, and check a candidate reconstruction against
// an instance independently of the solver.

#include <cstdint>

#include "romp/lattice.hpp"
#include "romp/measures.hpp"
#include "romp/report.hpp"
#include "romp/solver.hpp"

namespace romp {

/// Localized measures by restriction at each foundation point, marginals of
/// mu, and the positive moments over the bounding rectangle of the pattern.
/// Throws MeasureError if mu is not a probability measure or a foundation
/// moment vanishes.
RompInstance generate_instance(const Measure2& mu, const Pattern& pattern);

/// Checks (ids): v.prob, v.restrict at each foundation point, v.sigma,
/// v.tau, v.moment for each tabulated (m, n) with m, n <= moment_bound.
ConditionReport verify_solution(const RompInstance& inst, const Measure2& mu, unsigned moment_bound);

/// 2 * atom count, the default moment bound for verify_solution.
unsigned default_moment_bound(const Measure2& mu);

enum class Support { open, anywhere };

/// Deterministic pseudo-random probability measure with distinct atoms.
/// Coordinates are p/q with q <= coordinate_den_bound and value <= 4; masses
/// have denominators <= 60 (integer weights 1..10 over their sum). With
/// Support::anywhere coordinates are zero with probability 1/4, but the first
/// atom always lies in the open quadrant so every moment is positive.
Measure2 random_measure(std::uint64_t seed, unsigned atom_count, unsigned coordinate_den_bound, Support support);

/// Deterministic pseudo-random pattern of the requested type with foundation
/// coordinates <= max_coordinate (max_coordinate >= 1; Type III/I/II with a
/// second point need max_coordinate >= 2 to have room for it).
Pattern random_pattern(std::uint64_t seed, StaircaseType type, unsigned max_coordinate);

}  // namespace romp
