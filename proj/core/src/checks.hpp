#pragma once

// Shared condition evaluators for extensions, solver and oracle.

#include <array>
#include <optional>
#include <string>

#include "romp/measures.hpp"
#include "romp/report.hpp"

namespace romp::detail {

template <std::size_t N>
Witness atom_witness(const Atom<N>& atom, std::string note = {}) {
  Witness w;
  w.point.assign(atom.at.begin(), atom.at.end());
  w.mass = atom.mass;
  w.note = std::move(note);
  return w;
}

/// Records whether 1/x^exponents is integrable against m; returns the norm.
template <std::size_t N>
std::optional<Rational> check_reciprocal(ConditionReport& report, const std::string& id, const AtomicMeasure<N>& m,
                                         const std::array<unsigned, N>& exponents) {
  auto norm = reciprocal_norm<N>(m, exponents);
  if (!norm.finite()) {
    report.fails(id, atom_witness(*norm.offending, "reciprocal monomial not integrable"));
    return std::nullopt;
  }
  report.holds(id);
  return norm.value;
}

/// lhs <= rhs as (possibly signed) measures, i.e. rhs - lhs is positive.
/// The witness is the point where rhs - lhs is most negative.
template <std::size_t N>
bool check_dominated(ConditionReport& report, const std::string& id, const AtomicMeasure<N>& lhs,
                     const AtomicMeasure<N>& rhs, std::string note = {}) {
  const auto gap = rhs - lhs;
  if (auto worst = most_negative_atom(gap)) {
    Witness w;
    w.point.assign(worst->at.begin(), worst->at.end());
    w.values = {lhs.mass_at(worst->at), rhs.mass_at(worst->at)};
    w.note = std::move(note);
    report.fails(id, std::move(w));
    return false;
  }
  report.holds(id, gap.empty());
  return true;
}

/// a == b; the witness is the first point (in canonical order) where they differ.
template <std::size_t N>
bool check_equal(ConditionReport& report, const std::string& id, const AtomicMeasure<N>& a, const AtomicMeasure<N>& b,
                 std::string note = {}) {
  const auto diff = a - b;
  if (diff.empty()) {
    report.holds(id);
    return true;
  }
  const auto& first = diff.atoms().front();
  Witness w;
  w.point.assign(first.at.begin(), first.at.end());
  w.values = {a.mass_at(first.at), b.mass_at(first.at)};
  w.note = std::move(note);
  report.fails(id, std::move(w));
  return false;
}

/// lhs <= rhs for scalars.
inline bool check_scalar_leq(ConditionReport& report, const std::string& id, const Rational& lhs, const Rational& rhs,
                             std::string note = {}) {
  if (lhs <= rhs) {
    report.holds(id, lhs == rhs);
    return true;
  }
  Witness w;
  w.values = {lhs, rhs};
  w.note = std::move(note);
  report.fails(id, std::move(w));
  return false;
}

inline bool check_scalar_eq(ConditionReport& report, const std::string& id, const Rational& lhs, const Rational& rhs,
                            std::string note = {}) {
  if (lhs == rhs) {
    report.holds(id);
    return true;
  }
  Witness w;
  w.values = {lhs, rhs};
  w.note = std::move(note);
  report.fails(id, std::move(w));
  return false;
}

/// Swaps the two coordinates of every 2-point witness in the report.
ConditionReport transpose_witnesses(const ConditionReport& report);

}  // namespace romp::detail
