#pragma once

// Finitely atomic signed measures on the half-line X = [0, inf) and on the
// closed quadrant X x Y. Every AtomicMeasure is held in canonical form:
// atoms strictly sorted by coordinates, no duplicate points, no zero masses.
// Two measures are equal iff their canonical forms are.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "romp/rational.hpp"

namespace romp {

template <std::size_t N>
struct Atom {
  std::array<Rational, N> at{};
  Rational mass;

  friend bool operator==(const Atom&, const Atom&) = default;
};

using Atom1 = Atom<1>;
using Atom2 = Atom<2>;

enum class Axis { s, t };

template <std::size_t N>
class AtomicMeasure {
 public:
  using atom_type = Atom<N>;
  using point_type = std::array<Rational, N>;

  AtomicMeasure() = default;

  /// Canonicalizes: merges atoms at equal points, drops zero masses, sorts.
  /// Throws std::invalid_argument on a negative coordinate.
  explicit AtomicMeasure(std::vector<atom_type> atoms) : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
      for (const auto& c : a.at) {
        if (sgn(c) < 0) throw std::invalid_argument("atom coordinate must be non-negative");
      }
    }
    std::sort(atoms_.begin(), atoms_.end(), [](const atom_type& l, const atom_type& r) { return l.at < r.at; });
    std::vector<atom_type> merged;
    merged.reserve(atoms_.size());
    for (auto& a : atoms_) {
      if (!merged.empty() && merged.back().at == a.at) {
        merged.back().mass += a.mass;
      } else {
        merged.push_back(std::move(a));
      }
    }
    std::erase_if(merged, [](const atom_type& a) { return is_zero(a.mass); });
    atoms_ = std::move(merged);
  }

  static AtomicMeasure point_mass(point_type at, Rational mass = 1) {
    return AtomicMeasure(std::vector<atom_type>{atom_type{std::move(at), std::move(mass)}});
  }

  const std::vector<atom_type>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  /// Mass at an exact point (zero when the point carries no atom).
  Rational mass_at(const point_type& at) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), at,
                               [](const atom_type& a, const point_type& p) { return a.at < p; });
    if (it != atoms_.end() && it->at == at) return it->mass;
    return Rational(0);
  }

  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

 private:
  std::vector<atom_type> atoms_;
};

using Measure1 = AtomicMeasure<1>;
using Measure2 = AtomicMeasure<2>;

/// Canonical form of a raw atom list.
template <std::size_t N>
AtomicMeasure<N> canonicalize(std::vector<Atom<N>> atoms) {
  return AtomicMeasure<N>(std::move(atoms));
}

inline Measure1 dirac1(Rational at, Rational mass = 1) { return Measure1::point_mass({std::move(at)}, std::move(mass)); }
inline Measure2 dirac2(Rational s, Rational t, Rational mass = 1) {
  return Measure2::point_mass({std::move(s), std::move(t)}, std::move(mass));
}

template <std::size_t N>
AtomicMeasure<N> linear_combine(const Rational& c1, const AtomicMeasure<N>& m1, const Rational& c2,
                                const AtomicMeasure<N>& m2) {
  std::vector<Atom<N>> atoms;
  atoms.reserve(m1.size() + m2.size());
  for (const auto& a : m1) atoms.push_back({a.at, c1 * a.mass});
  for (const auto& a : m2) atoms.push_back({a.at, c2 * a.mass});
  return AtomicMeasure<N>(std::move(atoms));
}

template <std::size_t N>
AtomicMeasure<N> operator+(const AtomicMeasure<N>& a, const AtomicMeasure<N>& b) {
  return linear_combine(Rational(1), a, Rational(1), b);
}

template <std::size_t N>
AtomicMeasure<N> operator-(const AtomicMeasure<N>& a, const AtomicMeasure<N>& b) {
  return linear_combine(Rational(1), a, Rational(-1), b);
}

template <std::size_t N>
AtomicMeasure<N> scale(const Rational& c, const AtomicMeasure<N>& m) {
  return linear_combine(c, m, Rational(0), AtomicMeasure<N>{});
}

template <std::size_t N>
Rational total_mass(const AtomicMeasure<N>& m) {
  Rational sum(0);
  for (const auto& a : m) sum += a.mass;
  return sum;
}

/// True for the zero measure and for measures whose canonical masses are all > 0.
template <std::size_t N>
bool is_positive(const AtomicMeasure<N>& m) {
  return std::all_of(m.begin(), m.end(), [](const Atom<N>& a) { return sgn(a.mass) > 0; });
}

template <std::size_t N>
bool is_probability(const AtomicMeasure<N>& m) {
  return is_positive(m) && total_mass(m) == 1;
}

/// The atom carrying the most negative mass, if any mass is negative.
template <std::size_t N>
std::optional<Atom<N>> most_negative_atom(const AtomicMeasure<N>& m) {
  std::optional<Atom<N>> worst;
  for (const auto& a : m) {
    if (sgn(a.mass) < 0 && (!worst || a.mass < worst->mass)) worst = a;
  }
  return worst;
}

/// m1 <= m2 as positive measures: every point's m1-mass is at most its m2-mass.
/// Throws MeasureError when either argument is signed.
template <std::size_t N>
bool leq(const AtomicMeasure<N>& m1, const AtomicMeasure<N>& m2) {
  if (!is_positive(m1) || !is_positive(m2)) throw MeasureError("leq requires positive measures");
  return is_positive(m2 - m1);
}

/// sum of mass * prod(coord_i ^ exponent_i).
template <std::size_t N>
Rational integrate_monomial(const AtomicMeasure<N>& m, const std::array<unsigned, N>& exponents) {
  Rational sum(0);
  for (const auto& a : m) {
    Rational term = a.mass;
    for (std::size_t i = 0; i < N; ++i) term *= pow(a.at[i], exponents[i]);
    sum += term;
  }
  return sum;
}

inline Rational integrate_monomial(const Measure2& m, unsigned k, unsigned l) { return integrate_monomial<2>(m, {k, l}); }
inline Rational moment(const Measure1& m, unsigned k) { return integrate_monomial<1>(m, {k}); }

/// Outcome of an L1-norm computation for a reciprocal monomial. For a
/// finitely atomic positive measure the reciprocal is integrable exactly
/// when no atom sits on an axis the monomial vanishes on.
template <std::size_t N>
struct ReciprocalNorm {
  std::optional<Rational> value;      ///< empty means INFINITE
  std::optional<Atom<N>> offending;   ///< first atom making the norm infinite

  bool finite() const { return value.has_value(); }
  friend bool operator==(const ReciprocalNorm&, const ReciprocalNorm&) = default;
};

namespace detail {

template <std::size_t N>
std::optional<Atom<N>> first_axis_atom(const AtomicMeasure<N>& m, const std::array<unsigned, N>& exponents) {
  for (const auto& a : m) {
    for (std::size_t i = 0; i < N; ++i) {
      if (exponents[i] > 0 && is_zero(a.at[i])) return a;
    }
  }
  return std::nullopt;
}

template <std::size_t N>
Rational monomial_at(const std::array<Rational, N>& at, const std::array<unsigned, N>& exponents) {
  Rational v(1);
  for (std::size_t i = 0; i < N; ++i) v *= pow(at[i], exponents[i]);
  return v;
}

}  // namespace detail

/// || 1/(coord^exponents) ||_{L1(m)}. Throws MeasureError on a signed measure.
template <std::size_t N>
ReciprocalNorm<N> reciprocal_norm(const AtomicMeasure<N>& m, const std::array<unsigned, N>& exponents) {
  if (!is_positive(m)) throw MeasureError("reciprocal_norm requires a positive measure");
  if (auto bad = detail::first_axis_atom(m, exponents)) return {std::nullopt, std::move(bad)};
  Rational sum(0);
  for (const auto& a : m) sum += a.mass / detail::monomial_at(a.at, exponents);
  return {std::move(sum), std::nullopt};
}

inline ReciprocalNorm<2> reciprocal_norm(const Measure2& m, unsigned k, unsigned l) { return reciprocal_norm<2>(m, {k, l}); }
inline ReciprocalNorm<1> reciprocal_norm(const Measure1& m, unsigned k) { return reciprocal_norm<1>(m, {k}); }

/// Atom mass w at x becomes c * w * x^exponents; annihilated atoms vanish.
template <std::size_t N>
AtomicMeasure<N> density_scale(const AtomicMeasure<N>& m, const std::array<unsigned, N>& exponents, const Rational& c) {
  std::vector<Atom<N>> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m) atoms.push_back({a.at, c * a.mass * detail::monomial_at(a.at, exponents)});
  return AtomicMeasure<N>(std::move(atoms));
}

inline Measure2 density_scale(const Measure2& m, unsigned k, unsigned l, const Rational& c) {
  return density_scale<2>(m, {k, l}, c);
}
inline Measure1 density_scale(const Measure1& m, unsigned k, const Rational& c) { return density_scale<1>(m, {k}, c); }

std::string describe(const Atom2& atom);
std::string describe(const Atom1& atom);

/// Atom mass w at x becomes c * w / x^exponents. Works on signed measures;
/// throws MeasureError naming the offending atom if any atom lies where the
/// monomial vanishes.
template <std::size_t N>
AtomicMeasure<N> reciprocal_scale(const AtomicMeasure<N>& m, const std::array<unsigned, N>& exponents, const Rational& c) {
  if (auto bad = detail::first_axis_atom(m, exponents)) {
    throw MeasureError("reciprocal density is not integrable: atom " + describe(*bad));
  }
  std::vector<Atom<N>> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m) atoms.push_back({a.at, c * a.mass / detail::monomial_at(a.at, exponents)});
  return AtomicMeasure<N>(std::move(atoms));
}

inline Measure2 reciprocal_scale(const Measure2& m, unsigned k, unsigned l, const Rational& c) {
  return reciprocal_scale<2>(m, {k, l}, c);
}
inline Measure1 reciprocal_scale(const Measure1& m, unsigned k, const Rational& c) {
  return reciprocal_scale<1>(m, {k}, c);
}

Measure1 marginal_x(const Measure2& m);
Measure1 marginal_y(const Measure2& m);

/// d mu_ext = d mu / (x * ||1/x||), x the chosen coordinate.
Measure2 extremal(const Measure2& m, Axis axis);

/// axis = s: rho x delta_0 (atoms at (x, 0)); axis = t: delta_0 x rho (atoms at (0, x)).
Measure2 embed_axis(const Measure1& rho, Axis axis);

/// Swaps the roles of s and t.
Measure2 transpose(const Measure2& m);

struct RegionSplit {
  Measure2 open;     ///< s > 0, t > 0
  Measure2 s_axis;   ///< s = 0, t > 0
  Measure2 t_axis;   ///< s > 0, t = 0
  Rational origin;

  friend bool operator==(const RegionSplit&, const RegionSplit&) = default;
};

RegionSplit split_regions(const Measure2& m);

}  // namespace romp
