#pragma once

// Test-side helpers: worked fixtures and naive reference computations that
// share no code with the library beyond the Rational type.

#include <cstdint>
#include <map>
#include <ostream>
#include <optional>
#include <utility>
#include <vector>

#include "romp/measures.hpp"
#include "romp/moments.hpp"

namespace romp {

template <std::size_t N>
void PrintTo(const AtomicMeasure<N>& m, std::ostream* os) {
  *os << "{";
  for (std::size_t i = 0; i < m.size(); ++i) *os << (i ? " + " : "") << describe(m.atoms()[i]);
  *os << "}";
}

}  // namespace romp

namespace testkit {

using romp::Measure1;
using romp::Measure2;
using romp::Rational;

inline Rational q(const char* text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

using Point = std::pair<Rational, Rational>;
using Table = std::map<Point, Rational>;
using Line = std::map<Rational, Rational>;

inline Table table(const Measure2& m) {
  Table out;
  for (const auto& a : m) out[{a.at[0], a.at[1]}] += a.mass;
  return out;
}

inline Line line(const Measure1& m) {
  Line out;
  for (const auto& a : m) out[a.at[0]] += a.mass;
  return out;
}

inline Table nonzero(Table t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

inline Line nonzero(Line t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

inline Rational power(const Rational& x, unsigned n) {
  Rational v(1);
  for (unsigned i = 0; i < n; ++i) v *= x;
  return v;
}

inline Rational naive_moment(const Table& mu, unsigned m, unsigned n) {
  Rational sum(0);
  for (const auto& [p, w] : mu) sum += w * power(p.first, m) * power(p.second, n);
  return sum;
}

inline Line naive_marginal(const Table& mu, bool first) {
  Line out;
  for (const auto& [p, w] : mu) out[first ? p.first : p.second] += w;
  return nonzero(out);
}

/// s^k1 t^k2 mu / gamma, or nothing when gamma vanishes.
inline std::optional<Table> naive_restriction(const Table& mu, unsigned k1, unsigned k2) {
  const Rational g = naive_moment(mu, k1, k2);
  if (g == 0) return std::nullopt;
  Table out;
  for (const auto& [p, w] : mu) out[p] = w * power(p.first, k1) * power(p.second, k2) / g;
  return nonzero(out);
}

/// || 1/(s^k t^l) || by brute force; nothing when an atom sits where the monomial vanishes.
inline std::optional<Rational> naive_reciprocal(const Table& mu, unsigned k, unsigned l) {
  Rational sum(0);
  for (const auto& [p, w] : mu) {
    const Rational d = power(p.first, k) * power(p.second, l);
    if (d == 0) return std::nullopt;
    sum += w / d;
  }
  return sum;
}

inline Measure2 measure(std::vector<std::pair<std::pair<const char*, const char*>, const char*>> atoms) {
  std::vector<romp::Atom2> out;
  for (const auto& [at, mass] : atoms) out.push_back({{q(at.first), q(at.second)}, q(mass)});
  return Measure2(std::move(out));
}

inline Measure1 measure1(std::vector<std::pair<const char*, const char*>> atoms) {
  std::vector<romp::Atom1> out;
  for (const auto& [at, mass] : atoms) out.push_back({{q(at)}, q(mass)});
  return Measure1(std::move(out));
}

/// 1/2 delta_(0,0) + 1/2 delta_(1,1).
inline Measure2 mu_b() { return measure({{{"0", "0"}, "1/2"}, {{"1", "1"}, "1/2"}}); }

/// 1/4 delta_(1,1) + 1/4 delta_(2,1) + 1/2 delta_(1,2).
inline Measure2 mu_c() { return measure({{{"1", "1"}, "1/4"}, {{"2", "1"}, "1/4"}, {{"1", "2"}, "1/2"}}); }

inline Measure2 nu_c() { return measure({{{"1", "1"}, "1/7"}, {{"2", "1"}, "2/7"}, {{"1", "2"}, "4/7"}}); }
inline Measure1 sigma_c() { return measure1({{"1", "3/4"}, {"2", "1/4"}}); }
inline Measure1 tau_c() { return measure1({{"1", "1/2"}, {"2", "1/2"}}); }

/// Small deterministic generator independent of the library's.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  unsigned below(unsigned n) {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned>((state_ >> 33) % n);
  }

 private:
  std::uint64_t state_;
};

/// Random positive measure with up to `atoms` atoms, coordinates in {0, 1/den, ..., 3}.
inline Measure2 small_measure(Lcg& rng, unsigned atoms, bool allow_axes) {
  std::vector<romp::Atom2> out;
  for (unsigned i = 0; i < atoms; ++i) {
    auto coord = [&] {
      const unsigned den = 1 + rng.below(4);
      const unsigned lo = allow_axes ? 0 : 1;
      Rational r(lo + rng.below(3 * den), den);
      r.canonicalize();
      return r;
    };
    Rational s = coord();
    Rational t = coord();
    out.push_back({{s, t}, Rational(1 + rng.below(9))});
  }
  Measure2 m(std::move(out));
  return romp::scale(1 / romp::total_mass(m), m);
}

}  // namespace testkit
