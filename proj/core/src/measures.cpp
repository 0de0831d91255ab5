#include "romp/measures.hpp"

namespace romp {

std::string describe(const Atom2& atom) {
  return "(" + to_string(atom.at[0]) + "," + to_string(atom.at[1]) + "):" + to_string(atom.mass);
}

std::string describe(const Atom1& atom) { return "(" + to_string(atom.at[0]) + "):" + to_string(atom.mass); }

namespace {

Measure1 project(const Measure2& m, std::size_t coordinate) {
  std::vector<Atom1> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m) atoms.push_back({{a.at[coordinate]}, a.mass});
  return Measure1(std::move(atoms));
}

}  // namespace

Measure1 marginal_x(const Measure2& m) { return project(m, 0); }
Measure1 marginal_y(const Measure2& m) { return project(m, 1); }

Measure2 extremal(const Measure2& m, Axis axis) {
  const std::array<unsigned, 2> exponents = axis == Axis::s ? std::array<unsigned, 2>{1, 0} : std::array<unsigned, 2>{0, 1};
  const auto norm = reciprocal_norm<2>(m, exponents);
  if (!norm.finite()) throw MeasureError("extremal measure undefined: atom " + describe(*norm.offending));
  if (is_zero(*norm.value)) throw MeasureError("extremal measure of the zero measure");
  return reciprocal_scale<2>(m, exponents, 1 / *norm.value);
}

Measure2 embed_axis(const Measure1& rho, Axis axis) {
  std::vector<Atom2> atoms;
  atoms.reserve(rho.size());
  for (const auto& a : rho) {
    if (axis == Axis::s) {
      atoms.push_back({{a.at[0], Rational(0)}, a.mass});
    } else {
      atoms.push_back({{Rational(0), a.at[0]}, a.mass});
    }
  }
  return Measure2(std::move(atoms));
}

Measure2 transpose(const Measure2& m) {
  std::vector<Atom2> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m) atoms.push_back({{a.at[1], a.at[0]}, a.mass});
  return Measure2(std::move(atoms));
}

RegionSplit split_regions(const Measure2& m) {
  std::vector<Atom2> open;
  std::vector<Atom2> s_axis;
  std::vector<Atom2> t_axis;
  Rational origin(0);
  for (const auto& a : m) {
    const bool s0 = is_zero(a.at[0]);
    const bool t0 = is_zero(a.at[1]);
    if (s0 && t0) {
      origin += a.mass;
    } else if (s0) {
      s_axis.push_back(a);
    } else if (t0) {
      t_axis.push_back(a);
    } else {
      open.push_back(a);
    }
  }
  return {Measure2(std::move(open)), Measure2(std::move(s_axis)), Measure2(std::move(t_axis)), origin};
}

}  // namespace romp
