#include "romp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace romp::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError("field '" + path + "': " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Rational rational_from(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

unsigned unsigned_from(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<unsigned>();
}

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  const json& version = field(doc, "", "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    fail("format_version", "unsupported format version");
  }
  return doc;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(LatticePoint p) { return json::array({p.k1, p.k2}); }

LatticePoint point_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [k1, k2]");
  return {unsigned_from(j[0], index(path, 0)), unsigned_from(j[1], index(path, 1))};
}

json to_json(const Measure2& m) {
  json out = json::array();
  for (const auto& a : m) {
    out.push_back({{"s", to_string(a.at[0])}, {"t", to_string(a.at[1])}, {"mass", to_string(a.mass)}});
  }
  return out;
}

json to_json(const Measure1& m) {
  json out = json::array();
  for (const auto& a : m) out.push_back({{"at", to_string(a.at[0])}, {"mass", to_string(a.mass)}});
  return out;
}

Rational coordinate_from(const json& j, const std::string& path) {
  Rational r = rational_from(j, path);
  if (sgn(r) < 0) fail(path, "coordinate must be non-negative");
  return r;
}

Measure2 measure2_from(const json& j, const std::string& path) {
  std::vector<Atom2> atoms;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = index(path, i);
    atoms.push_back({{coordinate_from(field(arr[i], at, "s"), join(at, "s")),
                      coordinate_from(field(arr[i], at, "t"), join(at, "t"))},
                     rational_from(field(arr[i], at, "mass"), join(at, "mass"))});
  }
  return Measure2(std::move(atoms));
}

Measure1 measure1_from(const json& j, const std::string& path) {
  std::vector<Atom1> atoms;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = index(path, i);
    atoms.push_back({{coordinate_from(field(arr[i], at, "at"), join(at, "at"))},
                     rational_from(field(arr[i], at, "mass"), join(at, "mass"))});
  }
  return Measure1(std::move(atoms));
}

json pattern_json(const Pattern& p) {
  json out = json::array();
  for (const auto& k : p.foundation()) out.push_back(to_json(k));
  return out;
}

Pattern pattern_from(const json& j, const std::string& path) {
  std::vector<LatticePoint> points;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) points.push_back(point_from(arr[i], index(path, i)));
  if (points.empty()) fail(path, "a pattern needs at least one point");
  return Pattern::from_points(points);
}

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals_from(const json& j, const std::string& path) {
  std::vector<Rational> out;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from(arr[i], index(path, i)));
  return out;
}

json report_json(const ConditionReport& report) {
  json out = json::array();
  for (const auto& c : report.conditions()) {
    json cj = {{"id", c.id}, {"status", to_string(c.status)}};
    if (c.equality) cj["equality"] = *c.equality;
    if (c.witness) {
      json w = json::object();
      if (!c.witness->point.empty()) w["point"] = rationals_json(c.witness->point);
      if (c.witness->mass) w["mass"] = to_string(*c.witness->mass);
      if (!c.witness->values.empty()) w["values"] = rationals_json(c.witness->values);
      if (!c.witness->note.empty()) w["note"] = c.witness->note;
      cj["witness"] = std::move(w);
    }
    out.push_back(std::move(cj));
  }
  return out;
}

Status status_from(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a status string");
  const auto s = j.get<std::string>();
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  if (s == "not-applicable") return Status::not_applicable;
  fail(path, "unknown status \"" + s + "\"");
}

ConditionReport report_from(const json& j, const std::string& path) {
  ConditionReport report;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = index(path, i);
    const json& cj = arr[i];
    Condition c;
    const json& id = field(cj, at, "id");
    if (!id.is_string()) fail(join(at, "id"), "expected a string");
    c.id = id.get<std::string>();
    c.status = status_from(field(cj, at, "status"), join(at, "status"));
    if (auto it = cj.find("equality"); it != cj.end()) {
      if (!it->is_boolean()) fail(join(at, "equality"), "expected a boolean");
      c.equality = it->get<bool>();
    }
    if (auto it = cj.find("witness"); it != cj.end()) {
      const std::string wp = join(at, "witness");
      if (!it->is_object()) fail(wp, "expected an object");
      Witness w;
      if (auto p = it->find("point"); p != it->end()) w.point = rationals_from(*p, join(wp, "point"));
      if (auto m = it->find("mass"); m != it->end()) w.mass = rational_from(*m, join(wp, "mass"));
      if (auto v = it->find("values"); v != it->end()) w.values = rationals_from(*v, join(wp, "values"));
      if (auto n = it->find("note"); n != it->end()) {
        if (!n->is_string()) fail(join(wp, "note"), "expected a string");
        w.note = n->get<std::string>();
      }
      c.witness = std::move(w);
    }
    report.add(std::move(c));
  }
  return report;
}

}  // namespace

std::string write_measure(const Measure2& m) {
  return dump({{"format_version", kFormatVersion}, {"measure", to_json(m)}});
}

Measure2 read_measure(std::string_view text) {
  const json doc = parse_document(text);
  return measure2_from(field(doc, "", "measure"), "measure");
}

std::string write_pattern(const Pattern& p) {
  return dump({{"format_version", kFormatVersion}, {"pattern", pattern_json(p)}});
}

Pattern read_pattern(std::string_view text) {
  const json doc = parse_document(text);
  return pattern_from(field(doc, "", "pattern"), "pattern");
}

std::string write_instance(const RompInstance& inst) {
  json localized = json::array();
  for (const auto& k : inst.pattern.foundation()) {
    localized.push_back({{"point", to_json(k)}, {"measure", to_json(inst.localized.at(k))}});
  }
  json gamma = json::array();
  for (const auto& [p, v] : inst.gamma.entries()) gamma.push_back({{"point", to_json(p)}, {"value", to_string(v)}});
  return dump({{"format_version", kFormatVersion},
               {"pattern", pattern_json(inst.pattern)},
               {"localized", std::move(localized)},
               {"sigma", to_json(inst.sigma)},
               {"tau", to_json(inst.tau)},
               {"gamma", std::move(gamma)}});
}

RompInstance read_instance(std::string_view text) {
  const json doc = parse_document(text);
  RompInstance inst;
  inst.pattern = pattern_from(field(doc, "", "pattern"), "pattern");
  const json& localized = array_at(field(doc, "", "localized"), "localized");
  for (std::size_t i = 0; i < localized.size(); ++i) {
    const std::string at = index("localized", i);
    const LatticePoint k = point_from(field(localized[i], at, "point"), join(at, "point"));
    if (!inst.localized.emplace(k, measure2_from(field(localized[i], at, "measure"), join(at, "measure"))).second) {
      fail(join(at, "point"), "duplicate localized point " + to_string(k));
    }
  }
  inst.sigma = measure1_from(field(doc, "", "sigma"), "sigma");
  inst.tau = measure1_from(field(doc, "", "tau"), "tau");
  const json& gamma = array_at(field(doc, "", "gamma"), "gamma");
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const std::string at = index("gamma", i);
    const LatticePoint p = point_from(field(gamma[i], at, "point"), join(at, "point"));
    try {
      inst.gamma.set(p, rational_from(field(gamma[i], at, "value"), join(at, "value")));
    } catch (const std::invalid_argument& e) {
      fail(join(at, "value"), e.what());
    }
  }
  return inst;
}

std::string write_solution(const RompSolution& sol) {
  json reports = json::array();
  for (const auto& r : sol.reports) reports.push_back({{"step", r.step}, {"conditions", report_json(r.report)}});
  json doc = {{"format_version", kFormatVersion},
              {"verdict", to_string(sol.verdict)},
              {"reports", std::move(reports)},
              {"warnings", sol.warnings}};
  if (sol.measure) doc["measure"] = to_json(*sol.measure);
  if (sol.sigma_correction) doc["sigma_correction"] = to_json(*sol.sigma_correction);
  if (sol.tau_correction) doc["tau_correction"] = to_json(*sol.tau_correction);
  return dump(doc);
}

RompSolution read_solution(std::string_view text) {
  const json doc = parse_document(text);
  RompSolution sol;
  const json& verdict = field(doc, "", "verdict");
  if (verdict == "subnormal") {
    sol.verdict = Verdict::subnormal;
  } else if (verdict == "insoluble") {
    sol.verdict = Verdict::insoluble;
  } else {
    fail("verdict", "expected \"subnormal\" or \"insoluble\"");
  }
  if (auto it = doc.find("measure"); it != doc.end()) sol.measure = measure2_from(*it, "measure");
  if (auto it = doc.find("sigma_correction"); it != doc.end()) sol.sigma_correction = measure1_from(*it, "sigma_correction");
  if (auto it = doc.find("tau_correction"); it != doc.end()) sol.tau_correction = measure1_from(*it, "tau_correction");
  const json& reports = array_at(field(doc, "", "reports"), "reports");
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const std::string at = index("reports", i);
    const json& step = field(reports[i], at, "step");
    if (!step.is_string()) fail(join(at, "step"), "expected a string");
    sol.reports.push_back({step.get<std::string>(), report_from(field(reports[i], at, "conditions"), join(at, "conditions"))});
  }
  if (auto it = doc.find("warnings"); it != doc.end()) {
    const json& arr = array_at(*it, "warnings");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) fail(index("warnings", i), "expected a string");
      sol.warnings.push_back(arr[i].get<std::string>());
    }
  }
  if ((sol.verdict == Verdict::subnormal) != sol.measure.has_value()) {
    fail("measure", "must be present exactly when the verdict is subnormal");
  }
  return sol;
}

std::string write_gamma_table(const GammaTable& g) {
  const unsigned max1 = g.max1();
  const unsigned max2 = g.max2();
  json rows = json::array();
  for (unsigned i = 0; i <= max1; ++i) {
    json row = json::array();
    for (unsigned j = 0; j <= max2; ++j) {
      auto v = g.find({i, j});
      row.push_back(v ? json(to_string(*v)) : json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return dump({{"format_version", kFormatVersion}, {"max1", max1}, {"max2", max2}, {"values", std::move(rows)}});
}

GammaTable read_gamma_table(std::string_view text) {
  const json doc = parse_document(text);
  const unsigned max1 = unsigned_from(field(doc, "", "max1"), "max1");
  const unsigned max2 = unsigned_from(field(doc, "", "max2"), "max2");
  const json& rows = array_at(field(doc, "", "values"), "values");
  if (rows.size() != max1 + 1) fail("values", "expected max1 + 1 rows");
  GammaTable g;
  for (unsigned i = 0; i <= max1; ++i) {
    const std::string rp = index("values", i);
    const json& row = array_at(rows[i], rp);
    if (row.size() != max2 + 1) fail(rp, "expected max2 + 1 entries");
    for (unsigned j = 0; j <= max2; ++j) {
      if (row[j].is_null()) continue;
      try {
        g.set({i, j}, rational_from(row[j], index(rp, j)));
      } catch (const std::invalid_argument& e) {
        fail(index(rp, j), e.what());
      }
    }
  }
  return g;
}

namespace {

json weight_rows(const std::map<LatticePoint, Rational>& table, unsigned rows, unsigned cols) {
  json out = json::array();
  for (unsigned i = 0; i < rows; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < cols; ++j) {
      auto it = table.find({i, j});
      row.push_back(it == table.end() ? json(nullptr) : json(to_string(it->second)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::map<LatticePoint, Rational> weights_from(const json& j, const std::string& path, unsigned rows, unsigned cols) {
  std::map<LatticePoint, Rational> out;
  const json& arr = array_at(j, path);
  if (arr.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  for (unsigned i = 0; i < rows; ++i) {
    const std::string rp = index(path, i);
    const json& row = array_at(arr[i], rp);
    if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (unsigned c = 0; c < cols; ++c) {
      if (row[c].is_null()) continue;
      Rational v = rational_from(row[c], index(rp, c));
      if (sgn(v) <= 0) fail(index(rp, c), "squared weights must be positive");
      out[{i, c}] = std::move(v);
    }
  }
  return out;
}

}  // namespace

std::string write_weight_diagram(const WeightDiagram& w) {
  return dump({{"format_version", kFormatVersion},
               {"max1", w.max1},
               {"max2", w.max2},
               {"alpha_sq", weight_rows(w.alpha_sq, w.max1, w.max2 + 1)},
               {"beta_sq", weight_rows(w.beta_sq, w.max1 + 1, w.max2)}});
}

WeightDiagram read_weight_diagram(std::string_view text) {
  const json doc = parse_document(text);
  WeightDiagram w;
  w.max1 = unsigned_from(field(doc, "", "max1"), "max1");
  w.max2 = unsigned_from(field(doc, "", "max2"), "max2");
  w.alpha_sq = weights_from(field(doc, "", "alpha_sq"), "alpha_sq", w.max1, w.max2 + 1);
  w.beta_sq = weights_from(field(doc, "", "beta_sq"), "beta_sq", w.max1 + 1, w.max2);
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace romp::io
