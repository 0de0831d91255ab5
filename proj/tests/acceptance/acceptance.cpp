// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "romp/extensions.hpp"
#include "romp/io.hpp"
#include "romp/oracle.hpp"
#include "romp/solver.hpp"
#include "testkit.hpp"

namespace {

using namespace romp;
using testkit::q;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      first_ = what;
    }
    ++count_;
  }
  Outcome outcome(const std::string& summary) const {
    return {pass_, pass_ ? summary : "first failure: " + first_ + " (" + std::to_string(count_) + " checks)"};
  }

 private:
  bool pass_ = true;
  std::string first_;
  std::size_t count_ = 0;
};

constexpr unsigned kMeasures = 200;
constexpr unsigned kPatternsPerType = 10;

std::vector<Pattern> patterns_of(StaircaseType type) {
  std::vector<Pattern> out;
  for (std::uint64_t seed = 0; out.size() < kPatternsPerType; ++seed) {
    auto p = random_pattern(seed * 131 + static_cast<unsigned>(type), type, 4);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

Measure2 corpus_measure(unsigned i, Support support) {
  return random_measure(support == Support::open ? 50000 + i : i, 1 + i % 6, 64, support);
}

struct Generated {
  Measure2 mu;
  RompInstance inst;
};

std::vector<Generated> generated_corpus(std::initializer_list<StaircaseType> types, Support support) {
  std::vector<Generated> out;
  for (auto type : types) {
    const auto patterns = patterns_of(type);
    for (unsigned i = 0; i < kMeasures; ++i) {
      const auto mu = corpus_measure(i, support);
      for (const auto& p : patterns) out.push_back({mu, generate_instance(mu, p)});
    }
  }
  return out;
}

std::string seconds_since(std::chrono::steady_clock::time_point start) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  Check check;
  std::set<unsigned> atom_counts;
  bool axis_support = false;
  const auto corpus = generated_corpus({StaircaseType::I, StaircaseType::II, StaircaseType::III}, Support::anywhere);
  for (const auto& [mu, inst] : corpus) {
    const auto sol = solve_canonical(inst);
    const std::string where = "pattern type " + to_string(classify_type(inst.pattern));
    check.require(sol.verdict == Verdict::subnormal, where + " verdict");
    check.require(sol.measure && *sol.measure == mu, where + " measure");
    check.require(sol.measure && verify_solution(inst, *sol.measure, default_moment_bound(*sol.measure)).ok(),
                  where + " oracle verification");
    atom_counts.insert(static_cast<unsigned>(mu.size()));
    const auto r = split_regions(mu);
    axis_support |= !r.s_axis.empty() || !r.t_axis.empty() || r.origin != 0;
  }
  check.require(atom_counts == std::set<unsigned>{1, 2, 3, 4, 5, 6}, "atom counts 1..6");
  check.require(axis_support, "corpus reaches the axes");
  const double t = elapsed(start);
  check.require(t < 10.0, "runtime under 10 s");
  return check.outcome(std::to_string(corpus.size()) + " instances (" + std::to_string(kMeasures) + " measures x " +
                       std::to_string(kPatternsPerType) + " patterns x 3 types) recovered exactly in " +
                       seconds_since(start));
}

Outcome criterion_2() {
  Check check;
  const auto corpus = generated_corpus({StaircaseType::IV}, Support::open);
  for (const auto& [mu, inst] : corpus) {
    const auto sol = solve_canonical(inst);
    check.require(sol.verdict == Verdict::subnormal, "verdict");
    check.require(sol.measure && *sol.measure == mu, "measure");
    check.require(sol.sigma_correction && sol.sigma_correction->empty(), "row correction vanishes");
    check.require(sol.tau_correction && sol.tau_correction->empty(), "column correction vanishes");
  }
  const auto gap = solve_canonical(generate_instance(testkit::mu_b(), Pattern::from_points({{1, 1}})));
  check.require(gap.verdict == Verdict::insoluble, "axis-mass case insoluble");
  const Condition* nc4 = nullptr;
  for (const auto& s : gap.reports) {
    if (auto c = s.report.first_failure()) {
      nc4 = c;
      break;
    }
  }
  check.require(nc4 && nc4->id == "nc4", "axis-mass case fails nc4");
  check.require(nc4 && nc4->witness && nc4->witness->values == std::vector<Rational>{1, 2}, "nc4 witness 1 vs 2");
  return check.outcome(std::to_string(corpus.size()) +
                       " open-support instances recovered with zero corrections; axis-mass case fails nc4 (1 vs 2)");
}

Outcome criterion_3() {
  Check check;
  const auto ext = two_step(testkit::nu_c(), testkit::sigma_c(), testkit::tau_c(), 1, 1, q("7/4"), q("5/4"), q("3/2"));
  for (const char* id : {"nc1", "nc2", "nc3", "nc4"}) {
    const auto* c = ext.report.find(id);
    check.require(c && c->status == Status::holds, std::string(id) + " holds");
  }
  check.require(ext.report.find("nc2")->equality == true, "nc2 with equality");
  check.require(ext.report.find("nc3")->equality == true, "nc3 with equality");
  check.require(ext.measure && *ext.measure == testkit::mu_c(), "reconstructs the three-atom measure");
  check.require(restriction_measure(testkit::mu_c(), {1, 1}).nu == testkit::nu_c(), "localized data consistent");
  check.require(gamma_from_measure(testkit::mu_c(), 1, 1).at({1, 1}) == q("7/4"), "moment 7/4");
  return check.outcome("nc1-nc4 hold, nc2/nc3 with equality, exact reconstruction");
}

Outcome criterion_4() {
  constexpr std::uint64_t kCases = 500;
  Check check;
  unsigned infinite = 0;
  for (std::uint64_t seed = 0; seed < kCases; ++seed) {
    // (a) norm of 1/t against the measure and against its column marginal.
    testkit::Lcg rng(seed);
    const auto m = testkit::small_measure(rng, 1 + rng.below(6), true);
    const auto quadrant = reciprocal_norm(m, 0, 1);
    const auto column = reciprocal_norm(marginal_y(m), 1);
    check.require(quadrant.value == column.value, "(a) marginal norm equality");
    check.require(quadrant.value == testkit::naive_reciprocal(testkit::table(m), 0, 1), "(a) naive norm");
    infinite += !quadrant.finite();

    // (b) generated row measure is the row marginal.
    const auto mu = random_measure(seed, 1 + seed % 6, 64, Support::anywhere);
    const auto inst = generate_instance(mu, random_pattern(seed, static_cast<StaircaseType>(seed % 4), 4));
    check.require(inst.sigma == marginal_x(mu), "(b) sigma = marginal_x");
    check.require(testkit::line(inst.sigma) == testkit::naive_marginal(testkit::table(mu), true), "(b) naive marginal");

    // (c) commuting squared weights and path independence.
    const auto g = gamma_from_measure(random_measure(seed, 1 + seed % 6, 64, Support::open), 3, 3);
    const auto w = weights_from_gamma(g);
    check.require(check_commuting(w), "(c) commuting");
    for (const auto& [p, value] : g.entries()) {
      check.require(gamma_from_weights(w, p, PathOrder::row_first) == value, "(c) row-first path");
      check.require(gamma_from_weights(w, p, PathOrder::column_first) == value, "(c) column-first path");
    }

    // (d) restricting twice equals restricting once at the sum.
    const LatticePoint a{static_cast<unsigned>(seed % 3), static_cast<unsigned>(seed / 3 % 3)};
    const LatticePoint b{static_cast<unsigned>(seed / 9 % 3), static_cast<unsigned>(seed / 27 % 3)};
    const auto ra = restriction_measure(mu, a);
    const auto rab = restriction_measure(ra.nu, b);
    const auto direct = restriction_measure(mu, a + b);
    check.require(rab.nu == direct.nu, "(d) composed restriction");
    check.require(ra.gamma * rab.gamma == direct.gamma, "(d) moment product");

    // (e) one-variable back step undoes a one-step shift.
    const auto sigma = marginal_x(random_measure(seed + 777, 1 + seed % 6, 64, Support::open));
    const Rational first = moment(sigma, 1);
    const auto back = backstep_1d(density_scale(sigma, 1, 1 / first), first);
    check.require(back.measure && *back.measure == sigma, "(e) back step round trip");
  }
  check.require(infinite > 0, "(a) includes infinite norms");
  return check.outcome("(a)-(e) each over " + std::to_string(kCases) + " cases, " + std::to_string(infinite) +
                       " infinite norms in (a)");
}

Outcome criterion_5() {
  Check check;
  auto corpus = generated_corpus({StaircaseType::I, StaircaseType::II, StaircaseType::III}, Support::anywhere);
  auto open = generated_corpus({StaircaseType::IV}, Support::open);
  corpus.insert(corpus.end(), open.begin(), open.end());
  // Perturbed copies: one localized measure replaced by a restriction of an unrelated measure.
  const std::size_t base = corpus.size();
  for (std::size_t i = 0; i < base; i += 7) {
    Generated g = corpus[i];
    const auto& f = g.inst.pattern.foundation();
    const auto k = f[i % f.size()];
    g.inst.localized[k] = restriction_measure(random_measure(90000 + i, 2, 64, Support::open), k).nu;
    corpus.push_back(std::move(g));
  }
  std::size_t insoluble = 0;
  for (const auto& g : corpus) {
    const auto a = solve_canonical(g.inst, PairMode::consecutive).verdict;
    const auto b = solve_canonical(g.inst, PairMode::all_pairs).verdict;
    const auto c = solve_canonical(g.inst, PairMode::nondegenerate_pairs).verdict;
    check.require(a == b && a == c, "identical verdicts");
    insoluble += a == Verdict::insoluble;
  }
  check.require(insoluble > 0, "corpus contains insoluble instances");
  return check.outcome(std::to_string(corpus.size()) + " instances (" + std::to_string(insoluble) +
                       " insoluble) give identical verdicts in all three modes");
}

// ---- negative detection -----------------------------------------------------

struct Negative {
  std::string id;
  std::function<ConditionReport()> run;
  std::function<bool(const Witness&)> witness_ok;
};

ConditionReport solver_report(const RompInstance& inst) {
  ConditionReport all;
  for (const auto& s : solve_canonical(inst).reports) {
    for (const auto& c : s.report.conditions()) all.add(c);
  }
  return all;
}

Measure1 half_zero_one() { return testkit::measure1({{"0", "1/2"}, {"1", "1/2"}}); }

std::vector<Rational> vals(std::initializer_list<Rational> v) { return v; }

// Witness is an atom of m at which the named coordinates vanish.
std::function<bool(const Witness&)> axis_atom_of(const Measure2& m, bool s_exponent, bool t_exponent) {
  return [m, s_exponent, t_exponent](const Witness& w) {
    if (w.point.size() != 2 || !w.mass) return false;
    const auto t = testkit::table(m);
    auto it = t.find({w.point[0], w.point[1]});
    return it != t.end() && it->second == *w.mass &&
           ((s_exponent && w.point[0] == 0) || (t_exponent && w.point[1] == 0));
  };
}

// Witness values [lhs, rhs] equal the independently computed pair and lhs > rhs.
std::function<bool(const Witness&)> exceeds(Rational lhs, Rational rhs) {
  return [lhs, rhs](const Witness& w) { return w.values == vals({lhs, rhs}) && lhs > rhs; };
}

std::function<bool(const Witness&)> differs_at(std::vector<Rational> point, Rational lhs, Rational rhs) {
  return [point, lhs, rhs](const Witness& w) { return w.point == point && w.values == vals({lhs, rhs}) && lhs != rhs; };
}

std::vector<Negative> negative_corpus() {
  using testkit::naive_reciprocal;
  using testkit::table;
  std::vector<Negative> out;
  const auto d11 = dirac2(q("1"), q("1"));

  out.push_back({"1d.i", [] { return backstep_1d(half_zero_one(), q("1/2")).report; },
                 [](const Witness& w) { return w.point == vals({0}) && w.mass == q("1/2"); }});
  {
    const auto m = testkit::measure1({{"1/2", "1"}});
    // omega0^2 * ||1/s|| computed directly: 1 * (1 / (1/2)).
    out.push_back({"1d.ii", [m] { return backstep_1d(m, Rational(1)).report; }, exceeds(Rational(1) / q("1/2"), 1)});
  }
  {
    const auto nu = testkit::measure({{{"1", "0"}, "1"}});
    out.push_back({"2d.i", [nu] { return backstep_2d(nu, dirac1(q("1")), q("1/2")).report; },
                   axis_atom_of(nu, false, true)});
  }
  out.push_back({"2d.ii", [d11] { return backstep_2d(d11, dirac1(q("1")), Rational(2)).report; },
                 exceeds(2 * *naive_reciprocal(table(d11), 0, 1), 1)});
  // Upper part puts 1/2 at s = 1 where the row measure has nothing.
  out.push_back({"2d.iii", [d11] { return backstep_2d(d11, dirac1(q("2")), q("1/2")).report; },
                 differs_at({1}, q("1/2"), 0)});
  {
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{0, 2}, {1, 1}, {3, 0}}));
    inst.localized[{1, 1}] = dirac2(q("2"), q("2"));
    // gamma_(0,2) s nu_(0,2) vs gamma_(1,1) t nu_(1,1), first differing point (1,1) in canonical order.
    auto mu = table(testkit::mu_c());
    const Rational lhs_at = mu[{1, 1}] * testkit::power(1, 1) * testkit::power(1, 2);
    out.push_back({"os.compat", [inst] { return solver_report(inst); },
                   differs_at({1, 1}, lhs_at, Rational(0))});
  }
  {
    // An origin atom keeps the pair compatible but makes 1/t non-integrable.
    const auto mu_0l = testkit::measure({{{"0", "0"}, "1/2"}, {{"1", "1"}, "1/2"}});
    out.push_back({"os.i",
                   [d11, mu_0l] { return one_step_generalized(d11, mu_0l, 1, 1, q("1/2"), Rational(1), half_zero_one()).report; },
                   axis_atom_of(mu_0l, false, true)});
  }
  {
    const auto mu_k0 = testkit::measure({{{"0", "0"}, "1/2"}, {{"1", "1"}, "1/2"}});
    out.push_back({"os.ii",
                   [d11, mu_k0] { return one_step_generalized(mu_k0, d11, 1, 1, Rational(1), q("1/2"), half_zero_one()).report; },
                   axis_atom_of(mu_k0, true, false)});
  }
  out.push_back({"os.iii",
                 [d11] { return one_step_generalized(d11, d11, 1, 1, Rational(2), Rational(2), half_zero_one()).report; },
                 exceeds(2 * *naive_reciprocal(table(d11), 1, 0), 1)});
  {
    const auto mu_0l = testkit::measure({{{"0", "1"}, "1/2"}, {{"1", "1"}, "1/2"}});
    // At s = 0: gamma_0l * (mass of mu_0l/t on s = 0) + gamma_0l * lambda * ||1/s||_{mu_k0} = 3/4 + 3/4.
    const Rational at_zero = q("3/2") * q("1/2") / 1 + q("3/2") * (q("3/4") / q("3/2")) * 1;
    out.push_back({"os.iv",
                   [d11, mu_0l] { return one_step_generalized(d11, mu_0l, 1, 1, q("3/4"), q("3/2"), dirac1(q("1"))).report; },
                   [at_zero](const Witness& w) { return w.point == vals({0}) && w.values == vals({at_zero, 1}) && at_zero > 1; }});
  }
  {
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{1, 1}}));
    inst.localized[{1, 1}] = testkit::measure({{{"1", "0"}, "1/2"}, {{"1", "1"}, "1/2"}});
    const auto nu = inst.localized.at({1, 1});
    out.push_back({"nc1", [inst] { return solver_report(inst); }, axis_atom_of(nu, true, true)});
  }
  {
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{1, 1}}));
    inst.tau = dirac1(q("1"));
    // gamma (nu/s)^Y at t = 2: 7/4 * (4/7)/1 = 1; t tau at 2 is 0.
    const Rational lhs = q("7/4") * table(testkit::nu_c())[{q("1"), q("2")}] / 1;
    out.push_back({"nc2", [inst] { return solver_report(inst); }, differs_at({2}, lhs, 0)});
  }
  {
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{1, 1}}));
    inst.sigma = dirac1(q("1"));
    const Rational lhs = q("7/4") * table(testkit::nu_c())[{q("2"), q("1")}] / 1;
    out.push_back({"nc3", [inst] { return solver_report(inst); }, differs_at({2}, lhs, 0)});
  }
  {
    const auto inst = generate_instance(testkit::mu_b(), Pattern::from_points({{1, 1}}));
    const Rational norm = *naive_reciprocal(table(inst.localized.at({1, 1})), 1, 1);
    const Rational target = 1 / testkit::naive_moment(table(testkit::mu_b()), 1, 1);
    out.push_back({"nc4", [inst] { return solver_report(inst); },
                   [norm, target](const Witness& w) { return w.values == vals({norm, target}) && norm != target; }});
  }
  {
    // Type I with a column-zero atom in the localized data at the reached point.
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{0, 1}}));
    inst.localized[{0, 1}] = testkit::measure({{{"2", "0"}, "1/2"}, {{"1", "1"}, "1/2"}});
    const auto nu = inst.localized.at({0, 1});
    out.push_back({"ms.a", [inst] { return solver_report(inst); }, axis_atom_of(nu, false, true)});
  }
  {
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{0, 1}}));
    inst.sigma = dirac1(q("2"));
    // gamma (nu/t)^X at s = 1: 3/2 * (1/6 / 1 + 2/3 / 2) = 3/4.
    auto nu = table(inst.localized.at({0, 1}));
    const Rational lhs = q("3/2") * (nu[{q("1"), q("1")}] / 1 + nu[{q("1"), q("2")}] / 2);
    out.push_back({"ms.b", [inst] { return solver_report(inst); }, differs_at({1}, lhs, 0)});
  }
  {
    auto inst = generate_instance(testkit::mu_c(), Pattern::from_points({{0, 1}}));
    inst.tau = dirac1(q("2"));
    // Candidate column marginal at t = 1 is the mass of mu_C on t = 1.
    const Rational at_one = testkit::naive_marginal(table(testkit::mu_c()), false)[1];
    out.push_back({"ms.c", [inst] { return solver_report(inst); }, differs_at({1}, at_one, 0)});
  }
  {
    const auto sigma = scale(Rational(2), half_zero_one());
    const auto tau = half_zero_one() + dirac1(q("0"));
    Rational total(0);
    for (const auto& [x, w] : testkit::line(sigma)) total += w;
    out.push_back({"ms.d",
                   [d11, sigma, tau] { return multistep_axis(d11, 1, q("1/2"), sigma, tau, Direction::vertical).report; },
                   [total](const Witness& w) { return w.values == vals({total, 1}) && total != 1; }});
  }
  return out;
}

Outcome criterion_6() {
  Check check;
  const std::vector<std::string> required = {"1d.i", "1d.ii", "2d.i", "2d.ii", "2d.iii", "os.compat",
                                             "os.i", "os.ii", "os.iii", "os.iv", "nc1", "nc2",
                                             "nc3", "nc4", "ms.a", "ms.b", "ms.c", "ms.d"};
  std::set<std::string> covered;
  std::vector<std::string> also_failing;
  for (const auto& n : negative_corpus()) {
    const auto report = n.run();
    const Condition* c = report.first_failure();
    for (const auto& other : report.conditions()) {
      if (other.status == Status::fails && other.id != n.id) also_failing.push_back(n.id + "->" + other.id);
    }
    check.require(c && c->id == n.id, n.id + " is the reported failure");
    check.require(c && c->witness && n.witness_ok(*c->witness), n.id + " witness re-checked");
    if (c && c->id == n.id && c->witness && n.witness_ok(*c->witness)) covered.insert(n.id);
  }
  for (const auto& id : required) check.require(covered.count(id) == 1, id + " covered");
  std::string implied;
  for (const auto& a : also_failing) implied += (implied.empty() ? "" : ", ") + a;
  return check.outcome(std::to_string(covered.size()) +
                       " condition ids detected first with independently re-checked witnesses; later failures: " +
                       (implied.empty() ? "none" : implied));
}

// ---- CLI ---------------------------------------------------------------------

int run(const std::string& command) {
  const int status = std::system((command + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_7() {
  Check check;
  const std::filesystem::path data = ROMP_TEST_DATA;
  const std::string cli = ROMP_CLI_PATH;
  const auto dir = std::filesystem::temp_directory_path() / ("romp-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto inst = dir / "instance.json";
  const auto sol = dir / "solution.json";

  check.require(run(cli + " generate --measure " + (data / "golden_measure.json").string() + " --pattern " +
                    (data / "golden_pattern.json").string() + " -o " + inst.string()) == 0,
                "generate exits 0");
  check.require(slurp(inst) == slurp(data / "golden_instance.json"), "generated instance matches the golden file");
  check.require(classify_type(io::read_instance(slurp(inst)).pattern) == StaircaseType::III, "golden pattern is Type III");
  check.require(run(cli + " solve " + inst.string() + " -o " + sol.string()) == 0, "solve exits 0");
  check.require(run(cli + " verify " + inst.string() + " " + sol.string()) == 0, "verify exits 0");

  // Byte stability: canonical documents are fixed points of read-then-write.
  const auto itext = slurp(inst);
  const auto stext = slurp(sol);
  check.require(io::write_instance(io::read_instance(itext)) == itext, "instance byte-stable");
  check.require(io::write_solution(io::read_solution(stext)) == stext, "solution byte-stable");
  const auto mtext = io::write_measure(io::read_measure(slurp(data / "golden_measure.json")));
  check.require(io::write_measure(io::read_measure(mtext)) == mtext, "measure byte-stable after canonicalization");
  const auto ptext = io::write_pattern(io::read_pattern(slurp(data / "golden_pattern.json")));
  check.require(io::write_pattern(io::read_pattern(ptext)) == ptext, "pattern byte-stable after canonicalization");
  std::filesystem::remove_all(dir);
  return check.outcome("generate -> solve -> verify exit 0 on the golden Type III instance; documents byte-stable");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"round-trip exactness, types I-III", criterion_1},
      {"round-trip exactness, type IV", criterion_2},
      {"worked two-step instance", criterion_3},
      {"invariant suites", criterion_4},
      {"pair-mode equivalence", criterion_5},
      {"negative detection", criterion_6},
      {"CLI contract", criterion_7},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  return failures;
}
