#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "romp/io.hpp"
#include "romp/lattice.hpp"
#include "romp/oracle.hpp"
#include "romp/solver.hpp"

namespace {

enum Exit { kOk = 0, kNegative = 1, kSchema = 2, kMath = 3 };

std::string describe(const romp::Condition& c) {
  std::ostringstream out;
  out << "  " << c.id << ": " << romp::to_string(c.status);
  if (c.equality) out << (*c.equality ? " (equality)" : " (strict)");
  if (c.witness) {
    const auto& w = *c.witness;
    auto list = [&](const std::vector<romp::Rational>& v) {
      out << "(";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << romp::to_string(v[i]);
      out << ")";
    };
    out << " at";
    if (!w.point.empty()) {
      out << " ";
      list(w.point);
    }
    if (w.mass) out << " mass " << romp::to_string(*w.mass);
    if (!w.values.empty()) {
      out << " values ";
      list(w.values);
    }
    if (!w.note.empty()) out << " [" << w.note << "]";
  }
  return out.str();
}

std::string summarize(const romp::RompSolution& sol) {
  std::ostringstream out;
  for (const auto& step : sol.reports) {
    out << step.step << "\n";
    for (const auto& c : step.report.conditions()) out << describe(c) << "\n";
  }
  for (const auto& w : sol.warnings) out << "warning: " << w << "\n";
  out << "verdict: " << romp::to_string(sol.verdict) << "\n";
  return out.str();
}

// Runs body and maps the library's exception kinds onto exit codes.
template <class F>
int guarded(const std::string& context, F&& body) {
  try {
    return body();
  } catch (const romp::io::SchemaError& e) {
    std::cerr << context << ": " << e.what() << "\n";
    return kSchema;
  } catch (const romp::MeasureError& e) {
    std::cerr << context << ": " << e.what() << "\n";
    return kMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << context << ": " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << context << ": " << e.what() << "\n";
    return kSchema;
  }
}

int run_generate(const std::string& measure_path, const std::string& pattern_path, const std::string& out_path) {
  return guarded("generate", [&] {
    const auto mu = romp::io::read_measure(romp::io::read_file(measure_path));
    const auto pattern = romp::io::read_pattern(romp::io::read_file(pattern_path));
    romp::io::write_file(out_path, romp::io::write_instance(romp::generate_instance(mu, pattern)));
    return int(kOk);
  });
}

int solve_one(const std::string& in, const std::string& out, romp::PairMode mode, std::string& log) {
  return guarded(in, [&] {
    const auto inst = romp::io::read_instance(romp::io::read_file(in));
    const auto sol = romp::solve_canonical(inst, mode);
    romp::io::write_file(out, romp::io::write_solution(sol));
    log = summarize(sol);
    return int(sol.verdict == romp::Verdict::subnormal ? kOk : kNegative);
  });
}

int run_solve(const std::vector<std::string>& inputs, const std::string& out_path, const std::string& out_dir,
              const std::string& mode_text, unsigned jobs) {
  romp::PairMode mode;
  try {
    mode = romp::parse_pair_mode(mode_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kSchema;
  }
  if (inputs.size() == 1 && !out_path.empty()) {
    std::string log;
    const int code = solve_one(inputs.front(), out_path, mode, log);
    std::cout << log;
    return code;
  }
  if (out_dir.empty()) {
    std::cerr << "solve: several instances need --out-dir instead of -o\n";
    return kSchema;
  }
  std::filesystem::create_directories(out_dir);

  std::vector<int> codes(inputs.size(), kOk);
  std::vector<std::string> logs(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const auto stem = std::filesystem::path(inputs[i]).stem().string();
      const auto out = (std::filesystem::path(out_dir) / (stem + ".solution.json")).string();
      codes[i] = solve_one(inputs[i], out, mode, logs[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::cout << "== " << inputs[i] << "\n" << logs[i];
  }
  return *std::max_element(codes.begin(), codes.end());
}

int run_verify(const std::string& instance_path, const std::string& solution_path, std::optional<unsigned> bound) {
  return guarded("verify", [&] {
    const auto inst = romp::io::read_instance(romp::io::read_file(instance_path));
    const auto sol = romp::io::read_solution(romp::io::read_file(solution_path));
    if (!sol.measure) {
      std::cout << "solution carries no measure (verdict " << romp::to_string(sol.verdict) << ")\n";
      return int(kNegative);
    }
    const auto report = romp::verify_solution(inst, *sol.measure, bound.value_or(romp::default_moment_bound(*sol.measure)));
    for (const auto& c : report.conditions()) std::cout << describe(c) << "\n";
    std::cout << (report.ok() ? "valid" : "invalid") << "\n";
    return int(report.ok() ? kOk : kNegative);
  });
}

std::string point_list(const std::vector<romp::LatticePoint>& points) {
  std::string out = "[";
  for (std::size_t i = 0; i < points.size(); ++i) out += (i ? "," : "") + romp::to_string(points[i]);
  return out + "]";
}

int run_classify(const std::string& pattern_path) {
  return guarded("classify", [&] {
    const auto pattern = romp::io::read_pattern(romp::io::read_file(pattern_path));
    std::cout << "foundation: " << point_list(pattern.foundation()) << "\n";
    std::cout << "staircase: " << point_list(romp::staircase(pattern).points()) << "\n";
    std::cout << "Type " << romp::to_string(romp::classify_type(pattern)) << "\n";
    return int(kOk);
  });
}

int run_moments(const std::string& measure_path, unsigned max1, unsigned max2, bool json) {
  return guarded("moments", [&] {
    const auto mu = romp::io::read_measure(romp::io::read_file(measure_path));
    const auto gamma = romp::gamma_from_measure(mu, max1, max2);
    if (json) {
      std::cout << romp::io::write_gamma_table(gamma);
      return int(kOk);
    }
    std::vector<std::vector<std::string>> cells(max1 + 1, std::vector<std::string>(max2 + 1, "0"));
    std::size_t width = 1;
    for (unsigned i = 0; i <= max1; ++i) {
      for (unsigned j = 0; j <= max2; ++j) {
        if (auto v = gamma.find({i, j})) cells[i][j] = romp::to_string(*v);
        width = std::max(width, cells[i][j].size());
      }
    }
    for (const auto& row : cells) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        std::cout << (j ? " " : "") << std::string(width - row[j].size(), ' ') << row[j];
      }
      std::cout << "\n";
    }
    return int(kOk);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct Berger measures of 2-variable weighted shifts from localized data"};
  app.require_subcommand(1);

  std::string measure_path, pattern_path, out_path;
  auto* generate = app.add_subcommand("generate", "Build an instance from a global measure and a pattern");
  generate->add_option("--measure", measure_path, "Measure document")->required();
  generate->add_option("--pattern", pattern_path, "Pattern document")->required();
  generate->add_option("-o,--output", out_path, "Instance document to write")->required();

  std::vector<std::string> instances;
  std::string out_dir;
  std::string mode = "consecutive";
  unsigned jobs = 1;
  auto* solve = app.add_subcommand("solve", "Reconstruct the measure of one or more instances");
  solve->add_option("instances", instances, "Instance documents")->required();
  solve->add_option("-o,--output", out_path, "Solution document (single instance)");
  solve->add_option("--out-dir", out_dir, "Directory for <stem>.solution.json (batch)");
  solve->add_option("--mode", mode, "consecutive | all-pairs | nondegenerate-pairs")
      ->check(CLI::IsMember({"consecutive", "all-pairs", "nondegenerate-pairs"}));
  solve->add_option("--jobs", jobs, "Parallel workers for batch solving")->check(CLI::PositiveNumber);

  std::string instance_path, solution_path;
  std::optional<unsigned> moment_bound;
  auto* verify = app.add_subcommand("verify", "Check a solution against its instance");
  verify->add_option("instance", instance_path, "Instance document")->required();
  verify->add_option("solution", solution_path, "Solution document")->required();
  verify->add_option("--moment-bound", moment_bound, "Largest moment index compared (default 2 x atom count)");

  auto* classify = app.add_subcommand("classify", "Print foundation, staircase and type of a pattern");
  classify->add_option("pattern", pattern_path, "Pattern document")->required();

  unsigned max1 = 0, max2 = 0;
  bool json = false;
  auto* moments = app.add_subcommand("moments", "Print the moment rectangle of a measure");
  moments->add_option("measure", measure_path, "Measure document")->required();
  moments->add_option("--max1", max1, "Largest first index")->required();
  moments->add_option("--max2", max2, "Largest second index")->required();
  moments->add_flag("--json", json, "Emit a gamma table document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kSchema;
  }

  if (*generate) return run_generate(measure_path, pattern_path, out_path);
  if (*solve) return run_solve(instances, out_path, out_dir, mode, jobs);
  if (*verify) return run_verify(instance_path, solution_path, moment_bound);
  if (*classify) return run_classify(pattern_path);
  if (*moments) return run_moments(measure_path, max1, max2, json);
  return kSchema;
}
