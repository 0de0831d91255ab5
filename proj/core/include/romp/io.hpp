#pragma once

// Structured-text (JSON) documents. Every document carries
// "format_version": 1 and stores rationals as "p/q" strings, never floats.
// Readers canonicalize what they load (measures are merged and sorted,
// patterns reduced to their foundation), so write(read(x)) is stable.

#include <stdexcept>
#include <string>
#include <string_view>

#include "romp/lattice.hpp"
#include "romp/measures.hpp"
#include "romp/moments.hpp"
#include "romp/solver.hpp"

namespace romp::io {

inline constexpr int kFormatVersion = 1;

/// Malformed document: bad JSON, wrong field type, malformed rational, ...
/// The message names the offending field path.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string write_measure(const Measure2& m);
Measure2 read_measure(std::string_view text);

std::string write_pattern(const Pattern& p);
Pattern read_pattern(std::string_view text);

std::string write_instance(const RompInstance& inst);
RompInstance read_instance(std::string_view text);

std::string write_solution(const RompSolution& sol);
RompSolution read_solution(std::string_view text);

/// {"format_version", "max1", "max2", "values": [[gamma(0,0), gamma(0,1), ...], ...]}
/// with rows indexed by k1; missing entries are null.
std::string write_gamma_table(const GammaTable& g);
GammaTable read_gamma_table(std::string_view text);

/// {"format_version", "max1", "max2", "alpha_sq": [[...]], "beta_sq": [[...]]}.
std::string write_weight_diagram(const WeightDiagram& w);
WeightDiagram read_weight_diagram(std::string_view text);

/// Throws SchemaError when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace romp::io
