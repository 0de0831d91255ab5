#pragma once

#include <optional>
#include <string>
#include <vector>

#include "romp/rational.hpp"

namespace romp {

enum class Status { holds, fails, not_applicable };

std::string to_string(Status status);

/// Evidence attached to a condition: the location of the offending atom (one
/// or two coordinates, possibly with its mass) and/or the compared
/// quantities, left-hand side first.
struct Witness {
  std::vector<Rational> point;
  std::optional<Rational> mass;
  std::vector<Rational> values;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Condition {
  std::string id;
  Status status = Status::not_applicable;
  /// For inequalities that hold: whether they hold with equality.
  std::optional<bool> equality;
  std::optional<Witness> witness;

  friend bool operator==(const Condition&, const Condition&) = default;
};

class ConditionReport {
 public:
  void holds(std::string id, std::optional<bool> equality = std::nullopt);
  void fails(std::string id, Witness witness);
  void not_applicable(std::string id);
  void add(Condition c) { conditions_.push_back(std::move(c)); }

  /// True when every applicable condition holds.
  bool ok() const;
  const Condition* first_failure() const;
  const Condition* find(const std::string& id) const;
  const std::vector<Condition>& conditions() const { return conditions_; }

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;

 private:
  std::vector<Condition> conditions_;
};

}  // namespace romp
