#include "romp/report.hpp"

#include <algorithm>

namespace romp {

std::string to_string(Status status) {
  switch (status) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

void ConditionReport::holds(std::string id, std::optional<bool> equality) {
  conditions_.push_back({std::move(id), Status::holds, equality, std::nullopt});
}

void ConditionReport::fails(std::string id, Witness witness) {
  conditions_.push_back({std::move(id), Status::fails, std::nullopt, std::move(witness)});
}

void ConditionReport::not_applicable(std::string id) {
  conditions_.push_back({std::move(id), Status::not_applicable, std::nullopt, std::nullopt});
}

bool ConditionReport::ok() const {
  return std::none_of(conditions_.begin(), conditions_.end(), [](const Condition& c) { return c.status == Status::fails; });
}

const Condition* ConditionReport::first_failure() const {
  for (const auto& c : conditions_) {
    if (c.status == Status::fails) return &c;
  }
  return nullptr;
}

const Condition* ConditionReport::find(const std::string& id) const {
  for (const auto& c : conditions_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace romp
