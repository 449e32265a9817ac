#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aspectke/analysis.hpp"
#include "aspectke/matcher.hpp"

namespace aspectke {

enum class Decision { Allow, Deny };

struct AspectReport {
  std::string name;
  bool matched = false;
  std::optional<Suggestion> suggestion;
  std::optional<std::size_t> case_index;  // nullopt: the default fired

  friend bool operator==(const AspectReport&, const AspectReport&) = default;
};

struct Verdict {
  Decision decision = Decision::Allow;
  std::vector<AspectReport> reports;  // one per aspect, in list order
};

// Read-only against `net`. Throws EvaluationError.
bool evaluate_condition(const Condition& c, const Environment& env, const Net& net);

// Full report for one aspect; `suggestion` is empty when the cut misses.
AspectReport advise_report(const Aspect& a, const JoinPoint& jp, const Net& net);

// nullopt when the aspect does not apply.
std::optional<Suggestion> advise(const Aspect& a, const JoinPoint& jp, const Net& net);

// Deny iff some applicable aspect breaks.
Verdict phi(const std::vector<Aspect>& aspects, const JoinPoint& jp, const Net& net);

}  // namespace aspectke
