#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aspectke/weaver.hpp"

namespace aspectke {

struct StepCandidate {
  std::size_t item = 0;
  std::size_t branch = 0;
  std::optional<std::size_t> tuple;  // in/read: the matching tuple
  bool unfold = false;               // replicated item

  friend bool operator==(const StepCandidate&, const StepCandidate&) = default;
};

struct TraceEvent {
  enum class Effect { Executed, Denied, Unfolded };

  std::size_t step = 0;
  std::string node;
  std::string action;  // printed as written at the join point
  Capability capability = Capability::Out;
  Verdict verdict;
  Effect effect = Effect::Executed;
  std::map<std::string, Location> bindings;
};

enum class HaltReason { Quiescent, StepBudget };

struct RunResult {
  SystemState final_state;
  std::vector<TraceEvent> trace;
  HaltReason halt = HaltReason::Quiescent;

  const Net& final_net() const { return final_state.net; }
};

inline constexpr std::size_t kDefaultMaxSteps = 10000;

// Ordered by item, then branch, then tuple position. Expects a lifted net.
std::vector<StepCandidate> enabled_candidates(const SystemState& state);

// Mints `loc$N` absent from the net and the aspects; bumps the counter.
std::string fresh_location(SystemState& state);

// Applies one candidate in place; `step` is recorded in the event.
TraceEvent execute_in_place(SystemState& state, const StepCandidate& cand, std::size_t step = 1);

std::pair<SystemState, TraceEvent> execute(SystemState state, const StepCandidate& cand);

RunResult run(SystemState state, std::uint64_t seed, std::size_t max_steps = kDefaultMaxSteps);

std::string format_trace_event(const TraceEvent& e);

// Items sorted by node, processes before tuples, then by text.
std::string format_net(const Net& net);

std::string to_string(HaltReason h);

}  // namespace aspectke
