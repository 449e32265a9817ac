#include "aspectke/matcher.hpp"

namespace aspectke {

JoinPoint join_point_of(const std::string& node, const Branch& branch) {
  return JoinPoint{node, branch.action, branch.continuation};
}

MatchResult match_template(std::span<const Location> templ, const Tuple& tuple) {
  if (templ.size() != tuple.fields.size()) return std::nullopt;
  Substitution theta;
  for (std::size_t i = 0; i < templ.size(); ++i) {
    const Location& p = templ[i];
    const std::string& value = tuple.fields[i];
    switch (p.kind()) {
      case Location::Kind::Binder:
        theta.locations.insert_or_assign(p.name(), Location::constant(value));
        break;
      case Location::Kind::Constant:
        if (p.name() != value) return std::nullopt;
        break;
      case Location::Kind::DontCare:
        break;
      case Location::Kind::Variable:
        return std::nullopt;
    }
  }
  return theta;
}

namespace {

bool bind(Substitution& theta, const std::string& var, const Location& value) {
  auto [it, inserted] = theta.locations.emplace(var, value);
  return inserted || it->second == value;
}

bool match_location(const Location& pattern, const Location& actual, Substitution& theta) {
  switch (pattern.kind()) {
    case Location::Kind::DontCare:
      return true;
    case Location::Kind::Constant:
      return actual.is_constant() && actual.name() == pattern.name();
    case Location::Kind::Variable:
      return actual.is_constant() && bind(theta, pattern.name(), actual);
    case Location::Kind::Binder:
      return actual.is_binder() &&
             bind(theta, pattern.name(), Location::variable(actual.name()));
  }
  return false;
}

bool bind_process(Substitution& theta, const std::string& var, const Process& p) {
  auto [it, inserted] = theta.processes.emplace(var, p);
  return inserted || it->second == p;
}

}  // namespace

MatchResult match_cut(const Cut& cut, const JoinPoint& jp) {
  const Action& a = jp.action;
  if (cut.capability != a.capability) return std::nullopt;
  Substitution theta;
  if (!match_location(cut.source, Location::constant(jp.node), theta)) return std::nullopt;
  if (cut.fields.size() != a.fields.size()) return std::nullopt;
  for (std::size_t i = 0; i < cut.fields.size(); ++i) {
    if (!match_location(cut.fields[i], a.fields[i], theta)) return std::nullopt;
  }
  if (a.has_target() && !match_location(cut.target, a.target, theta)) return std::nullopt;
  if (a.capability == Capability::Eval && !bind_process(theta, cut.spawned_var, a.spawned)) {
    return std::nullopt;
  }
  if (cut.continuation_var && !bind_process(theta, *cut.continuation_var, jp.continuation)) {
    return std::nullopt;
  }
  return theta;
}

}  // namespace aspectke
