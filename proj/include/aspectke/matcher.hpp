#pragma once

#include <optional>
#include <span>
#include <string>

#include "aspectke/aspect.hpp"

namespace aspectke {

/// One Sum branch of a located process, about to fire.
struct JoinPoint {
  std::string node;
  Action action;
  Process continuation;
};

// nullopt is NoMatch.
using MatchResult = std::optional<Substitution>;

JoinPoint join_point_of(const std::string& node, const Branch& branch);

// Positional, strict arity. Binders bind, constants must be equal, `_`
// matches any field, variables never match.
MatchResult match_template(std::span<const Location> templ, const Tuple& tuple);

MatchResult match_cut(const Cut& cut, const JoinPoint& jp);

}  // namespace aspectke
