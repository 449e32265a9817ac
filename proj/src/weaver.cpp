#include "aspectke/weaver.hpp"

namespace aspectke {

namespace {

bool same_value(const SetItem& a, const SetItem& b) {
  bool a_var = a.kind == SetItem::Kind::Variable;
  bool b_var = b.kind == SetItem::Kind::Variable;
  return a_var == b_var && a.name == b.name;
}

bool field_matches(const std::optional<SetItem>& pattern, const std::string& value) {
  if (!pattern) return true;
  return pattern->kind != SetItem::Kind::Variable && pattern->name == value;
}

bool test_tuple(const Condition& c, const Environment& env, const Net& net) {
  std::vector<std::optional<SetItem>> fields;
  for (const Location& f : c.fields()) {
    fields.push_back(f.is_dont_care() ? std::nullopt : std::optional(resolve(f, env)));
  }
  std::optional<SetItem> where;
  if (!c.target().is_dont_care()) {
    where = resolve(c.target(), env);
    if (where->kind != SetItem::Kind::Constant) return false;
  }
  for (const LocatedItem& item : net.items) {
    if (!item.is_tuple() || (where && item.node != where->name)) continue;
    const Tuple& t = item.as_tuple();
    if (t.fields.size() != fields.size()) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = field_matches(fields[i], t.fields[i]);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool evaluate_condition(const Condition& c, const Environment& env, const Net& net) {
  switch (c.kind()) {
    case Condition::Kind::Equal:
      if (c.lhs_loc().is_dont_care() || c.rhs_loc().is_dont_care()) return true;
      return same_value(resolve(c.lhs_loc(), env), resolve(c.rhs_loc(), env));
    case Condition::Kind::And:
      return evaluate_condition(c.lhs(), env, net) && evaluate_condition(c.rhs(), env, net);
    case Condition::Kind::Or:
      return evaluate_condition(c.lhs(), env, net) || evaluate_condition(c.rhs(), env, net);
    case Condition::Kind::Not:
      return !evaluate_condition(c.body(), env, net);
    case Condition::Kind::Test:
      return test_tuple(c, env, net);
    case Condition::Kind::Exists:
    case Condition::Kind::Forall: {
      SetValue domain = eval_set_expr(c.set(), env);
      bool exists = c.kind() == Condition::Kind::Exists;
      Environment inner = env;
      for (const SetItem& item : enumerate(domain, "a quantifier domain")) {
        inner.quantified.insert_or_assign(c.var(), item);
        if (evaluate_condition(c.body(), inner, net) == exists) return exists;
      }
      return !exists;
    }
    case Condition::Kind::CapIn:
      return contains(eval_set_expr(c.set(), env), SetItem::capability(c.capability()));
    case Condition::Kind::LocIn:
      return contains(eval_set_expr(c.set(), env), resolve(c.lhs_loc(), env));
    case Condition::Kind::IsEmpty:
      return enumerate(eval_set_expr(c.set(), env), "an emptiness test").empty();
  }
  return false;
}

AspectReport advise_report(const Aspect& a, const JoinPoint& jp, const Net& net) {
  AspectReport report{a.name, false, std::nullopt, std::nullopt};
  MatchResult theta = match_cut(a.cut, jp);
  if (!theta) return report;
  report.matched = true;
  Environment env{std::move(*theta), {}};
  const auto& cases = a.body.cases;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (evaluate_condition(cases[i].condition, env, net)) {
      report.suggestion = cases[i].suggestion;
      report.case_index = i;
      return report;
    }
  }
  report.suggestion = a.body.fallback;
  return report;
}

std::optional<Suggestion> advise(const Aspect& a, const JoinPoint& jp, const Net& net) {
  return advise_report(a, jp, net).suggestion;
}

Verdict phi(const std::vector<Aspect>& aspects, const JoinPoint& jp, const Net& net) {
  Verdict v;
  for (const Aspect& a : aspects) {
    v.reports.push_back(advise_report(a, jp, net));
    if (v.reports.back().suggestion == Suggestion::Break) v.decision = Decision::Deny;
  }
  return v;
}

}  // namespace aspectke
