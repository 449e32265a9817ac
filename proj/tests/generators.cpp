#include "generators.hpp"

#include "aspectke/process.hpp"

namespace aspectke::testing {

Location TermGen::use_loc(const std::vector<std::string>& scope) {
  if (!scope.empty() && chance(0.4)) return Location::variable(scope[pick(scope.size())]);
  if (chance(0.3)) return Location::constant(kNodes[pick(kNodes.size())]);
  return Location::constant(kData[pick(kData.size())]);
}

Location TermGen::node_loc(const std::vector<std::string>& scope) {
  if (!scope.empty() && chance(0.2)) return Location::variable(scope[pick(scope.size())]);
  return Location::constant(kNodes[pick(kNodes.size())]);
}

Action TermGen::action(int depth, const std::vector<std::string>& scope) {
  std::size_t arity = 1 + pick(3);
  switch (pick(depth > 0 ? 10 : 9)) {
    case 0: case 1: case 2: {
      std::vector<Location> args;
      for (std::size_t i = 0; i < arity; ++i) args.push_back(use_loc(scope));
      return Action::out(std::move(args), node_loc(scope));
    }
    case 3: case 4: case 5: case 6: case 7: {
      std::vector<Location> templ;
      for (std::size_t i = 0; i < arity; ++i) {
        templ.push_back(chance(0.4) ? Location::binder(fresh()) : use_loc(scope));
      }
      return pick(2) == 0 ? Action::in(std::move(templ), node_loc(scope))
                          : Action::read(std::move(templ), node_loc(scope));
    }
    case 8:
      return Action::newloc(fresh());
    default:
      return Action::eval(process(depth - 1, scope), node_loc(scope));
  }
}

Process TermGen::process(int depth, std::vector<std::string> scope) {
  std::size_t roll = pick(20);
  if (depth <= 0 || roll < 2) return Process::nil();
  if (roll < 4) return Process::parallel(process(depth - 1, scope), process(depth - 1, scope));
  if (roll < 5) return Process::replicate(process(depth - 1, scope));
  std::size_t branches = roll < 7 ? 2 : 1;
  std::vector<Branch> bs;
  for (std::size_t b = 0; b < branches; ++b) {
    Action a = action(depth - 1, scope);
    std::vector<std::string> inner = scope;
    for (const auto& f : a.fields) {
      if (f.is_binder()) inner.push_back(f.name());
    }
    bs.push_back({std::move(a), process(depth - 1, std::move(inner))});
  }
  return Process::sum(std::move(bs));
}

Tuple TermGen::tuple() {
  Tuple t;
  std::size_t arity = 1 + pick(3);
  for (std::size_t i = 0; i < arity; ++i) t.fields.push_back(kData[pick(kData.size())]);
  return t;
}

Net TermGen::net(int processes, int tuples) {
  Net n;
  for (int i = 0; i < processes; ++i) {
    n.items.push_back(LocatedItem::process(kNodes[pick(kNodes.size())], process(4)));
  }
  for (int i = 0; i < tuples; ++i) {
    n.items.push_back(LocatedItem::tuple(kNodes[pick(kNodes.size())], tuple()));
  }
  return n;
}

Cut TermGen::cut(const JoinPoint* jp) {
  Cut c;
  bool follow = jp && chance(0.8);
  c.capability = follow ? jp->action.capability : kAllCapabilities[pick(kAllCapabilities.size())];

  auto constant_like = [&](const Location* hint) {
    if (hint && hint->is_constant() && chance(0.7)) return *hint;
    return Location::constant(chance(0.5) ? kNodes[pick(3)] : kData[pick(3)]);
  };
  auto pattern = [&](const std::string& var, const Location* hint, bool allow_binder) {
    std::size_t roll = pick(10);
    if (allow_binder && hint && hint->is_binder() && roll < 6) return Location::binder(var);
    if (roll < 4) return Location::dont_care();
    if (roll < 7) return Location::variable(var);
    if (allow_binder && roll == 9) return Location::binder(var);
    return constant_like(hint);
  };

  Location src_hint = follow ? Location::constant(jp->node) : Location::dont_care();
  std::size_t roll = pick(3);
  c.source = roll == 0 ? Location::dont_care()
           : roll == 1 ? Location::variable("s")
                       : constant_like(follow ? &src_hint : nullptr);

  bool match_arity = follow && jp->action.capability == c.capability;
  switch (c.capability) {
    case Capability::Newloc:
      c.fields.push_back(chance(0.5) ? Location::binder("g0") : Location::dont_care());
      break;
    case Capability::Eval:
      c.spawned_var = "Y";
      break;
    default: {
      std::size_t arity = match_arity ? jp->action.fields.size() : 1 + pick(3);
      bool binders_ok = c.capability != Capability::Out;
      for (std::size_t i = 0; i < arity; ++i) {
        const Location* hint = match_arity ? &jp->action.fields[i] : nullptr;
        c.fields.push_back(pattern("f" + std::to_string(i), hint, binders_ok));
      }
    }
  }
  if (c.capability != Capability::Newloc) {
    const Location* hint = match_arity ? &jp->action.target : nullptr;
    Location t = pattern("t", hint, false);
    c.target = t;
  }
  if (chance(0.5)) c.continuation_var = "X";
  return c;
}

Location TermGen::cond_loc(const std::vector<std::string>& vars, bool allow_wild) {
  std::size_t roll = pick(10);
  if (allow_wild && roll == 0) return Location::dont_care();
  if (!vars.empty() && roll < 6) return Location::variable(vars[pick(vars.size())]);
  return Location::constant(chance(0.5) ? kNodes[pick(3)] : kData[pick(3)]);
}

SetExpr TermGen::finite_set(int depth, const std::vector<std::string>& vars,
                            const std::vector<std::string>& proc_vars) {
  std::size_t roll = pick(depth > 0 ? 10 : 6);
  if (roll < 3 || (roll < 6 && proc_vars.empty())) {
    std::vector<SetItem> items;
    std::size_t n = 1 + pick(3);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = pick(10);
      if (k < 2) items.push_back(SetItem::capability(kAllCapabilities[pick(5)]));
      else if (k < 5 && !vars.empty()) items.push_back(SetItem::variable(vars[pick(vars.size())]));
      else items.push_back(SetItem::constant(chance(0.5) ? kNodes[pick(3)] : kData[pick(3)]));
    }
    return SetExpr::literal(std::move(items));
  }
  if (roll < 6) {
    auto f = static_cast<AnalysisFunction>(pick(6));
    std::optional<Capability> cap;
    if (takes_capability(f)) cap = kAllCapabilities[pick(5)];
    return SetExpr::analysis(f, cap, proc_vars[pick(proc_vars.size())]);
  }
  if (roll < 8) return SetExpr::unite(finite_set(depth - 1, vars, proc_vars),
                                      finite_set(depth - 1, vars, proc_vars));
  if (roll < 9) return SetExpr::intersect(finite_set(depth - 1, vars, proc_vars),
                                          finite_set(depth - 1, vars, proc_vars));
  return SetExpr::intersect(
      SetExpr::unite(SetExpr::all_variables(), finite_set(0, vars, proc_vars)),
      finite_set(depth - 1, vars, proc_vars));
}

Condition TermGen::condition(int depth, std::vector<std::string>& vars,
                             const std::vector<std::string>& proc_vars) {
  std::size_t roll = pick(depth > 0 ? 12 : 6);
  switch (roll) {
    case 0:
      return Condition::equal(cond_loc(vars, true), cond_loc(vars, true));
    case 1: case 2: case 3: {
      std::vector<Location> fields;
      std::size_t n = 1 + pick(3);
      for (std::size_t i = 0; i < n; ++i) fields.push_back(cond_loc(vars, true));
      Location target = chance(0.15) ? Location::dont_care()
                                     : Location::constant(kNodes[pick(3)]);
      return Condition::test(std::move(fields), target);
    }
    case 4:
      return Condition::cap_in(kAllCapabilities[pick(5)], finite_set(1, vars, proc_vars));
    case 5:
      return pick(2) ? Condition::loc_in(cond_loc(vars, false), finite_set(1, vars, proc_vars))
                     : Condition::is_empty(finite_set(2, vars, proc_vars));
    case 6: case 7:
      return Condition::conj(condition(depth - 1, vars, proc_vars),
                             condition(depth - 1, vars, proc_vars));
    case 8:
      return Condition::disj(condition(depth - 1, vars, proc_vars),
                             condition(depth - 1, vars, proc_vars));
    case 9:
      return Condition::negate(condition(depth - 1, vars, proc_vars));
    default: {
      std::string q = "q" + std::to_string(quant_counter_++);
      SetExpr domain = finite_set(1, vars, proc_vars);
      vars.push_back(q);
      Condition body = condition(depth - 1, vars, proc_vars);
      vars.pop_back();
      return roll == 10 ? Condition::exists(q, domain, body) : Condition::forall(q, domain, body);
    }
  }
}

Aspect TermGen::aspect(const std::string& name, const JoinPoint* jp) {
  Aspect a;
  a.name = name;
  a.cut = cut(jp);
  std::vector<std::string> vars;
  std::vector<std::string> procs;
  auto plain = [&](const Location& l) {
    if (l.is_variable()) vars.push_back(l.name());
  };
  plain(a.cut.source);
  for (const auto& f : a.cut.fields) plain(f);
  plain(a.cut.target);
  if (!a.cut.spawned_var.empty()) procs.push_back(a.cut.spawned_var);
  if (a.cut.continuation_var) procs.push_back(*a.cut.continuation_var);

  quant_counter_ = 0;
  std::size_t cases = pick(4);
  for (std::size_t i = 0; i < cases; ++i) {
    a.body.cases.push_back({condition(3, vars, procs),
                            chance(0.5) ? Suggestion::Break : Suggestion::Proceed});
  }
  a.body.fallback = chance(0.5) ? Suggestion::Break : Suggestion::Proceed;
  return a;
}

SystemState TermGen::system(int aspects) {
  SystemState s;
  for (int i = 0; i < aspects; ++i) s.aspects.push_back(aspect("G" + std::to_string(i)));
  s.net = net(1 + static_cast<int>(pick(3)), static_cast<int>(pick(5)));
  return s;
}

std::optional<JoinPoint> some_join_point(TermGen& g, const Net& net) {
  std::vector<JoinPoint> jps;
  for (const auto& item : lift_to_net(net).items) {
    if (!item.is_process()) continue;
    for (const Process& piece : parallel_components(item.as_process())) {
      if (piece.kind() != Process::Kind::Sum) continue;
      for (const auto& b : piece.branches()) jps.push_back(join_point_of(item.node, b));
    }
  }
  if (jps.empty()) return std::nullopt;
  return jps[g.pick(jps.size())];
}

}  // namespace aspectke::testing
