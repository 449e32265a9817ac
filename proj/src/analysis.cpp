#include "aspectke/analysis.hpp"

#include <algorithm>
#include <functional>

namespace aspectke {

namespace {

void add_location(const Location& l, ActionParts& parts) {
  if (l.is_variable()) parts.fv.insert(SetItem::variable(l.name()));
  if (l.is_constant()) parts.lc.insert(SetItem::constant(l.name()));
  if (l.is_binder()) parts.bv.insert(SetItem::variable(l.name()));
}

void merge(ItemSet& into, const ItemSet& from) { into.insert(from.begin(), from.end()); }

ItemSet minus(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Folds `per_branch(action, continuation_result)` over a process, taking
// unions across `|`, `*` and alternative branches.
ItemSet fold(const Process& p,
             const std::function<ItemSet(const Action&, ItemSet)>& per_branch) {
  if (p.is_nil()) return {};
  ItemSet out;
  switch (p.kind()) {
    case Process::Kind::Sum:
      for (const Branch& b : p.branches()) {
        merge(out, per_branch(b.action, fold(b.continuation, per_branch)));
      }
      break;
    case Process::Kind::Parallel:
      out = fold(p.left(), per_branch);
      merge(out, fold(p.right(), per_branch));
      break;
    case Process::Kind::Replicate:
      out = fold(p.body(), per_branch);
      break;
  }
  return out;
}

}  // namespace

ActionParts extract_action_parts(const Action& a) {
  ActionParts parts;
  parts.cap = a.capability;
  for (const Location& f : a.fields) add_location(f, parts);
  if (a.has_target()) {
    add_location(a.target, parts);
    parts.loc = a.target;
  }
  if (a.capability == Capability::Eval) {
    merge(parts.fv, fv_set(a.spawned));
    merge(parts.lc, lc_set(a.spawned));
  }
  return parts;
}

ItemSet act_set(const Process& p) {
  return fold(p, [](const Action& a, ItemSet rest) {
    rest.insert(SetItem::capability(a.capability));
    if (a.capability == Capability::Eval) merge(rest, act_set(a.spawned));
    return rest;
  });
}

ItemSet loc_set(Capability c, const Process& p) {
  return fold(p, [c](const Action& a, ItemSet rest) {
    if (a.capability == c && a.has_target()) {
      const Location& t = a.target;
      rest.insert(t.is_variable() ? SetItem::variable(t.name()) : SetItem::constant(t.name()));
    }
    if (a.capability == Capability::Eval) merge(rest, loc_set(c, a.spawned));
    return rest;
  });
}

ItemSet lc_set(const Process& p) {
  return fold(p, [](const Action& a, ItemSet rest) {
    merge(rest, extract_action_parts(a).lc);
    return rest;
  });
}

ItemSet lc_set(Capability c, const Process& p) {
  return fold(p, [c](const Action& a, ItemSet rest) {
    if (a.capability == c) {
      merge(rest, extract_action_parts(a).lc);
    } else if (a.capability == Capability::Eval) {
      merge(rest, lc_set(c, a.spawned));
    }
    return rest;
  });
}

ItemSet fv_set(const Process& p) {
  return fold(p, [](const Action& a, const ItemSet& rest) {
    ActionParts parts = extract_action_parts(a);
    ItemSet out = minus(rest, parts.bv);
    merge(out, parts.fv);
    return out;
  });
}

ItemSet fv_set(Capability c, const Process& p) {
  return fold(p, [c](const Action& a, const ItemSet& rest) {
    ActionParts parts = extract_action_parts(a);
    ItemSet out = minus(rest, parts.bv);
    if (a.capability == c) {
      merge(out, parts.fv);
    } else if (a.capability == Capability::Eval) {
      merge(out, fv_set(c, a.spawned));
    }
    return out;
  });
}

ItemSet analyze(AnalysisFunction f, std::optional<Capability> c, const Process& p) {
  auto need = [&]() {
    if (!c) throw std::invalid_argument(std::string(to_string(f)) + " needs a capability");
    return *c;
  };
  switch (f) {
    case AnalysisFunction::Act: return act_set(p);
    case AnalysisFunction::Loc: return loc_set(need(), p);
    case AnalysisFunction::LC: return lc_set(p);
    case AnalysisFunction::LCc: return lc_set(need(), p);
    case AnalysisFunction::FV: return fv_set(p);
    case AnalysisFunction::FVc: return fv_set(need(), p);
  }
  return {};
}

SetItem resolve(const Location& loc, const Environment& env) {
  switch (loc.kind()) {
    case Location::Kind::Constant:
      return SetItem::constant(loc.name());
    case Location::Kind::DontCare:
      return SetItem::constant("_");
    case Location::Kind::Variable:
    case Location::Kind::Binder:
      break;
  }
  if (auto q = env.quantified.find(loc.name()); q != env.quantified.end()) return q->second;
  auto it = env.subst.locations.find(loc.name());
  if (it == env.subst.locations.end()) {
    throw EvaluationError(EvaluationError::Kind::UnboundVariable,
                          "unbound variable " + loc.name());
  }
  const Location& v = it->second;
  return v.is_variable() ? SetItem::variable(v.name()) : SetItem::constant(v.name());
}

SetValue eval_set_expr(const SetExpr& e, const Environment& env) {
  switch (e.kind()) {
    case SetExpr::Kind::Literal: {
      SetValue v;
      for (const SetItem& i : e.items()) {
        v.items.insert(i.kind == SetItem::Kind::Variable ? resolve(Location::variable(i.name), env)
                                                         : i);
      }
      return v;
    }
    case SetExpr::Kind::Union: {
      SetValue a = eval_set_expr(e.lhs(), env);
      SetValue b = eval_set_expr(e.rhs(), env);
      a.all_variables = a.all_variables || b.all_variables;
      merge(a.items, b.items);
      return a;
    }
    case SetExpr::Kind::Intersect: {
      SetValue a = eval_set_expr(e.lhs(), env);
      SetValue b = eval_set_expr(e.rhs(), env);
      SetValue out;
      out.all_variables = a.all_variables && b.all_variables;
      std::set_intersection(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                            std::inserter(out.items, out.items.end()));
      auto keep_variables = [&out](const SetValue& wide, const SetValue& other) {
        if (!wide.all_variables) return;
        for (const SetItem& i : other.items) {
          if (i.kind == SetItem::Kind::Variable) out.items.insert(i);
        }
      };
      keep_variables(a, b);
      keep_variables(b, a);
      return out;
    }
    case SetExpr::Kind::Analysis: {
      auto it = env.subst.processes.find(e.process_var());
      if (it == env.subst.processes.end()) {
        throw EvaluationError(EvaluationError::Kind::UnboundVariable,
                              "unbound process variable " + e.process_var());
      }
      return SetValue{false, analyze(e.function(), e.capability(), it->second)};
    }
    case SetExpr::Kind::AllVariables:
      return SetValue{true, {}};
  }
  return {};
}

const ItemSet& enumerate(const SetValue& v, std::string_view context) {
  if (v.all_variables) {
    throw EvaluationError(EvaluationError::Kind::UnsupportedUniverse,
                          "LVar* cannot be enumerated in " + std::string(context));
  }
  return v.items;
}

bool contains(const SetValue& v, const SetItem& item) {
  if (v.all_variables) {
    if (item.kind == SetItem::Kind::Variable) return true;
    if (item.kind == SetItem::Kind::Capability) {
      throw EvaluationError(EvaluationError::Kind::UnsupportedUniverse,
                            "capability membership in LVar*");
    }
  }
  return v.items.count(item) > 0;
}

}  // namespace aspectke
