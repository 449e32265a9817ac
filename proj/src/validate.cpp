#include "aspectke/validate.hpp"

#include <set>

#include "aspectke/printer.hpp"

namespace aspectke {

namespace {

using Scope = std::set<std::string>;

struct NetChecker {
  const std::string& node;
  std::vector<Violation>& out;

  void report(std::string rule, const Action& a, const std::string& name = {}) {
    std::string detail = name.empty() ? to_string(a) : name + " in " + to_string(a);
    out.push_back({std::move(rule), node, std::move(detail), {}});
  }

  void check_location_use(const Location& l, const Action& a, const Scope& scope) {
    if (l.is_variable() && !scope.count(l.name())) report("free variable", a, l.name());
  }

  void check_action(const Action& a, const Scope& scope) {
    std::set<std::string> binders;
    std::set<std::string> uses;
    for (const Location& f : a.fields) {
      if (f.is_dont_care()) report("wildcard in program action", a);
      if (f.is_binder()) {
        if (a.capability == Capability::Out) report("binder in out", a);
        if (!binders.insert(f.name()).second) report("duplicate binder", a, f.name());
      }
      if (f.is_variable()) uses.insert(f.name());
    }
    if (a.capability == Capability::Newloc) {
      if (a.fields.size() != 1 || !a.fields.front().is_binder()) {
        report("newloc takes one binder", a);
      }
    } else {
      if (a.target.is_dont_care()) report("wildcard in program action", a);
      if (a.target.is_binder()) report("binder as target", a);
      if (a.target.is_variable()) uses.insert(a.target.name());
    }
    if (a.capability != Capability::Newloc && a.capability != Capability::Eval &&
        a.fields.empty()) {
      report("empty parameter list", a);
    }
    for (const std::string& b : binders) {
      if (uses.count(b)) report("binder also used free", a, b);
    }
    for (const Location& f : a.fields) check_location_use(f, a, scope);
    if (a.has_target()) check_location_use(a.target, a, scope);
    if (a.capability == Capability::Eval) check_process(a.spawned, scope);
  }

  void check_process(const Process& p, const Scope& scope) {
    if (p.is_nil()) return;
    switch (p.kind()) {
      case Process::Kind::Sum:
        for (const Branch& b : p.branches()) {
          check_action(b.action, scope);
          Scope inner = scope;
          for (const Location& f : b.action.fields) {
            if (f.is_binder()) inner.insert(f.name());
          }
          check_process(b.continuation, inner);
        }
        break;
      case Process::Kind::Parallel:
        check_process(p.left(), scope);
        check_process(p.right(), scope);
        break;
      case Process::Kind::Replicate:
        check_process(p.body(), scope);
        break;
    }
  }
};

struct AspectChecker {
  const Aspect& aspect;
  std::vector<Violation>& out;
  std::set<std::string> plain;   // cut variables matched against constants
  std::set<std::string> banged;  // cut binders
  std::set<std::string> procs;   // Y and X

  void report(std::string rule, std::string detail) {
    out.push_back({std::move(rule), aspect.name, std::move(detail), aspect.span});
  }

  // `allow_banged` holds inside set expressions and membership tests.
  void check_loc(const Location& l, const Scope& quantified, bool allow_banged,
                 const std::string& where) {
    if (!l.is_variable()) {
      if (l.is_binder()) report("binder in condition", where);
      return;
    }
    const std::string& n = l.name();
    if (quantified.count(n) || plain.count(n)) return;
    if (banged.count(n)) {
      if (!allow_banged) report("banged variable used outside set expression", n + " in " + where);
      return;
    }
    report("unbound variable", n + " in " + where);
  }

  void check_set(const SetExpr& s, const Scope& quantified) {
    switch (s.kind()) {
      case SetExpr::Kind::Literal:
        for (const SetItem& i : s.items()) {
          if (i.kind == SetItem::Kind::Variable) {
            check_loc(Location::variable(i.name), quantified, true, to_string(s));
          }
        }
        break;
      case SetExpr::Kind::Intersect:
      case SetExpr::Kind::Union:
        check_set(s.lhs(), quantified);
        check_set(s.rhs(), quantified);
        break;
      case SetExpr::Kind::Analysis:
        if (!procs.count(s.process_var())) {
          report("unbound process variable", s.process_var() + " in " + to_string(s));
        }
        if (takes_capability(s.function()) != s.capability().has_value()) {
          report("analysis capability mismatch", to_string(s));
        }
        break;
      case SetExpr::Kind::AllVariables:
        break;
    }
  }

  void check_cond(const Condition& c, const Scope& quantified) {
    switch (c.kind()) {
      case Condition::Kind::Equal:
        check_loc(c.lhs_loc(), quantified, false, to_string(c));
        check_loc(c.rhs_loc(), quantified, false, to_string(c));
        break;
      case Condition::Kind::Test:
        for (const Location& f : c.fields()) check_loc(f, quantified, false, to_string(c));
        check_loc(c.target(), quantified, false, to_string(c));
        break;
      case Condition::Kind::And:
      case Condition::Kind::Or:
        check_cond(c.lhs(), quantified);
        check_cond(c.rhs(), quantified);
        break;
      case Condition::Kind::Not:
        check_cond(c.body(), quantified);
        break;
      case Condition::Kind::Exists:
      case Condition::Kind::Forall: {
        check_set(c.set(), quantified);
        if (plain.count(c.var()) || banged.count(c.var()) || procs.count(c.var())) {
          report("quantifier shadows cut variable", c.var());
        }
        Scope inner = quantified;
        inner.insert(c.var());
        check_cond(c.body(), inner);
        break;
      }
      case Condition::Kind::CapIn:
      case Condition::Kind::IsEmpty:
        check_set(c.set(), quantified);
        break;
      case Condition::Kind::LocIn:
        check_loc(c.lhs_loc(), quantified, true, to_string(c));
        check_set(c.set(), quantified);
        break;
    }
  }

  void run() {
    const Cut& cut = aspect.cut;
    std::set<std::string> seen;
    for (const std::string& v : cut_variables(cut)) {
      if (!seen.insert(v).second) report("duplicate cut variable", v);
    }
    auto classify = [&](const Location& l) {
      if (l.is_variable()) plain.insert(l.name());
      if (l.is_binder()) banged.insert(l.name());
    };
    if (cut.source.is_binder()) report("binder as cut source", to_string(cut));
    classify(cut.source);
    for (const Location& f : cut.fields) classify(f);
    switch (cut.capability) {
      case Capability::Newloc:
        if (cut.fields.size() != 1 ||
            !(cut.fields.front().is_binder() || cut.fields.front().is_dont_care())) {
          report("newloc cut takes one binder or _", to_string(cut));
        }
        break;
      case Capability::Eval:
        if (cut.spawned_var.empty()) report("eval cut needs a process variable", to_string(cut));
        procs.insert(cut.spawned_var);
        [[fallthrough]];
      default:
        if (cut.target.is_binder()) report("binder as target", to_string(cut));
        classify(cut.target);
    }
    if (cut.capability == Capability::Out) {
      for (const Location& f : cut.fields) {
        if (f.is_binder()) report("binder in out", to_string(cut));
      }
    }
    if (cut.continuation_var) procs.insert(*cut.continuation_var);
    for (const AdviceCase& c : aspect.body.cases) check_cond(c.condition, {});
  }
};

}  // namespace

std::vector<Violation> validate_net(const Net& net) {
  std::vector<Violation> out;
  for (const LocatedItem& item : net.items) {
    if (item.is_tuple()) {
      if (item.as_tuple().fields.empty()) {
        out.push_back({"empty tuple", item.node, to_string(item), {}});
      }
      continue;
    }
    NetChecker{item.node, out}.check_process(item.as_process(), {});
  }
  return out;
}

std::vector<Violation> validate_aspect(const Aspect& aspect) {
  std::vector<Violation> out;
  AspectChecker{aspect, out, {}, {}, {}}.run();
  return out;
}

std::vector<Violation> validate_system(const SystemState& state) {
  std::vector<Violation> out;
  for (const Aspect& a : state.aspects) {
    auto v = validate_aspect(a);
    out.insert(out.end(), v.begin(), v.end());
  }
  auto v = validate_net(state.net);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace aspectke
