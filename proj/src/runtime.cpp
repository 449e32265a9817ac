#include "aspectke/runtime.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "aspectke/printer.hpp"

namespace aspectke {

namespace {

void names_in(const Location& l, std::set<std::string>& out) {
  if (!l.is_dont_care()) out.insert(l.name());
}

void names_in(const Process& p, std::set<std::string>& out) {
  if (p.is_nil()) return;
  switch (p.kind()) {
    case Process::Kind::Sum:
      for (const Branch& b : p.branches()) {
        for (const Location& f : b.action.fields) names_in(f, out);
        if (b.action.has_target()) names_in(b.action.target, out);
        if (b.action.capability == Capability::Eval) names_in(b.action.spawned, out);
        names_in(b.continuation, out);
      }
      break;
    case Process::Kind::Parallel:
      names_in(p.left(), out);
      names_in(p.right(), out);
      break;
    case Process::Kind::Replicate:
      names_in(p.body(), out);
      break;
  }
}

void names_in(const SetExpr& s, std::set<std::string>& out) {
  switch (s.kind()) {
    case SetExpr::Kind::Literal:
      for (const SetItem& i : s.items()) out.insert(i.name);
      break;
    case SetExpr::Kind::Intersect:
    case SetExpr::Kind::Union:
      names_in(s.lhs(), out);
      names_in(s.rhs(), out);
      break;
    default:
      break;
  }
}

void names_in(const Condition& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case Condition::Kind::Equal:
      names_in(c.lhs_loc(), out);
      names_in(c.rhs_loc(), out);
      break;
    case Condition::Kind::Test:
      for (const Location& f : c.fields()) names_in(f, out);
      names_in(c.target(), out);
      break;
    case Condition::Kind::And:
    case Condition::Kind::Or:
      names_in(c.lhs(), out);
      names_in(c.rhs(), out);
      break;
    case Condition::Kind::Not:
      names_in(c.body(), out);
      break;
    case Condition::Kind::Exists:
    case Condition::Kind::Forall:
      names_in(c.set(), out);
      names_in(c.body(), out);
      break;
    case Condition::Kind::LocIn:
      names_in(c.lhs_loc(), out);
      names_in(c.set(), out);
      break;
    case Condition::Kind::CapIn:
    case Condition::Kind::IsEmpty:
      names_in(c.set(), out);
      break;
  }
}

std::set<std::string> names_in(const SystemState& state) {
  std::set<std::string> out;
  for (const LocatedItem& item : state.net.items) {
    out.insert(item.node);
    if (item.is_tuple()) {
      out.insert(item.as_tuple().fields.begin(), item.as_tuple().fields.end());
    } else {
      names_in(item.as_process(), out);
    }
  }
  for (const Aspect& a : state.aspects) {
    names_in(a.cut.source, out);
    for (const Location& f : a.cut.fields) names_in(f, out);
    names_in(a.cut.target, out);
    for (const AdviceCase& c : a.body.cases) names_in(c.condition, out);
  }
  return out;
}

// Non-nil parallel pieces of `p` located at `node`.
void append_pieces(std::vector<LocatedItem>& out, const std::string& node, const Process& p) {
  for (Process& piece : parallel_components(p)) {
    if (!piece.is_nil()) out.push_back(LocatedItem::process(node, std::move(piece)));
  }
}

Tuple ground_tuple(const std::vector<Location>& fields) {
  Tuple t;
  for (const Location& f : fields) t.fields.push_back(f.name());
  return t;
}

}  // namespace

std::vector<StepCandidate> enabled_candidates(const SystemState& state) {
  std::vector<StepCandidate> out;
  const auto& items = state.net.items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].is_process()) continue;
    const Process& p = items[i].as_process();
    if (p.is_nil()) continue;
    if (p.kind() == Process::Kind::Replicate) {
      out.push_back({i, 0, std::nullopt, true});
      continue;
    }
    if (p.kind() != Process::Kind::Sum) continue;
    for (std::size_t b = 0; b < p.branches().size(); ++b) {
      const Action& a = p.branches()[b].action;
      if (!a.is_input()) {
        out.push_back({i, b, std::nullopt, false});
        continue;
      }
      if (!a.target.is_constant()) continue;
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (items[j].is_tuple() && items[j].node == a.target.name() &&
            match_template(a.fields, items[j].as_tuple())) {
          out.push_back({i, b, j, false});
        }
      }
    }
  }
  return out;
}

std::string fresh_location(SystemState& state) {
  std::set<std::string> taken = names_in(state);
  for (;;) {
    std::string name = "loc$" + std::to_string(state.fresh_counter++);
    if (!taken.count(name)) return name;
  }
}

TraceEvent execute_in_place(SystemState& state, const StepCandidate& cand, std::size_t step) {
  auto& items = state.net.items;
  const LocatedItem item = items.at(cand.item);
  const std::string& node = item.node;
  const Process& proc = item.as_process();
  TraceEvent event;
  event.step = step;
  event.node = node;

  if (cand.unfold) {
    event.action = "unfold";
    event.capability = Capability::Eval;
    event.effect = TraceEvent::Effect::Unfolded;
    append_pieces(items, node, proc.body());
    return event;
  }

  const Branch& branch = proc.branches().at(cand.branch);
  const Action& a = branch.action;
  event.action = to_string(a);
  event.capability = a.capability;
  event.verdict = phi(state.aspects, join_point_of(node, branch), state.net);
  if (event.verdict.decision == Decision::Deny) {
    event.effect = TraceEvent::Effect::Denied;
    items[cand.item].content = Process::nil();
    return event;
  }

  Substitution theta;
  std::vector<LocatedItem> appended;
  std::optional<std::size_t> removed;
  switch (a.capability) {
    case Capability::Out:
      appended.push_back(LocatedItem::tuple(a.target.name(), ground_tuple(a.fields)));
      break;
    case Capability::In:
    case Capability::Read:
      theta = *match_template(a.fields, items.at(*cand.tuple).as_tuple());
      if (a.capability == Capability::In) removed = *cand.tuple;
      break;
    case Capability::Eval:
      append_pieces(appended, a.target.name(), a.spawned);
      break;
    case Capability::Newloc: {
      std::string fresh = fresh_location(state);
      theta.locations.emplace(a.fields.front().name(), Location::constant(fresh));
      appended.push_back(LocatedItem::process(fresh, Process::nil()));
      break;
    }
  }
  event.bindings = theta.locations;

  std::vector<LocatedItem> next;
  next.reserve(items.size() + appended.size() + 1);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (removed && k == *removed) continue;
    if (k == cand.item) {
      append_pieces(next, node, apply_substitution(branch.continuation, theta));
      continue;
    }
    next.push_back(std::move(items[k]));
  }
  for (LocatedItem& n : appended) next.push_back(std::move(n));
  items = std::move(next);
  return event;
}

std::pair<SystemState, TraceEvent> execute(SystemState state, const StepCandidate& cand) {
  TraceEvent e = execute_in_place(state, cand);
  return {std::move(state), std::move(e)};
}

RunResult run(SystemState state, std::uint64_t seed, std::size_t max_steps) {
  RunResult result;
  state.net = lift_to_net(state.net);
  std::mt19937_64 rng(seed);
  for (std::size_t step = 1;; ++step) {
    std::vector<StepCandidate> cands = enabled_candidates(state);
    if (cands.empty()) {
      result.halt = HaltReason::Quiescent;
      break;
    }
    if (step > max_steps) {
      result.halt = HaltReason::StepBudget;
      break;
    }
    const StepCandidate& pick = cands[rng() % cands.size()];
    result.trace.push_back(execute_in_place(state, pick, step));
  }
  result.final_state = std::move(state);
  return result;
}

std::string format_trace_event(const TraceEvent& e) {
  std::string out = "#" + std::to_string(e.step) + " " + e.node + " :: " + e.action + " => " +
                    (e.verdict.decision == Decision::Deny ? "DENY" : "ALLOW") + " [";
  bool first = true;
  for (const AspectReport& r : e.verdict.reports) {
    if (!r.matched) continue;
    if (!first) out += ",";
    first = false;
    out += r.name + ":" + std::string(to_string(*r.suggestion));
  }
  out += "] {";
  first = true;
  for (const auto& [var, value] : e.bindings) {
    if (!first) out += ",";
    first = false;
    out += var + "=" + to_string(value);
  }
  return out + "}";
}

std::string format_net(const Net& net) {
  struct Row {
    std::string node;
    bool tuple;
    std::string text;
    bool operator<(const Row& o) const {
      return std::tie(node, tuple, text) < std::tie(o.node, o.tuple, o.text);
    }
  };
  std::vector<Row> rows;
  for (const LocatedItem& item : net.items) rows.push_back({item.node, item.is_tuple(), to_string(item)});
  std::sort(rows.begin(), rows.end());
  std::string out = "let in\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "  " + rows[i].text + (i + 1 < rows.size() ? " ||\n" : "\n");
  }
  return out;
}

std::string to_string(HaltReason h) {
  return h == HaltReason::Quiescent ? "quiescent" : "step budget";
}

}  // namespace aspectke
