#include "aspectke/printer.hpp"

namespace aspectke {

namespace {

std::string join_fields(const std::vector<Location>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(fields[i]);
  }
  return out;
}

std::string branch_text(const Branch& b);

// Process in a position that only admits `0`, `*P`, `(P)` or a prefix.
std::string unary_text(const Process& p) {
  if (p.is_nil()) return "0";
  switch (p.kind()) {
    case Process::Kind::Sum:
      if (p.branches().size() == 1) return branch_text(p.branches().front());
      return "(" + to_string(p) + ")";
    case Process::Kind::Parallel:
      return "(" + to_string(p) + ")";
    case Process::Kind::Replicate:
      return "*" + unary_text(p.body());
  }
  return "0";
}

std::string branch_text(const Branch& b) {
  std::string out = to_string(b.action);
  if (!b.continuation.is_nil()) out += "." + unary_text(b.continuation);
  return out;
}

std::string sum_text(const Process& p) {
  if (p.kind() == Process::Kind::Parallel) return "(" + to_string(p) + ")";
  if (p.kind() == Process::Kind::Replicate || p.is_nil()) return unary_text(p);
  std::string out;
  for (std::size_t i = 0; i < p.branches().size(); ++i) {
    if (i > 0) out += " + ";
    out += branch_text(p.branches()[i]);
  }
  return out;
}

enum class Prec { Union, Intersect, Atom };

std::string set_text(const SetExpr& s, Prec ctx) {
  switch (s.kind()) {
    case SetExpr::Kind::Literal: {
      std::string out = "{";
      for (std::size_t i = 0; i < s.items().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(s.items()[i]);
      }
      return out + "}";
    }
    case SetExpr::Kind::Union: {
      std::string out = set_text(s.lhs(), Prec::Union) + " U " +
                        set_text(s.rhs(), Prec::Intersect);
      return ctx == Prec::Union ? out : "(" + out + ")";
    }
    case SetExpr::Kind::Intersect: {
      std::string out = set_text(s.lhs(), Prec::Intersect) + " & " +
                        set_text(s.rhs(), Prec::Atom);
      return ctx == Prec::Atom ? "(" + out + ")" : out;
    }
    case SetExpr::Kind::Analysis: {
      std::string out(to_string(s.function()));
      if (s.capability()) out += "_" + std::string(to_string(*s.capability()));
      return out + "(" + s.process_var() + ")";
    }
    case SetExpr::Kind::AllVariables:
      return "LVar*";
  }
  return "{}";
}

bool is_atom(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::And:
    case Condition::Kind::Or:
    case Condition::Kind::Not:
    case Condition::Kind::Exists:
    case Condition::Kind::Forall:
      return false;
    default:
      return true;
  }
}

bool is_quantifier(const Condition& c) {
  return c.kind() == Condition::Kind::Exists || c.kind() == Condition::Kind::Forall;
}

enum class CPrec { Or, And, Unary };

std::string cond_text(const Condition& c, CPrec ctx);

std::string operand_text(const Condition& c, CPrec ctx) {
  if (is_quantifier(c)) return "(" + cond_text(c, CPrec::Or) + ")";
  return cond_text(c, ctx);
}

std::string cond_text(const Condition& c, CPrec ctx) {
  switch (c.kind()) {
    case Condition::Kind::Equal:
      return to_string(c.lhs_loc()) + " = " + to_string(c.rhs_loc());
    case Condition::Kind::Test:
      return "test(" + join_fields(c.fields()) + ")@" + to_string(c.target());
    case Condition::Kind::CapIn:
      return std::string(to_string(c.capability())) + " in " + set_text(c.set(), Prec::Union);
    case Condition::Kind::LocIn:
      return to_string(c.lhs_loc()) + " in " + set_text(c.set(), Prec::Union);
    case Condition::Kind::IsEmpty:
      return set_text(c.set(), Prec::Union) + " = empty";
    case Condition::Kind::Not: {
      const Condition& inner = c.body();
      if (is_atom(inner) || inner.kind() == Condition::Kind::Not) {
        return "~" + cond_text(inner, CPrec::Unary);
      }
      return "~(" + cond_text(inner, CPrec::Or) + ")";
    }
    case Condition::Kind::And: {
      std::string out = operand_text(c.lhs(), CPrec::And) + " /\\ " +
                        operand_text(c.rhs(), CPrec::Unary);
      return ctx == CPrec::Unary ? "(" + out + ")" : out;
    }
    case Condition::Kind::Or: {
      std::string out = operand_text(c.lhs(), CPrec::Or) + " \\/ " +
                        operand_text(c.rhs(), CPrec::And);
      return ctx == CPrec::Or ? out : "(" + out + ")";
    }
    case Condition::Kind::Exists:
    case Condition::Kind::Forall: {
      std::string out = c.kind() == Condition::Kind::Exists ? "exists " : "forall ";
      out += c.var() + " in " + set_text(c.set(), Prec::Union) + " : " +
             cond_text(c.body(), CPrec::Or);
      return ctx == CPrec::Or ? out : "(" + out + ")";
    }
  }
  return "";
}

}  // namespace

std::string to_string(const Location& loc) {
  switch (loc.kind()) {
    case Location::Kind::Constant:
    case Location::Kind::Variable:
      return loc.name();
    case Location::Kind::Binder:
      return "!" + loc.name();
    case Location::Kind::DontCare:
      return "_";
  }
  return "_";
}

std::string to_string(const Action& a) {
  std::string name(to_string(a.capability));
  switch (a.capability) {
    case Capability::Eval:
      return name + "(" + to_string(a.spawned) + ")@" + to_string(a.target);
    case Capability::Newloc:
      return name + "(" + join_fields(a.fields) + ")";
    default:
      return name + "(" + join_fields(a.fields) + ")@" + to_string(a.target);
  }
}

std::string to_string(const Process& p) {
  if (p.kind() != Process::Kind::Parallel) return sum_text(p);
  std::string right = p.right().kind() == Process::Kind::Parallel
                          ? "(" + to_string(p.right()) + ")"
                          : sum_text(p.right());
  return to_string(p.left()) + " | " + right;
}

std::string to_string(const Tuple& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.fields.size(); ++i) {
    if (i > 0) out += ", ";
    out += t.fields[i];
  }
  return out + ">";
}

std::string to_string(const LocatedItem& item) {
  return item.node + " :: " +
         (item.is_tuple() ? to_string(item.as_tuple()) : to_string(item.as_process()));
}

std::string to_string(const Net& net) {
  std::string out;
  for (std::size_t i = 0; i < net.items.size(); ++i) {
    if (i > 0) out += " ||\n";
    out += "  " + to_string(net.items[i]);
  }
  return out;
}

std::string to_string(const SetItem& item) { return item.name; }

std::string to_string(const ItemSet& items) {
  std::string out = "{";
  bool first = true;
  for (const SetItem& i : items) {
    if (!first) out += ", ";
    first = false;
    out += i.name;
  }
  return out + "}";
}

std::string to_string(const SetExpr& set) { return set_text(set, Prec::Union); }

std::string to_string(const Condition& cond) { return cond_text(cond, CPrec::Or); }

std::string to_string(const Cut& cut) {
  std::string out = to_string(cut.source) + " :: " + std::string(to_string(cut.capability));
  switch (cut.capability) {
    case Capability::Eval:
      out += "(" + cut.spawned_var + ")@" + to_string(cut.target);
      break;
    case Capability::Newloc:
      out += "(" + join_fields(cut.fields) + ")";
      break;
    default:
      out += "(" + join_fields(cut.fields) + ")@" + to_string(cut.target);
  }
  if (cut.continuation_var) out += "." + *cut.continuation_var;
  return out;
}

std::string to_string(const AdviceBody& body) {
  std::string out;
  for (const AdviceCase& c : body.cases) {
    out += "case (" + to_string(c.condition) + ")\n    " +
           std::string(to_string(c.suggestion)) + ";\n  ";
  }
  return out + std::string(to_string(body.fallback));
}

std::string to_string(const Aspect& a) {
  return a.name + "[" + to_string(a.cut) + "] =\n  " + to_string(a.body);
}

std::string pretty_print(const SystemState& state) {
  std::string out = "let\n";
  for (const Aspect& a : state.aspects) out += to_string(a) + "\n\n";
  out += "in\n";
  if (!state.net.items.empty()) out += to_string(state.net) + "\n";
  return out;
}

}  // namespace aspectke
