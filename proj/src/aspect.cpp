#include "aspectke/aspect.hpp"

#include <cassert>

namespace aspectke {

std::string_view to_string(AnalysisFunction f) {
  switch (f) {
    case AnalysisFunction::Act: return "Act";
    case AnalysisFunction::Loc: return "Loc";
    case AnalysisFunction::LC: return "LC";
    case AnalysisFunction::LCc: return "LCc";
    case AnalysisFunction::FV: return "FV";
    case AnalysisFunction::FVc: return "FVc";
  }
  return "?";
}

bool takes_capability(AnalysisFunction f) {
  return f == AnalysisFunction::Loc || f == AnalysisFunction::LCc ||
         f == AnalysisFunction::FVc;
}

std::string_view to_string(Suggestion s) {
  return s == Suggestion::Break ? "break" : "proceed";
}

std::vector<std::string> cut_variables(const Cut& cut) {
  std::vector<std::string> out;
  auto add = [&](const Location& l) {
    if (l.is_variable() || l.is_binder()) out.push_back(l.name());
  };
  add(cut.source);
  for (const Location& f : cut.fields) add(f);
  if (cut.capability != Capability::Newloc) add(cut.target);
  if (cut.capability == Capability::Eval) out.push_back(cut.spawned_var);
  if (cut.continuation_var) out.push_back(*cut.continuation_var);
  return out;
}

// ---------------------------------------------------------------- SetExpr

struct SetExpr::Node {
  Kind kind = Kind::Literal;
  std::vector<SetItem> items;
  SetExpr lhs;
  SetExpr rhs;
  AnalysisFunction function = AnalysisFunction::Act;
  std::optional<Capability> capability;
  std::string process_var;

  friend bool operator==(const Node&, const Node&) = default;
};

SetExpr::SetExpr() : node_(nullptr) {}

SetExpr SetExpr::literal(std::vector<SetItem> items) {
  auto n = std::make_shared<Node>();
  n->items = std::move(items);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::intersect(SetExpr a, SetExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Intersect;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::unite(SetExpr a, SetExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Union;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::analysis(AnalysisFunction f, std::optional<Capability> cap,
                          std::string process_var) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Analysis;
  n->function = f;
  n->capability = cap;
  n->process_var = std::move(process_var);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::all_variables() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AllVariables;
  return SetExpr(std::move(n));
}

SetExpr::Kind SetExpr::kind() const { return node_ ? node_->kind : Kind::Literal; }

const std::vector<SetItem>& SetExpr::items() const {
  static const std::vector<SetItem> kEmpty;
  return node_ ? node_->items : kEmpty;
}

const SetExpr& SetExpr::lhs() const {
  assert(node_);
  return node_->lhs;
}

const SetExpr& SetExpr::rhs() const {
  assert(node_);
  return node_->rhs;
}

AnalysisFunction SetExpr::function() const {
  assert(node_);
  return node_->function;
}

std::optional<Capability> SetExpr::capability() const {
  return node_ ? node_->capability : std::nullopt;
}

const std::string& SetExpr::process_var() const {
  assert(node_);
  return node_->process_var;
}

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.node_ == b.node_) return true;
  static const SetExpr::Node kEmpty;
  const SetExpr::Node& x = a.node_ ? *a.node_ : kEmpty;
  const SetExpr::Node& y = b.node_ ? *b.node_ : kEmpty;
  return x == y;
}

// -------------------------------------------------------------- Condition

struct Condition::Node {
  Kind kind = Kind::Equal;
  Location a;
  Location b;
  Condition lhs;
  Condition rhs;
  std::vector<Location> fields;
  std::string var;
  SetExpr set;
  Capability capability = Capability::Out;

  friend bool operator==(const Node&, const Node&) = default;
};

Condition::Condition() : node_(nullptr) {}

namespace {

template <typename Fill>
std::shared_ptr<Condition::Node> make_node(Condition::Kind kind, Fill fill) {
  auto n = std::make_shared<Condition::Node>();
  n->kind = kind;
  fill(*n);
  return n;
}

}  // namespace

Condition Condition::equal(Location a, Location b) {
  return Condition(make_node(Kind::Equal, [&](Node& n) {
    n.a = std::move(a);
    n.b = std::move(b);
  }));
}

Condition Condition::conj(Condition a, Condition b) {
  return Condition(make_node(Kind::And, [&](Node& n) {
    n.lhs = std::move(a);
    n.rhs = std::move(b);
  }));
}

Condition Condition::disj(Condition a, Condition b) {
  return Condition(make_node(Kind::Or, [&](Node& n) {
    n.lhs = std::move(a);
    n.rhs = std::move(b);
  }));
}

Condition Condition::negate(Condition c) {
  return Condition(make_node(Kind::Not, [&](Node& n) { n.lhs = std::move(c); }));
}

Condition Condition::test(std::vector<Location> fields, Location target) {
  return Condition(make_node(Kind::Test, [&](Node& n) {
    n.fields = std::move(fields);
    n.a = std::move(target);
  }));
}

Condition Condition::exists(std::string var, SetExpr domain, Condition body) {
  return Condition(make_node(Kind::Exists, [&](Node& n) {
    n.var = std::move(var);
    n.set = std::move(domain);
    n.lhs = std::move(body);
  }));
}

Condition Condition::forall(std::string var, SetExpr domain, Condition body) {
  return Condition(make_node(Kind::Forall, [&](Node& n) {
    n.var = std::move(var);
    n.set = std::move(domain);
    n.lhs = std::move(body);
  }));
}

Condition Condition::cap_in(Capability cap, SetExpr set) {
  return Condition(make_node(Kind::CapIn, [&](Node& n) {
    n.capability = cap;
    n.set = std::move(set);
  }));
}

Condition Condition::loc_in(Location loc, SetExpr set) {
  return Condition(make_node(Kind::LocIn, [&](Node& n) {
    n.a = std::move(loc);
    n.set = std::move(set);
  }));
}

Condition Condition::is_empty(SetExpr set) {
  return Condition(make_node(Kind::IsEmpty, [&](Node& n) { n.set = std::move(set); }));
}

namespace {

const Condition::Node& node_or_default(const std::shared_ptr<const Condition::Node>& n) {
  static const Condition::Node kDefault;
  return n ? *n : kDefault;
}

}  // namespace

Condition::Kind Condition::kind() const { return node_or_default(node_).kind; }
const Location& Condition::lhs_loc() const { return node_or_default(node_).a; }
const Location& Condition::rhs_loc() const { return node_or_default(node_).b; }
const Condition& Condition::lhs() const { return node_or_default(node_).lhs; }
const Condition& Condition::rhs() const { return node_or_default(node_).rhs; }
const Condition& Condition::body() const { return node_or_default(node_).lhs; }
const std::vector<Location>& Condition::fields() const {
  return node_or_default(node_).fields;
}
const Location& Condition::target() const { return node_or_default(node_).a; }
const std::string& Condition::var() const { return node_or_default(node_).var; }
const SetExpr& Condition::set() const { return node_or_default(node_).set; }
Capability Condition::capability() const { return node_or_default(node_).capability; }

bool operator==(const Condition& a, const Condition& b) {
  if (a.node_ == b.node_) return true;
  return node_or_default(a.node_) == node_or_default(b.node_);
}

}  // namespace aspectke
