#include "aspectke/process.hpp"

#include <algorithm>
#include <cassert>

namespace aspectke {

struct Process::Node {
  Kind kind = Kind::Sum;
  std::vector<Branch> branches;
  Process left;   // Parallel left, Replicate body
  Process right;  // Parallel right

  friend bool operator==(const Node&, const Node&) = default;
};

Process::Process() : node_(nullptr) {}

Process Process::sum(std::vector<Branch> branches) {
  if (branches.empty()) return Process();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->branches = std::move(branches);
  return Process(std::move(n));
}

Process Process::prefix(Action action, Process continuation) {
  std::vector<Branch> b;
  b.push_back(Branch{std::move(action), std::move(continuation)});
  return sum(std::move(b));
}

Process Process::parallel(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Parallel;
  n->left = std::move(left);
  n->right = std::move(right);
  return Process(std::move(n));
}

Process Process::replicate(Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Replicate;
  n->left = std::move(body);
  return Process(std::move(n));
}

// A null node pointer is the canonical nil.
Process::Kind Process::kind() const { return node_ ? node_->kind : Kind::Sum; }

bool Process::is_nil() const {
  return !node_ || (node_->kind == Kind::Sum && node_->branches.empty());
}

const std::vector<Branch>& Process::branches() const {
  static const std::vector<Branch> kEmpty;
  if (!node_) return kEmpty;
  assert(node_->kind == Kind::Sum);
  return node_->branches;
}

const Process& Process::left() const {
  assert(node_ && node_->kind == Kind::Parallel);
  return node_->left;
}

const Process& Process::right() const {
  assert(node_ && node_->kind == Kind::Parallel);
  return node_->right;
}

const Process& Process::body() const {
  assert(node_ && node_->kind == Kind::Replicate);
  return node_->left;
}

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_nil() || b.is_nil()) return a.is_nil() && b.is_nil();
  return *a.node_ == *b.node_;
}

Action Action::out(std::vector<Location> args, Location target) {
  return Action{Capability::Out, std::move(args), std::move(target), {}};
}

Action Action::in(std::vector<Location> templ, Location target) {
  return Action{Capability::In, std::move(templ), std::move(target), {}};
}

Action Action::read(std::vector<Location> templ, Location target) {
  return Action{Capability::Read, std::move(templ), std::move(target), {}};
}

Action Action::eval(Process proc, Location target) {
  return Action{Capability::Eval, {}, std::move(target), std::move(proc)};
}

Action Action::newloc(std::string binder) {
  return Action{Capability::Newloc, {Location::binder(std::move(binder))},
                Location(), {}};
}

namespace {

Location substitute(const Location& loc, const Substitution& subst) {
  if (!loc.is_variable()) return loc;
  auto it = subst.locations.find(loc.name());
  return it == subst.locations.end() ? loc : it->second;
}

// Removes the action's binders from the substitution for its continuation.
Substitution shadowed_by(const Action& action, const Substitution& subst) {
  Substitution inner = subst;
  for (const Location& f : action.fields) {
    if (f.is_binder()) inner.locations.erase(f.name());
  }
  return inner;
}

}  // namespace

Action apply_substitution(const Action& action, const Substitution& subst) {
  if (subst.locations.empty()) return action;
  Action result = action;
  for (Location& f : result.fields) f = substitute(f, subst);
  if (result.has_target()) result.target = substitute(result.target, subst);
  if (result.capability == Capability::Eval) {
    result.spawned = apply_substitution(action.spawned, subst);
  }
  return result;
}

Process apply_substitution(const Process& proc, const Substitution& subst) {
  if (subst.locations.empty() || proc.is_nil()) return proc;
  switch (proc.kind()) {
    case Process::Kind::Sum: {
      std::vector<Branch> out;
      out.reserve(proc.branches().size());
      for (const Branch& b : proc.branches()) {
        Substitution inner = shadowed_by(b.action, subst);
        out.push_back(Branch{apply_substitution(b.action, subst),
                             apply_substitution(b.continuation, inner)});
      }
      return Process::sum(std::move(out));
    }
    case Process::Kind::Parallel:
      return Process::parallel(apply_substitution(proc.left(), subst),
                               apply_substitution(proc.right(), subst));
    case Process::Kind::Replicate:
      return Process::replicate(apply_substitution(proc.body(), subst));
  }
  return proc;
}

std::vector<Process> parallel_components(const Process& proc) {
  std::vector<Process> out;
  std::vector<const Process*> stack{&proc};
  while (!stack.empty()) {
    const Process* p = stack.back();
    stack.pop_back();
    if (p->kind() == Process::Kind::Parallel) {
      stack.push_back(&p->right());
      stack.push_back(&p->left());
    } else {
      out.push_back(*p);
    }
  }
  return out;
}

Net lift_to_net(const Net& net) {
  Net out;
  out.items.reserve(net.items.size());
  for (const LocatedItem& item : net.items) {
    if (item.is_process() && item.as_process().kind() == Process::Kind::Parallel) {
      for (Process& p : parallel_components(item.as_process())) {
        out.items.push_back(LocatedItem::process(item.node, std::move(p)));
      }
    } else {
      out.items.push_back(item);
    }
  }
  return out;
}

bool same_multiset(const Net& a, const Net& b) {
  if (a.items.size() != b.items.size()) return false;
  std::vector<bool> used(b.items.size(), false);
  for (const LocatedItem& x : a.items) {
    bool found = false;
    for (std::size_t j = 0; j < b.items.size(); ++j) {
      if (!used[j] && b.items[j] == x) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace aspectke
