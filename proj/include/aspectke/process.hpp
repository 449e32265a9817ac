#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "aspectke/location.hpp"

namespace aspectke {

struct Action;
struct Branch;

/// Immutable process term with shared structure. The default value is the
/// nil process, i.e. the empty sum.
class Process {
 public:
  enum class Kind { Sum, Parallel, Replicate };

  Process();

  static Process nil() { return Process(); }
  static Process sum(std::vector<Branch> branches);
  static Process prefix(Action action, Process continuation);
  static Process parallel(Process left, Process right);
  static Process replicate(Process body);

  Kind kind() const;
  bool is_nil() const;

  // Valid for Sum.
  const std::vector<Branch>& branches() const;
  // Valid for Parallel.
  const Process& left() const;
  const Process& right() const;
  // Valid for Replicate.
  const Process& body() const;

  friend bool operator==(const Process& a, const Process& b);

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Action {
  Capability capability = Capability::Out;
  // out/in/read parameters; for newloc a single Binder.
  std::vector<Location> fields;
  // Unused for newloc.
  Location target;
  // Spawned process of eval.
  Process spawned;

  static Action out(std::vector<Location> args, Location target);
  static Action in(std::vector<Location> templ, Location target);
  static Action read(std::vector<Location> templ, Location target);
  static Action eval(Process proc, Location target);
  static Action newloc(std::string binder);

  bool has_target() const { return capability != Capability::Newloc; }
  bool is_input() const {
    return capability == Capability::In || capability == Capability::Read;
  }

  friend bool operator==(const Action&, const Action&) = default;
};

struct Branch {
  Action action;
  Process continuation;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Ground tuple. Fields are location constants by construction.
struct Tuple {
  std::vector<std::string> fields;

  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

struct LocatedItem {
  std::string node;
  std::variant<Process, Tuple> content;

  static LocatedItem process(std::string node, Process p) {
    return {std::move(node), std::move(p)};
  }
  static LocatedItem tuple(std::string node, Tuple t) {
    return {std::move(node), std::move(t)};
  }

  bool is_tuple() const { return std::holds_alternative<Tuple>(content); }
  bool is_process() const { return std::holds_alternative<Process>(content); }
  const Tuple& as_tuple() const { return std::get<Tuple>(content); }
  const Process& as_process() const { return std::get<Process>(content); }

  friend bool operator==(const LocatedItem&, const LocatedItem&) = default;
};

/// A net is a multiset of located items. Positions in `items` are stable
/// handles for the scheduler but carry no meaning otherwise.
struct Net {
  std::vector<LocatedItem> items;

  friend bool operator==(const Net&, const Net&) = default;
};

/// Finite map produced by matching. Location variables map to constants (or
/// to variable names when a cut binder meets a program binder); process
/// variables map to processes.
struct Substitution {
  std::map<std::string, Location> locations;
  std::map<std::string, Process> processes;

  bool empty() const { return locations.empty() && processes.empty(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Replaces free occurrences of the substitution's location variables.
/// Binders shadow: an `!u` removes `u` from the substitution for the rest of
/// the prefix chain.
Process apply_substitution(const Process& proc, const Substitution& subst);
Action apply_substitution(const Action& action, const Substitution& subst);

/// l::(P1|P2) becomes l::P1 || l::P2, recursively, in place. Replicated and
/// summed roots are left as they are.
Net lift_to_net(const Net& net);

/// The non-parallel pieces of a process, left to right.
std::vector<Process> parallel_components(const Process& proc);

/// Multiset equality (order-insensitive).
bool same_multiset(const Net& a, const Net& b);

}  // namespace aspectke
