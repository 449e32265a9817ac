#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aspectke/diagnostics.hpp"
#include "aspectke/location.hpp"
#include "aspectke/process.hpp"

namespace aspectke {

/// The six behavior analyses. Loc, LCc and FVc take a capability.
enum class AnalysisFunction { Act, Loc, LC, LCc, FV, FVc };

std::string_view to_string(AnalysisFunction f);
bool takes_capability(AnalysisFunction f);

class SetExpr {
 public:
  enum class Kind { Literal, Intersect, Union, Analysis, AllVariables };

  SetExpr();  // empty literal

  static SetExpr literal(std::vector<SetItem> items);
  static SetExpr intersect(SetExpr a, SetExpr b);
  static SetExpr unite(SetExpr a, SetExpr b);
  static SetExpr analysis(AnalysisFunction f, std::optional<Capability> cap,
                          std::string process_var);
  static SetExpr all_variables();

  Kind kind() const;
  // Literal. Variable items are resolved against the advice environment.
  const std::vector<SetItem>& items() const;
  // Intersect / Union.
  const SetExpr& lhs() const;
  const SetExpr& rhs() const;
  // Analysis.
  AnalysisFunction function() const;
  std::optional<Capability> capability() const;
  const std::string& process_var() const;

  friend bool operator==(const SetExpr& a, const SetExpr& b);

  struct Node;

 private:
  explicit SetExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Condition {
 public:
  enum class Kind { Equal, And, Or, Not, Test, Exists, Forall, CapIn, LocIn, IsEmpty };

  Condition();  // placeholder Equal(_, _)

  static Condition equal(Location a, Location b);
  static Condition conj(Condition a, Condition b);
  static Condition disj(Condition a, Condition b);
  static Condition negate(Condition c);
  static Condition test(std::vector<Location> fields, Location target);
  static Condition exists(std::string var, SetExpr domain, Condition body);
  static Condition forall(std::string var, SetExpr domain, Condition body);
  static Condition cap_in(Capability cap, SetExpr set);
  static Condition loc_in(Location loc, SetExpr set);
  static Condition is_empty(SetExpr set);

  Kind kind() const;
  // Equal: lhs_loc/rhs_loc. LocIn: lhs_loc.
  const Location& lhs_loc() const;
  const Location& rhs_loc() const;
  // And / Or: lhs/rhs. Not, Exists, Forall: body.
  const Condition& lhs() const;
  const Condition& rhs() const;
  const Condition& body() const;
  // Test.
  const std::vector<Location>& fields() const;
  const Location& target() const;
  // Exists / Forall.
  const std::string& var() const;
  // Exists, Forall, CapIn, LocIn, IsEmpty.
  const SetExpr& set() const;
  // CapIn.
  Capability capability() const;

  friend bool operator==(const Condition& a, const Condition& b);

  struct Node;

 private:
  explicit Condition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Pointcut `source :: action[.X]`. Plain variables match constants,
/// binders match binders, `_` matches either.
struct Cut {
  Location source;
  Capability capability = Capability::Out;
  // out/in/read patterns; newloc holds one Binder or DontCare.
  std::vector<Location> fields;
  Location target;
  // eval: the variable bound to the spawned process.
  std::string spawned_var;
  // `.X`: the variable bound to the continuation.
  std::optional<std::string> continuation_var;

  friend bool operator==(const Cut&, const Cut&) = default;
};

// Variable names introduced by a cut, in occurrence order, duplicates kept.
std::vector<std::string> cut_variables(const Cut& cut);

enum class Suggestion { Proceed, Break };

std::string_view to_string(Suggestion s);

struct AdviceCase {
  Condition condition;
  Suggestion suggestion = Suggestion::Proceed;

  friend bool operator==(const AdviceCase&, const AdviceCase&) = default;
};

/// `case (c1) s1; case (c2) s2; ... ; default`
struct AdviceBody {
  std::vector<AdviceCase> cases;
  Suggestion fallback = Suggestion::Proceed;

  friend bool operator==(const AdviceBody&, const AdviceBody&) = default;
};

struct Aspect {
  std::string name;
  Cut cut;
  AdviceBody body;
  SourceSpan span;  // diagnostics only; not part of equality

  friend bool operator==(const Aspect& a, const Aspect& b) {
    return a.name == b.name && a.cut == b.cut && a.body == b.body;
  }
};

struct SystemState {
  std::vector<Aspect> aspects;
  Net net;
  std::uint64_t fresh_counter = 0;

  friend bool operator==(const SystemState&, const SystemState&) = default;
};

}  // namespace aspectke
