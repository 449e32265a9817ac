#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "aspectke/aspect.hpp"

namespace aspectke {

struct ActionParts {
  Capability cap = Capability::Out;
  ItemSet fv;  // Variable items
  ItemSet bv;  // Variable items
  ItemSet lc;  // Constant items
  std::optional<Location> loc;  // absent for newloc
};

ActionParts extract_action_parts(const Action& a);

// Each analysis is a union over all prefixes, homomorphic over `|` and
// invariant under `*`. Eval prefixes contribute what their spawned process
// contributes.
ItemSet act_set(const Process& p);
ItemSet loc_set(Capability c, const Process& p);
ItemSet lc_set(const Process& p);
ItemSet lc_set(Capability c, const Process& p);
ItemSet fv_set(const Process& p);
ItemSet fv_set(Capability c, const Process& p);

ItemSet analyze(AnalysisFunction f, std::optional<Capability> c, const Process& p);

/// A finite set, possibly extended by the symbolic set of all location
/// variables.
struct SetValue {
  bool all_variables = false;
  ItemSet items;

  friend bool operator==(const SetValue&, const SetValue&) = default;
};

class EvaluationError : public std::runtime_error {
 public:
  enum class Kind { UnboundVariable, UnsupportedUniverse };

  EvaluationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Bindings visible to advice: the cut match plus quantified variables.
struct Environment {
  Substitution subst;
  std::map<std::string, SetItem> quantified;
};

// Constant and DontCare resolve to themselves; variables through env.
SetItem resolve(const Location& loc, const Environment& env);

SetValue eval_set_expr(const SetExpr& e, const Environment& env);

// The finite items of `v`; throws UnsupportedUniverse if `v` is unbounded.
const ItemSet& enumerate(const SetValue& v, std::string_view context);

bool contains(const SetValue& v, const SetItem& item);

}  // namespace aspectke
