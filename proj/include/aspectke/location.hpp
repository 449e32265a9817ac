#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace aspectke {

/// The five kinds of action. The enumerator order is the serialization order.
enum class Capability { Out, In, Read, Eval, Newloc };

inline constexpr std::array<Capability, 5> kAllCapabilities = {
    Capability::Out, Capability::In, Capability::Read, Capability::Eval,
    Capability::Newloc};

std::string_view to_string(Capability c);
std::optional<Capability> capability_from_string(std::string_view text);

/// Nodes, data values, variables, binders and the wildcard all live in one
/// name space. A location is one of:
///   Constant  l     a node name or data value
///   Variable  u     a use of a location variable
///   Binder    !u    a defining occurrence
///   DontCare  _     only in cuts and test conditions
class Location {
 public:
  enum class Kind { Constant, Variable, Binder, DontCare };

  Location() = default;  // DontCare

  static Location constant(std::string name) {
    return Location(Kind::Constant, std::move(name));
  }
  static Location variable(std::string name) {
    return Location(Kind::Variable, std::move(name));
  }
  static Location binder(std::string name) {
    return Location(Kind::Binder, std::move(name));
  }
  static Location dont_care() { return Location(); }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_binder() const { return kind_ == Kind::Binder; }
  bool is_dont_care() const { return kind_ == Kind::DontCare; }

  friend auto operator<=>(const Location&, const Location&) = default;

 private:
  Location(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_ = Kind::DontCare;
  std::string name_;
};

/// Element of a set value in advice conditions: a location constant, a
/// location variable name, or a capability. Ordered by name first so that
/// quantifiers iterate lexicographically.
struct SetItem {
  enum class Kind { Constant, Variable, Capability };

  Kind kind = Kind::Constant;
  std::string name;

  static SetItem constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  static SetItem variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  static SetItem capability(Capability c) {
    return {Kind::Capability, std::string(to_string(c))};
  }

  friend bool operator==(const SetItem&, const SetItem&) = default;
  friend std::strong_ordering operator<=>(const SetItem& a, const SetItem& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

using ItemSet = std::set<SetItem>;

}  // namespace aspectke
