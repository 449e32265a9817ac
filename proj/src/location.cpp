#include "aspectke/location.hpp"

namespace aspectke {

std::string_view to_string(Capability c) {
  switch (c) {
    case Capability::Out: return "out";
    case Capability::In: return "in";
    case Capability::Read: return "read";
    case Capability::Eval: return "eval";
    case Capability::Newloc: return "newloc";
  }
  return "?";
}

std::optional<Capability> capability_from_string(std::string_view text) {
  for (Capability c : kAllCapabilities) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

}  // namespace aspectke
