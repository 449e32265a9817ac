#pragma once

#include <vector>

#include "aspectke/aspect.hpp"
#include "aspectke/diagnostics.hpp"

namespace aspectke {

// Closedness and action well-formedness of every located process.
std::vector<Violation> validate_net(const Net& net);

// Distinct cut variables, closed body, banged variables only in set context.
std::vector<Violation> validate_aspect(const Aspect& aspect);

std::vector<Violation> validate_system(const SystemState& state);

}  // namespace aspectke
