#pragma once

#include <string>

#include "aspectke/aspect.hpp"
#include "aspectke/process.hpp"

namespace aspectke {

// Concrete syntax accepted back by the parser.
std::string to_string(const Location& loc);
std::string to_string(const Action& action);
std::string to_string(const Process& proc);
std::string to_string(const Tuple& tuple);
std::string to_string(const LocatedItem& item);
std::string to_string(const Net& net);
std::string to_string(const SetItem& item);
std::string to_string(const ItemSet& items);
std::string to_string(const SetExpr& set);
std::string to_string(const Condition& cond);
std::string to_string(const Cut& cut);
std::string to_string(const AdviceBody& body);
std::string to_string(const Aspect& aspect);

std::string pretty_print(const SystemState& state);

}  // namespace aspectke
