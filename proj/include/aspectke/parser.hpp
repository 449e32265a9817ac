#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aspectke/aspect.hpp"

namespace aspectke {

// `let (aspect | set Name = {..})* in net`. Throws ParseError, or
// ValidationError when the result breaks a well-formedness rule.
SystemState parse_system(std::string_view text, const std::string& file = {});

// A sequence of aspects and set declarations.
std::vector<Aspect> parse_aspect_file(std::string_view text, const std::string& file = {});

// A bare process term, optionally preceded by `free u, v;` to declare
// names that are free variables rather than constants.
Process parse_process(std::string_view text, const std::string& file = {});

// Syntax only; no well-formedness check.
SystemState parse_system_unchecked(std::string_view text, const std::string& file = {});
std::vector<Aspect> parse_aspect_file_unchecked(std::string_view text,
                                                const std::string& file = {});

}  // namespace aspectke
