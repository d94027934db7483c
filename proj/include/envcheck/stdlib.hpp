#pragma once

#include <string_view>

#include "envcheck/interpreter.hpp"

namespace envcheck {

/// Whether `top` (a top-level module name) ships with the given interpreter.
bool is_stdlib_module(std::string_view top, const InterpreterVersion& python);

}  // namespace envcheck
