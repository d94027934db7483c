#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "envcheck/interpreter.hpp"

namespace envcheck {

/// Outcome of evaluating an environment marker. Only `python_version` is
/// modelled; `extra` comparisons are false (no extras are installed). Any
/// other variable makes the marker unsupported, and callers skip the
/// dependency with a warning.
struct MarkerOutcome {
    bool value = false;
    std::optional<std::string> unsupported_variable;

    [[nodiscard]] bool supported() const noexcept { return !unsupported_variable.has_value(); }
};

/// Throws Error{InvalidMarker} on malformed marker text.
MarkerOutcome evaluate_marker(std::string_view marker, const InterpreterVersion& python);

}  // namespace envcheck
