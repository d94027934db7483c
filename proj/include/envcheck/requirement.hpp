#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "envcheck/names.hpp"
#include "envcheck/specifier.hpp"

namespace envcheck {

/// A declared dependency: distribution name, version constraint and an
/// optional environment marker kept as raw text.
struct DependencyDecl {
    NormalizedName name;
    SpecifierSet constraint;
    std::optional<std::string> marker;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const DependencyDecl&, const DependencyDecl&) = default;
};

/// One parsed requirement line in the dependency-specifier grammar:
///   name [extras] (specs | "(" specs ")") [; marker]
/// URL requirements ("name @ url") are rejected.
struct Requirement {
    DependencyDecl decl;
    std::vector<std::string> extras;
};

/// Throws Error{InvalidName} or Error{InvalidSpecifier}.
Requirement parse_requirement(std::string_view text);

}  // namespace envcheck
