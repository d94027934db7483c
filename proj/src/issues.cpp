#include "envcheck/issues.hpp"

namespace envcheck {

namespace {

using enum IssueKind;
using C = IssueCategory;
using K = CheckKind;

constexpr std::array<TaxonomyRow, kIssueKindCount> kRows = {{
    {MissingConfigFiles, C::IncompleteConfiguration, K::Installation, true, "MissingConfigFiles",
     "Missing configuration files"},
    {MissingSetupRequires, C::IncompleteConfiguration, K::Installation, true, "MissingSetupRequires",
     "Missing required libraries for setup"},
    {MissingPythonVersion, C::IncompleteConfiguration, K::Dependency, false, "MissingPythonVersion",
     "Missing Python versions"},
    {MissingDirectImportDeps, C::IncompleteConfiguration, K::ImportValidation, false, "MissingDirectImportDeps",
     "Missing required libraries for direct imports"},
    {SetupDependencyConflict, C::IncorrectConfiguration, K::Installation, true, "SetupDependencyConflict",
     "Dependency conflicts in setup"},
    {IncorrectPythonVersion, C::IncorrectConfiguration, K::Installation, true, "IncorrectPythonVersion",
     "Incorrect Python versions"},
    {OtherSetupRuntimeError, C::IncorrectConfiguration, K::Installation, true, "OtherSetupRuntimeError",
     "Other run-time errors in setup"},
    {MetadataInconsistency, C::IncorrectConfiguration, K::Dependency, false, "MetadataInconsistency",
     "Inconsistent configurations with metadata"},
    {VersionDateInconsistency, C::IncorrectConfiguration, K::Dependency, false, "VersionDateInconsistency",
     "Inconsistent version numbers with release dates"},
    {MissingIndirectImportModules, C::IncorrectConfiguration, K::ImportValidation, false,
     "MissingIndirectImportModules", "Missing required modules for indirect imports"},
    {DirectImportInconsistentWithInstalled, C::IncorrectConfiguration, K::ImportValidation, false,
     "DirectImportInconsistentWithInstalled", "Inconsistent modules in direct imports with installed dependencies"},
    {OtherImportRuntimeError, C::IncorrectConfiguration, K::ImportValidation, false, "OtherImportRuntimeError",
     "Other run-time errors in imports"},
    {MissingSourceCode, C::IncorrectCode, K::Dependency, true, "MissingSourceCode", "Missing source code"},
    {ParsingError, C::IncorrectCode, K::Dependency, true, "ParsingError", "Parsing error"},
    {MultipleVersionControlFailure, C::IncorrectCode, K::ImportValidation, false, "MultipleVersionControlFailure",
     "Multiple version control failure"},
}};

}  // namespace

const std::array<TaxonomyRow, kIssueKindCount>& taxonomy() { return kRows; }

const TaxonomyRow& taxonomy_row(IssueKind kind) { return kRows[static_cast<std::size_t>(kind)]; }

std::string_view to_string(IssueKind kind) { return taxonomy_row(kind).id; }

std::string_view to_string(IssueCategory category) {
    switch (category) {
        case C::IncompleteConfiguration: return "IncompleteConfiguration";
        case C::IncorrectConfiguration: return "IncorrectConfiguration";
        case C::IncorrectCode: return "IncorrectCode";
    }
    return "";
}

std::string_view to_string(CheckKind check) {
    switch (check) {
        case K::Installation: return "installation";
        case K::Dependency: return "dependency";
        case K::ImportValidation: return "import-validation";
    }
    return "";
}

std::optional<IssueKind> parse_issue_kind(std::string_view id) {
    for (const auto& row : kRows) {
        if (row.id == id) return row.kind;
    }
    return std::nullopt;
}

std::optional<IssueCategory> parse_issue_category(std::string_view id) {
    for (auto c : {C::IncompleteConfiguration, C::IncorrectConfiguration, C::IncorrectCode}) {
        if (to_string(c) == id) return c;
    }
    return std::nullopt;
}

std::optional<CheckKind> parse_check_kind(std::string_view id) {
    for (auto k : {K::Installation, K::Dependency, K::ImportValidation}) {
        if (to_string(k) == id) return k;
    }
    return std::nullopt;
}

}  // namespace envcheck
