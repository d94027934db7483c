#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace envcheck {

enum class IssueKind {
    MissingConfigFiles,
    MissingSetupRequires,
    MissingPythonVersion,
    MissingDirectImportDeps,
    SetupDependencyConflict,
    IncorrectPythonVersion,
    OtherSetupRuntimeError,
    MetadataInconsistency,
    VersionDateInconsistency,
    MissingIndirectImportModules,
    DirectImportInconsistentWithInstalled,
    OtherImportRuntimeError,
    MissingSourceCode,
    ParsingError,
    MultipleVersionControlFailure,
};

enum class IssueCategory { IncompleteConfiguration, IncorrectConfiguration, IncorrectCode };

enum class CheckKind { Installation, Dependency, ImportValidation };

struct TaxonomyRow {
    IssueKind kind;
    IssueCategory category;
    CheckKind check;
    bool fatal;
    std::string_view id;     // stable identifier used in reports
    std::string_view label;  // human-readable issue name
};

inline constexpr std::size_t kIssueKindCount = 15;

/// One row per issue kind, in taxonomy order.
const std::array<TaxonomyRow, kIssueKindCount>& taxonomy();
const TaxonomyRow& taxonomy_row(IssueKind kind);

std::string_view to_string(IssueKind kind);
std::string_view to_string(IssueCategory category);
std::string_view to_string(CheckKind check);
std::optional<IssueKind> parse_issue_kind(std::string_view id);
std::optional<IssueCategory> parse_issue_category(std::string_view id);
std::optional<CheckKind> parse_check_kind(std::string_view id);

struct IssueRecord {
    IssueKind kind;
    /// "path:line" for source-level issues, a package name otherwise.
    std::string location;
    std::string evidence;

    [[nodiscard]] IssueCategory category() const { return taxonomy_row(kind).category; }
    [[nodiscard]] CheckKind check() const { return taxonomy_row(kind).check; }
    [[nodiscard]] bool fatal() const { return taxonomy_row(kind).fatal; }

    friend bool operator==(const IssueRecord&, const IssueRecord&) = default;
};

}  // namespace envcheck
