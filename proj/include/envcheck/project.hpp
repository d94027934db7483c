#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "envcheck/issues.hpp"
#include "envcheck/names.hpp"
#include "envcheck/pysyntax.hpp"
#include "envcheck/requirement.hpp"
#include "envcheck/specifier.hpp"
#include "envcheck/version.hpp"

namespace envcheck {

struct SourceFile {
    /// Relative to the project root, '/'-separated.
    std::string path;
    /// monostate until parse_sources runs.
    std::variant<std::monostate, py::Module, py::ParseFailure> parse_result;
    /// Module names visible from the file's own directory.
    std::set<std::string> local_modules;

    [[nodiscard]] const py::Module* tree() const { return std::get_if<py::Module>(&parse_result); }
    [[nodiscard]] const py::ParseFailure* failure() const { return std::get_if<py::ParseFailure>(&parse_result); }
};

struct ProjectModel {
    std::filesystem::path root;
    std::optional<NormalizedName> declared_name;
    std::optional<Version> declared_version;
    std::optional<SpecifierSet> declared_python;
    std::vector<DependencyDecl> declared_deps;
    /// "<name>-<version>.dist-info" (or an .egg-info directory) found at the root.
    std::optional<std::string> metadata_dir_name;
    std::vector<SourceFile> source_files;
    /// Contents of top_level.txt when present.
    std::optional<std::vector<std::string>> top_level_declared;

    std::vector<std::string> classifiers;
    /// Build-time requirements (setup.cfg setup_requires, pyproject build-system requires).
    std::vector<DependencyDecl> setup_requires;
    /// Text of setup.py when the project has one; never part of source_files.
    std::optional<std::string> setup_script;
    /// Files the declarations were read from, e.g. "requirements.txt".
    std::vector<std::string> dependency_sources;
    /// Top-level modules the project itself provides (declared or discovered).
    std::vector<std::string> provided_modules;
    /// Declared top-level modules with no matching source entry.
    std::vector<std::string> unmatched_top_level;
    std::vector<std::string> warnings;
    /// A located top-level module is a compiled extension.
    bool has_binary_modules = false;

    [[nodiscard]] bool has_dependency_source() const { return !dependency_sources.empty(); }
    [[nodiscard]] bool has_source() const { return !source_files.empty() || has_binary_modules; }
};

/// Identity supplied by the caller (corpus directory name or --release flag);
/// used when the project declares no name or version of its own.
struct ProjectIdentity {
    std::optional<NormalizedName> name;
    std::optional<Version> version;
};

/// Reads declarations and enumerates sources without raising for missing
/// configuration or source; see has_dependency_source() / has_source().
/// Throws Error{IoError} when root is not a directory.
ProjectModel inspect_project(const std::filesystem::path& root, const ProjectIdentity& identity = {});

/// inspect_project, then throws Error{MissingConfigFiles} when no dependency
/// declaration source exists and Error{MissingSourceCode} when no source can
/// be located.
ProjectModel load_project(const std::filesystem::path& root, const ProjectIdentity& identity = {});

struct DirEntry {
    std::string name;
    bool is_dir = false;
    /// Directory containing __init__.py.
    bool has_package_marker = false;
};

/// Stems of *.py files, package directories, and binary extension modules
/// (*.so / *.pyd, cut at the first dot).
std::set<std::string> local_modules_from_entries(const std::vector<DirEntry>& entries);
std::set<std::string> local_modules_for(const std::filesystem::path& dir);

/// MetadataInconsistency when the metadata directory name disagrees with the
/// declared name/version, or declared top-level modules have no source entry.
std::vector<IssueRecord> check_metadata_consistency(const ProjectModel& p);

/// Parses every source file (in parallel); failures are recorded per file.
ProjectModel parse_sources(ProjectModel p);

/// Requirements-file subset: one requirement per line, '#' comments, trailing
/// backslash continuation. Options, editable installs, URL and path
/// requirements are skipped with a warning; extras are dropped with a warning.
std::vector<DependencyDecl> parse_requirements_text(std::string_view text, std::vector<std::string>& warnings,
                                                    std::string_view origin = "requirements.txt");

/// Core-metadata header block (METADATA / PKG-INFO).
struct DistMetadata {
    std::optional<std::string> name;
    std::optional<std::string> version;
    std::optional<std::string> requires_python;
    std::vector<std::string> requires_dist;
    std::vector<std::string> classifiers;
};
DistMetadata parse_metadata_text(std::string_view text);

/// Splits "<name>-<version>.dist-info" (or .egg-info); nullopt when the stem
/// has no version part.
std::optional<std::pair<std::string, std::string>> split_metadata_dir_name(std::string_view dir_name);

}  // namespace envcheck
