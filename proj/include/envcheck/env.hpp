#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "envcheck/error.hpp"
#include "envcheck/interpreter.hpp"
#include "envcheck/issues.hpp"
#include "envcheck/names.hpp"
#include "envcheck/requirement.hpp"
#include "envcheck/snapshot.hpp"
#include "envcheck/version.hpp"

namespace envcheck {

struct InstalledDist {
    NormalizedName name;
    Version version;
    std::vector<std::string> top_level_modules;
    std::vector<DependencyDecl> requires_dist;
    /// Copied from the snapshot record when simulated; unset when scanned.
    std::optional<std::vector<std::string>> submodules;
    std::optional<std::vector<std::string>> import_requires;
    std::vector<ImportErrorRule> import_errors;
};

struct EnvironmentModel {
    InterpreterVersion python_version;
    std::map<NormalizedName, InstalledDist> installed;
    /// Top-level module -> providing distribution.
    std::map<std::string, NormalizedName> module_index;
    std::vector<std::string> warnings;

    /// Adds or replaces a distribution and indexes its modules. A module
    /// already provided by another distribution keeps its first provider.
    void add(InstalledDist dist);
    [[nodiscard]] const InstalledDist* find(const NormalizedName& name) const;
};

enum class InstallFailureKind { DependencyConflict, PythonVersionRejected };

class InstallFailure : public Error {
public:
    InstallFailure(InstallFailureKind kind, NormalizedName package, std::vector<std::string> chain,
                   const std::string& message);

    [[nodiscard]] InstallFailureKind kind() const noexcept { return kind_; }
    [[nodiscard]] const NormalizedName& package() const noexcept { return package_; }
    /// "<requirer> requires <name><constraint>" lines behind the failure.
    [[nodiscard]] const std::vector<std::string>& chain() const noexcept { return chain_; }

private:
    InstallFailureKind kind_;
    NormalizedName package_;
    std::vector<std::string> chain_;
};

/// Breadth-first install simulation. Per frontier, every pending package is
/// selected from its accumulated constraints (latest satisfying release),
/// then the selected releases' dependencies are expanded. A package whose
/// selection is later invalidated is re-selected once. Markers are evaluated
/// for `python` only; unsupported markers skip the dependency with a warning.
/// Throws InstallFailure or Error{UnknownPackage}.
EnvironmentModel simulate_install(const std::vector<DependencyDecl>& deps, const IndexSnapshot& snapshot,
                                  const InterpreterVersion& python);

/// One distribution per *.dist-info directory under site_dir. Without
/// top_level.txt, modules come from RECORD, or else an adjacent directory
/// named after the distribution (with a warning). Throws Error{ScanError}.
EnvironmentModel scan_environment(const std::filesystem::path& site_dir, const InterpreterVersion& python);

/// Python version from a "pythonX.Y" component of a site-packages path.
std::optional<InterpreterVersion> python_version_from_path(const std::filesystem::path& site_dir);

/// An issue for every requirement of an installed distribution (markers
/// passing) that is absent or installed at a version outside its constraint.
std::vector<IssueRecord> check_env_consistency(const EnvironmentModel& env);

enum class ResolutionKind { Stdlib, Resolved, MissingTopLevel, MissingSubmodule, MissingIndirect, RuntimeError };

struct ImportResolution {
    ResolutionKind kind = ResolutionKind::MissingTopLevel;
    std::optional<NormalizedName> dist;
    /// The module that could not be found (the import's own path, or a
    /// module required by the providing distribution).
    std::string missing_module;
    std::string error_type;
    std::string message;
    /// The failure happened in a module loaded by the imported distribution,
    /// not in the imported module itself.
    bool indirect = false;

    [[nodiscard]] bool ok() const { return kind == ResolutionKind::Stdlib || kind == ResolutionKind::Resolved; }
};

/// Standard library first, then the module index. Submodules are checked
/// only when the providing release lists them. Load-time module requirements
/// of the provider are followed transitively.
ImportResolution resolve_import(const EnvironmentModel& env, const std::string& module_path);

}  // namespace envcheck
