#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "envcheck/env.hpp"
#include "envcheck/imports.hpp"
#include "envcheck/interpreter.hpp"
#include "envcheck/issues.hpp"
#include "envcheck/project.hpp"
#include "envcheck/snapshot.hpp"

namespace envcheck {

enum class CheckStatus { Loaded, AnalyzedPy3, AnalyzedPy2, BlocksBuilt, Validated };

/// "S0-loaded" ... "S4-validated".
std::string_view to_string(CheckStatus status);
std::optional<CheckStatus> parse_check_status(std::string_view text);

enum class CheckMode { Static, Live };
std::string_view to_string(CheckMode mode);

enum class CheckOutcome { Passed, Failed, Skipped };
std::string_view to_string(CheckOutcome outcome);

/// One import statement handed to an external probe.
struct ProbeImport {
    int id = 0;
    std::string statement;
};

struct ProbeOutcome {
    int id = 0;
    bool ok = false;
    std::optional<std::string> error_type;
    std::optional<std::string> error_message;
};

/// Executes import statements in the target interpreter (live mode).
using ProbeFn = std::function<std::vector<ProbeOutcome>(const std::vector<ProbeImport>&)>;

/// Interpreter versions that installed successfully, per package. Shared by
/// concurrent checks of different packages.
class SiblingCache {
public:
    void record(const NormalizedName& name, const InterpreterVersion& python);
    [[nodiscard]] std::vector<InterpreterVersion> lookup(const NormalizedName& name) const;

private:
    mutable std::mutex mu_;
    std::map<NormalizedName, std::vector<InterpreterVersion>> by_name_;
};

struct CheckOptions {
    CheckMode mode = CheckMode::Static;
    const InterpreterReleaseTable* table = nullptr;  // embedded table when null
    SiblingCache* siblings = nullptr;
    /// Replaces the project's declared dependencies (bench).
    std::optional<std::vector<DependencyDecl>> deps_override;
    /// Replaces the project's declared Python constraint (bench).
    std::optional<SpecifierSet> python_override;
    /// Required in live mode.
    ProbeFn probe;
};

struct CheckReport {
    std::string name;
    std::string version;
    CheckStatus final_status = CheckStatus::Loaded;
    /// Every status entered, in order.
    std::vector<CheckStatus> statuses;
    CheckMode mode = CheckMode::Static;
    std::map<CheckKind, CheckOutcome> checks;
    std::vector<IssueRecord> issues;
    std::optional<InterpreterVersion> chosen_python;
    std::vector<InterpreterVersion> pythons_tried;
    /// Installed distributions, name -> version.
    std::map<std::string, std::string> environment;
    /// Installation failed everywhere; later checks ran against a stand-in environment.
    bool degraded = false;
    std::vector<std::string> warnings;

    [[nodiscard]] bool validated() const { return final_status == CheckStatus::Validated; }
    [[nodiscard]] bool has(IssueKind kind) const;
};

struct InstallationResult {
    std::optional<EnvironmentModel> env;
    std::optional<InterpreterVersion> chosen_python;
    std::vector<InterpreterVersion> tried;
    std::vector<IssueRecord> issues;
};

/// Interpreter search: versions allowed by the declared constraint (initial
/// version first, then newest first), sibling successes, 2.7/3.6/3.10, then
/// the whole table. Each version is tried once. The project itself is added
/// to the returned environment.
InstallationResult run_installation_check(const ProjectModel& p, const IndexSnapshot& snapshot,
                                          const CheckOptions& options = {});

/// Candidate order used by run_installation_check (exposed for tests).
std::vector<InterpreterVersion> python_search_order(const std::optional<SpecifierSet>& declared,
                                                    const std::optional<InterpreterVersion>& initial,
                                                    const std::vector<InterpreterVersion>& siblings,
                                                    const InterpreterReleaseTable& table);

/// setup.py heuristics that hold on every interpreter: block-free imports of
/// third-party modules not covered by setup_requires (also through a local
/// package imported by setup.py), unknown setup_requires entries, and
/// module-level open() of a literal path that does not exist.
std::vector<IssueRecord> setup_script_issues(const ProjectModel& p, const IndexSnapshot& snapshot);

/// env may be null (degraded: metadata, syntax and declaration checks only).
std::vector<IssueRecord> run_dependency_check(const ProjectModel& p, const EnvironmentModel* env,
                                              const IndexSnapshot& snapshot, const CheckOptions& options = {});

std::vector<IssueRecord> run_import_validation(const ProjectModel& p, const EnvironmentModel& env,
                                               const IndexSnapshot& snapshot, const CheckOptions& options = {});

/// Full pipeline over a project directory. Throws Error{IoError} when root is
/// not a directory.
CheckReport check_project(const std::filesystem::path& root, const ProjectIdentity& identity,
                          const IndexSnapshot& snapshot, const CheckOptions& options = {});

/// Checks <corpus_dir>/<name>-<version>. Throws Error{CorpusError} when absent.
CheckReport check_release(const NormalizedName& name, const Version& version, const std::filesystem::path& corpus_dir,
                          const IndexSnapshot& snapshot, const CheckOptions& options = {});

struct CorpusEntry {
    NormalizedName name;
    Version version;
    std::filesystem::path dir;
};

/// "<name>-<version>" subdirectories, sorted by (name, version). Entries whose
/// name does not split are skipped. Throws Error{CorpusError}.
std::vector<CorpusEntry> list_corpus(const std::filesystem::path& corpus_dir);

/// Splits "<name>-<version>" at the last dash followed by a valid version.
std::optional<std::pair<NormalizedName, Version>> split_release_dir_name(std::string_view dir_name);

/// Per-entry options hook (bench substitutes inferred declarations).
using EntryOptionsFn = std::function<CheckOptions(const CorpusEntry&, CheckOptions)>;

/// Checks every entry; packages run in parallel on up to `jobs` threads,
/// releases of one package sequentially in version order. Output is in entry
/// order regardless of `jobs`.
std::vector<CheckReport> check_corpus(const std::vector<CorpusEntry>& entries, const IndexSnapshot& snapshot,
                                      const CheckOptions& options, unsigned jobs,
                                      const EntryOptionsFn& per_entry = {});

}  // namespace envcheck
