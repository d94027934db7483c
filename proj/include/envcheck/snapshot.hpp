#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "envcheck/dates.hpp"
#include "envcheck/error.hpp"
#include "envcheck/interpreter.hpp"
#include "envcheck/names.hpp"
#include "envcheck/requirement.hpp"
#include "envcheck/specifier.hpp"
#include "envcheck/version.hpp"

namespace envcheck {

/// A load-time failure of one of the release's modules. With `when_name` set,
/// the failure only happens while that distribution is installed at a version
/// matching `when_constraint`.
struct ImportErrorRule {
    std::string module;
    std::string error_type;
    std::string message;
    std::optional<NormalizedName> when_name;
    SpecifierSet when_constraint;
};

/// One published release of a package as recorded by the index.
struct ReleaseRecord {
    NormalizedName name;
    Version version;
    Date release_date;
    std::optional<SpecifierSet> requires_python;
    std::vector<DependencyDecl> requires_dist;
    std::vector<std::string> classifiers;
    std::optional<std::vector<std::string>> top_level_modules;
    bool has_source = false;
    /// Optional extensions used by static import resolution. `submodules` lists
    /// dotted module paths shipped by the release; `import_requires` lists the
    /// top-level modules its code imports at load time.
    std::optional<std::vector<std::string>> submodules;
    std::optional<std::vector<std::string>> import_requires;
    /// Extension: modules of this release that fail at import time.
    std::vector<ImportErrorRule> import_errors;

    /// top_level_modules, or the name with dashes turned into underscores.
    [[nodiscard]] std::vector<std::string> provided_modules() const;
};

/// Immutable, dated copy of index metadata.
class IndexSnapshot {
public:
    using PackageMap = std::map<NormalizedName, std::vector<ReleaseRecord>>;

    IndexSnapshot() = default;
    /// Sorts each package ascending by version. Throws Error{DuplicateRelease}
    /// or Error{SchemaError} for releases dated after `snapshot_date`.
    IndexSnapshot(Date snapshot_date, PackageMap packages, std::vector<std::string> warnings = {});

    [[nodiscard]] const Date& snapshot_date() const noexcept { return snapshot_date_; }
    [[nodiscard]] const PackageMap& packages() const noexcept { return packages_; }
    [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// Releases of `name`, ascending; nullptr when absent.
    [[nodiscard]] const std::vector<ReleaseRecord>* find(const NormalizedName& name) const;
    [[nodiscard]] const ReleaseRecord* find_release(const NormalizedName& name, const Version& version) const;

private:
    Date snapshot_date_{};
    PackageMap packages_;
    std::vector<std::string> warnings_;
};

/// Raised by latest_satisfying when the constraint excludes every release.
class NoSatisfyingVersionError : public Error {
public:
    NoSatisfyingVersionError(NormalizedName name, SpecifierSet constraint, std::optional<Version> available_max);

    [[nodiscard]] const NormalizedName& name() const noexcept { return name_; }
    [[nodiscard]] const SpecifierSet& constraint() const noexcept { return constraint_; }
    [[nodiscard]] const std::optional<Version>& available_max() const noexcept { return available_max_; }

private:
    NormalizedName name_;
    SpecifierSet constraint_;
    std::optional<Version> available_max_;
};

IndexSnapshot parse_snapshot(const nlohmann::json& doc);
/// Throws Error{IoError}, Error{SchemaError}, Error{DuplicateRelease}.
IndexSnapshot load_snapshot(const std::filesystem::path& path);
nlohmann::json snapshot_to_json(const IndexSnapshot& snapshot);
void save_snapshot(const IndexSnapshot& snapshot, const std::filesystem::path& path);

ReleaseRecord parse_release_record(const NormalizedName& name, const nlohmann::json& entry);
nlohmann::json release_to_json(const ReleaseRecord& rel);

/// Highest "Programming Language :: Python :: X.Y" classifier when present,
/// otherwise the most recently released interpreter dated at least 180 days
/// before the release. Throws Error{NoCandidate}.
InterpreterVersion initial_python_version(const ReleaseRecord& rel, const IndexSnapshot& snapshot,
                                          const InterpreterReleaseTable& table);

/// Days an interpreter must predate a release to count as its initial version.
inline constexpr long kInitialPythonLagDays = 180;

/// Highest classifier-declared interpreter version, if any.
std::optional<InterpreterVersion> classifier_python_version(const std::vector<std::string>& classifiers);

/// Highest release matching `set`. Pre/dev releases are only considered when
/// the set names one. Throws Error{UnknownPackage} or NoSatisfyingVersionError.
const ReleaseRecord& latest_satisfying_release(const IndexSnapshot& snapshot, const NormalizedName& name,
                                               const SpecifierSet& set);
Version latest_satisfying(const IndexSnapshot& snapshot, const NormalizedName& name, const SpecifierSet& set);

/// Pairs (older-version, newer-version) whose release dates run the other way:
/// version(a) < version(b) while release_date(a) > release_date(b).
/// Throws Error{UnknownPackage}.
std::vector<std::pair<Version, Version>> detect_version_date_inversions(const IndexSnapshot& snapshot,
                                                                        const NormalizedName& name);

}  // namespace envcheck
