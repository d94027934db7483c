#include "envcheck/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace envcheck {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_string()) schema_fail(where, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::optional<std::string> nullable_string(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) schema_fail(where, std::string("field '") + key + "' must be a string or null");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where, const char* key) {
    if (!v.is_array()) schema_fail(where, std::string("field '") + key + "' must be a list");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string()) schema_fail(where, std::string("field '") + key + "' must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::optional<std::vector<std::string>> optional_string_list(const json& obj, const char* key,
                                                             const std::string& where, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) schema_fail(where, std::string("missing field '") + key + "'");
        return std::nullopt;
    }
    if (it->is_null()) return std::nullopt;
    return string_list(*it, where, key);
}

template <typename Fn>
auto rethrow_as_schema(const std::string& where, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SchemaError) throw;
        schema_fail(where, e.what());
    }
}

json optional_list_to_json(const std::optional<std::vector<std::string>>& list) {
    if (!list) return nullptr;
    return *list;
}

}  // namespace

std::vector<std::string> ReleaseRecord::provided_modules() const {
    if (top_level_modules) return *top_level_modules;
    std::string module = name.value();
    std::replace(module.begin(), module.end(), '-', '_');
    return {module};
}

IndexSnapshot::IndexSnapshot(Date snapshot_date, PackageMap packages, std::vector<std::string> warnings)
    : snapshot_date_(snapshot_date), packages_(std::move(packages)), warnings_(std::move(warnings)) {
    for (auto& [name, releases] : packages_) {
        std::sort(releases.begin(), releases.end(),
                  [](const ReleaseRecord& a, const ReleaseRecord& b) { return a.version < b.version; });
        for (std::size_t i = 0; i < releases.size(); ++i) {
            if (releases[i].name != name) {
                schema_fail(name.value(), "release recorded under a different name '" + releases[i].name.value() + "'");
            }
            if (i > 0 && releases[i - 1].version == releases[i].version) {
                throw Error(ErrorCode::DuplicateRelease, name.value() + " " + releases[i].version.raw() + " and " +
                                                             releases[i - 1].version.raw());
            }
            if (std::chrono::sys_days{releases[i].release_date} > std::chrono::sys_days{snapshot_date_}) {
                schema_fail(name.value() + " " + releases[i].version.raw(),
                            "released " + format_date(releases[i].release_date) + ", after snapshot date " +
                                format_date(snapshot_date_));
            }
        }
    }
}

const std::vector<ReleaseRecord>* IndexSnapshot::find(const NormalizedName& name) const {
    auto it = packages_.find(name);
    return it == packages_.end() ? nullptr : &it->second;
}

const ReleaseRecord* IndexSnapshot::find_release(const NormalizedName& name, const Version& version) const {
    const auto* releases = find(name);
    if (!releases) return nullptr;
    auto it = std::lower_bound(releases->begin(), releases->end(), version,
                               [](const ReleaseRecord& r, const Version& v) { return r.version < v; });
    if (it == releases->end() || it->version != version) return nullptr;
    return &*it;
}

NoSatisfyingVersionError::NoSatisfyingVersionError(NormalizedName name, SpecifierSet constraint,
                                                   std::optional<Version> available_max)
    : Error(ErrorCode::NoSatisfyingVersion,
            "no version of " + name.value() + " satisfies '" + constraint.str() + "' (latest available: " +
                (available_max ? available_max->raw() : std::string("none")) + ")"),
      name_(std::move(name)),
      constraint_(std::move(constraint)),
      available_max_(std::move(available_max)) {}

ReleaseRecord parse_release_record(const NormalizedName& name, const json& entry) {
    const std::string where = name.value();
    if (!entry.is_object()) schema_fail(where, "release entry must be an object");
    ReleaseRecord rel;
    rel.name = name;
    const std::string version_text = string_field(entry, "version", where);
    const std::string at = where + " " + version_text;
    rel.version = Version::parse(version_text);  // InvalidVersion handled by the caller
    rel.release_date = parse_date(string_field(entry, "release_date", at));
    if (auto rp = nullable_string(entry, "requires_python", at)) {
        rel.requires_python = rethrow_as_schema(at, [&] { return SpecifierSet::parse(*rp); });
    }
    const auto& deps = field(entry, "requires_dist", at);
    if (!deps.is_array()) schema_fail(at, "field 'requires_dist' must be a list");
    for (const auto& dep : deps) {
        if (!dep.is_object()) schema_fail(at, "requires_dist entries must be objects");
        DependencyDecl decl;
        const std::string dep_name = string_field(dep, "name", at);
        decl.name = rethrow_as_schema(at, [&] { return normalize_name(dep_name); });
        const std::string constraint = string_field(dep, "constraint", at);
        decl.constraint = rethrow_as_schema(at, [&] { return SpecifierSet::parse(constraint); });
        decl.marker = nullable_string(dep, "marker", at);
        rel.requires_dist.push_back(std::move(decl));
    }
    rel.classifiers = string_list(field(entry, "classifiers", at), at, "classifiers");
    rel.top_level_modules = optional_string_list(entry, "top_level_modules", at, true);
    const auto& has_source = field(entry, "has_source", at);
    if (!has_source.is_boolean()) schema_fail(at, "field 'has_source' must be a boolean");
    rel.has_source = has_source.get<bool>();
    rel.submodules = optional_string_list(entry, "submodules", at, false);
    rel.import_requires = optional_string_list(entry, "import_requires", at, false);
    if (auto it = entry.find("import_errors"); it != entry.end()) {
        if (!it->is_array()) schema_fail(at, "field 'import_errors' must be a list");
        for (const auto& e : *it) {
            if (!e.is_object()) schema_fail(at, "import_errors entries must be objects");
            ImportErrorRule rule;
            rule.module = string_field(e, "module", at);
            rule.error_type = string_field(e, "error_type", at);
            rule.message = string_field(e, "message", at);
            if (auto w = e.find("when"); w != e.end() && !w->is_null()) {
                if (!w->is_object()) schema_fail(at, "import_errors 'when' must be an object or null");
                const std::string when_name = string_field(*w, "name", at);
                rule.when_name = rethrow_as_schema(at, [&] { return normalize_name(when_name); });
                const std::string constraint = string_field(*w, "constraint", at);
                rule.when_constraint = rethrow_as_schema(at, [&] { return SpecifierSet::parse(constraint); });
            }
            rel.import_errors.push_back(std::move(rule));
        }
    }
    return rel;
}

json release_to_json(const ReleaseRecord& rel) {
    json deps = json::array();
    for (const auto& d : rel.requires_dist) {
        deps.push_back({{"name", d.name.value()},
                        {"constraint", d.constraint.str()},
                        {"marker", d.marker ? json(*d.marker) : json(nullptr)}});
    }
    json out = {
        {"version", rel.version.raw()},
        {"release_date", format_date(rel.release_date)},
        {"requires_python", rel.requires_python ? json(rel.requires_python->str()) : json(nullptr)},
        {"requires_dist", deps},
        {"classifiers", rel.classifiers},
        {"top_level_modules", optional_list_to_json(rel.top_level_modules)},
        {"has_source", rel.has_source},
    };
    if (rel.submodules) out["submodules"] = *rel.submodules;
    if (rel.import_requires) out["import_requires"] = *rel.import_requires;
    if (!rel.import_errors.empty()) {
        json errors = json::array();
        for (const auto& r : rel.import_errors) {
            json when = nullptr;
            if (r.when_name) when = {{"name", r.when_name->value()}, {"constraint", r.when_constraint.str()}};
            errors.push_back({{"module", r.module}, {"error_type", r.error_type}, {"message", r.message}, {"when", when}});
        }
        out["import_errors"] = errors;
    }
    return out;
}

IndexSnapshot parse_snapshot(const json& doc) {
    if (!doc.is_object()) schema_fail("snapshot", "top level must be an object");
    const Date snapshot_date = parse_date(string_field(doc, "snapshot_date", "snapshot"));
    const auto& packages = field(doc, "packages", "snapshot");
    if (!packages.is_object()) schema_fail("snapshot", "field 'packages' must be an object");

    IndexSnapshot::PackageMap map;
    std::vector<std::string> warnings;
    for (const auto& [raw_name, releases] : packages.items()) {
        NormalizedName name = rethrow_as_schema("snapshot", [&] { return normalize_name(raw_name); });
        if (!releases.is_array()) schema_fail(raw_name, "package entry must be a list of releases");
        auto& list = map[name];
        for (const auto& entry : releases) {
            try {
                list.push_back(parse_release_record(name, entry));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::InvalidVersion) throw;
                // legacy version strings are kept out of resolution
                warnings.push_back("skipped " + name.value() + " release: " + e.what());
            }
        }
    }
    return IndexSnapshot(snapshot_date, std::move(map), std::move(warnings));
}

IndexSnapshot load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read snapshot " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, path.string() + ": " + e.what());
    }
    return parse_snapshot(doc);
}

json snapshot_to_json(const IndexSnapshot& snapshot) {
    json packages = json::object();
    for (const auto& [name, releases] : snapshot.packages()) {
        json list = json::array();
        for (const auto& rel : releases) list.push_back(release_to_json(rel));
        packages[name.value()] = std::move(list);
    }
    return {{"snapshot_date", format_date(snapshot.snapshot_date())}, {"packages", std::move(packages)}};
}

void save_snapshot(const IndexSnapshot& snapshot, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << snapshot_to_json(snapshot).dump(2) << '\n';
}

std::optional<InterpreterVersion> classifier_python_version(const std::vector<std::string>& classifiers) {
    static constexpr std::string_view kPrefix = "Programming Language :: Python :: ";
    std::optional<InterpreterVersion> best;
    for (const auto& c : classifiers) {
        if (!c.starts_with(kPrefix)) continue;
        std::string_view rest = std::string_view(c).substr(kPrefix.size());
        // "3", "3 :: Only" and "Implementation :: CPython" carry no X.Y
        if (rest.find(' ') != std::string_view::npos) continue;
        if (std::count(rest.begin(), rest.end(), '.') != 1) continue;
        try {
            auto v = InterpreterVersion::parse(rest);
            if (!best || v > *best) best = v;
        } catch (const Error&) {
        }
    }
    return best;
}

InterpreterVersion initial_python_version(const ReleaseRecord& rel, const IndexSnapshot& /*snapshot*/,
                                          const InterpreterReleaseTable& table) {
    if (auto declared = classifier_python_version(rel.classifiers)) return *declared;

    const auto cutoff = std::chrono::sys_days{add_days(rel.release_date, -kInitialPythonLagDays)};
    std::optional<std::pair<InterpreterVersion, Date>> best;
    for (const auto& [version, date] : table.dates()) {
        const auto released = std::chrono::sys_days{date};
        if (released > cutoff) continue;
        if (!best || released > std::chrono::sys_days{best->second} ||
            (released == std::chrono::sys_days{best->second} && version > best->first)) {
            best = {version, date};
        }
    }
    if (!best) {
        throw Error(ErrorCode::NoCandidate, "no interpreter released " + std::to_string(kInitialPythonLagDays) +
                                                " days before " + rel.name.value() + " " + rel.version.raw() + " (" +
                                                format_date(rel.release_date) + ")");
    }
    return best->first;
}

const ReleaseRecord& latest_satisfying_release(const IndexSnapshot& snapshot, const NormalizedName& name,
                                               const SpecifierSet& set) {
    const auto* releases = snapshot.find(name);
    if (!releases) throw Error(ErrorCode::UnknownPackage, name.value());
    const bool allow_pre = set.names_prerelease();
    for (auto it = releases->rbegin(); it != releases->rend(); ++it) {
        if (it->version.is_prerelease() && !allow_pre) continue;
        if (set.matches(it->version)) return *it;
    }
    std::optional<Version> max;
    if (!releases->empty()) max = releases->back().version;
    throw NoSatisfyingVersionError(name, set, max);
}

Version latest_satisfying(const IndexSnapshot& snapshot, const NormalizedName& name, const SpecifierSet& set) {
    return latest_satisfying_release(snapshot, name, set).version;
}

std::vector<std::pair<Version, Version>> detect_version_date_inversions(const IndexSnapshot& snapshot,
                                                                        const NormalizedName& name) {
    const auto* releases = snapshot.find(name);
    if (!releases) throw Error(ErrorCode::UnknownPackage, name.value());

    // Sweep in ascending version order, keeping the releases seen so far keyed
    // by date; each new release pairs with every earlier-versioned one that was
    // published strictly later.
    std::vector<std::pair<Version, Version>> out;
    std::multimap<std::chrono::sys_days, const ReleaseRecord*> seen;
    for (const auto& rel : *releases) {
        const auto date = std::chrono::sys_days{rel.release_date};
        for (auto it = seen.upper_bound(date); it != seen.end(); ++it) out.emplace_back(it->second->version, rel.version);
        seen.emplace(date, &rel);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace envcheck
