#include "envcheck/env.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "envcheck/marker.hpp"
#include "envcheck/project.hpp"
#include "envcheck/stdlib.hpp"

namespace envcheck {

namespace fs = std::filesystem;

namespace {

const std::string kRootRequirer = "project";

std::string label(const NormalizedName& name, const Version& version) { return name.value() + "==" + version.raw(); }

struct Constraint {
    SpecifierSet set;
    std::string requirer;
};

std::string describe(const NormalizedName& name, const Constraint& c) {
    return c.requirer + " requires " + name.value() + (c.set.empty() ? "" : c.set.str());
}

// Marker gate shared by install simulation and consistency checks.
// Returns false when the dependency does not apply; records unsupported markers.
bool marker_applies(const DependencyDecl& d, const InterpreterVersion& py, const std::string& requirer,
                    std::vector<std::string>& warnings) {
    if (!d.marker) return true;
    try {
        const MarkerOutcome m = evaluate_marker(*d.marker, py);
        if (!m.supported()) {
            warnings.push_back("skipped " + d.str() + " required by " + requirer + ": marker variable '" +
                               *m.unsupported_variable + "' is not modelled");
            return false;
        }
        return m.value;
    } catch (const Error& e) {
        warnings.push_back("skipped " + d.str() + " required by " + requirer + ": " + e.what());
        return false;
    }
}

std::optional<std::string> read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_ancestor_or_self(const std::string& ancestor, const std::string& module) {
    return module == ancestor || (module.size() > ancestor.size() && module.starts_with(ancestor) &&
                                  module[ancestor.size()] == '.');
}

std::string top_of(const std::string& module) { return module.substr(0, module.find('.')); }

}  // namespace

void EnvironmentModel::add(InstalledDist dist) {
    if (auto old = installed.find(dist.name); old != installed.end()) {
        for (auto it = module_index.begin(); it != module_index.end();) {
            it = it->second == dist.name ? module_index.erase(it) : std::next(it);
        }
    }
    for (const auto& m : dist.top_level_modules) {
        auto [it, inserted] = module_index.emplace(m, dist.name);
        if (!inserted && it->second != dist.name) {
            warnings.push_back("module '" + m + "' provided by both " + it->second.value() + " and " +
                               dist.name.value() + "; keeping " + it->second.value());
        }
    }
    NormalizedName key = dist.name;
    installed.insert_or_assign(std::move(key), std::move(dist));
}

const InstalledDist* EnvironmentModel::find(const NormalizedName& name) const {
    auto it = installed.find(name);
    return it == installed.end() ? nullptr : &it->second;
}

InstallFailure::InstallFailure(InstallFailureKind kind, NormalizedName package, std::vector<std::string> chain,
                               const std::string& message)
    : Error(ErrorCode::InstallFailure, message), kind_(kind), package_(std::move(package)), chain_(std::move(chain)) {}

EnvironmentModel simulate_install(const std::vector<DependencyDecl>& deps, const IndexSnapshot& snapshot,
                                  const InterpreterVersion& python) {
    EnvironmentModel env;
    env.python_version = python;
    std::map<NormalizedName, std::vector<Constraint>> constraints;
    std::map<NormalizedName, const ReleaseRecord*> selected;
    std::set<NormalizedName> reselected;
    std::set<NormalizedName> frontier;

    auto add_decl = [&](const DependencyDecl& d, const std::string& requirer) {
        if (!marker_applies(d, python, requirer, env.warnings)) return;
        constraints[d.name].push_back({d.constraint, requirer});
        auto it = selected.find(d.name);
        if (it == selected.end() || !d.constraint.matches(it->second->version)) frontier.insert(d.name);
    };
    auto chain_for = [&](const NormalizedName& name) {
        std::vector<std::string> chain;
        for (const auto& c : constraints[name]) chain.push_back(describe(name, c));
        return chain;
    };
    auto merged = [&](const NormalizedName& name) {
        SpecifierSet set;
        for (const auto& c : constraints[name]) set.merge(c.set);
        return set;
    };

    for (const auto& d : deps) add_decl(d, kRootRequirer);

    while (!frontier.empty()) {
        const std::set<NormalizedName> current = std::move(frontier);
        frontier.clear();
        std::vector<NormalizedName> fresh;
        for (const auto& name : current) {
            SpecifierSet set = merged(name);
            if (auto it = selected.find(name); it != selected.end()) {
                if (set.matches(it->second->version)) continue;
                if (reselected.contains(name)) {
                    throw InstallFailure(InstallFailureKind::DependencyConflict, name, chain_for(name),
                                         "conflicting requirements for " + name.value() + " ('" + set.str() +
                                             "') after re-selection");
                }
                reselected.insert(name);
                const std::string old = label(name, it->second->version);
                for (auto& [n, list] : constraints) {
                    std::erase_if(list, [&](const Constraint& c) { return c.requirer == old; });
                }
                selected.erase(it);
                set = merged(name);
            }
            const ReleaseRecord* rel = nullptr;
            try {
                rel = &latest_satisfying_release(snapshot, name, set);
            } catch (const NoSatisfyingVersionError& e) {
                throw InstallFailure(InstallFailureKind::DependencyConflict, name, chain_for(name),
                                     "could not find a version that satisfies the requirement " + name.value() +
                                         set.str() + " (latest available: " +
                                         (e.available_max() ? e.available_max()->raw() : std::string("none")) + ")");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::UnknownPackage) throw;
                auto chain = chain_for(name);
                throw Error(ErrorCode::UnknownPackage,
                            name.value() + " is not in the index" + (chain.empty() ? "" : " (" + chain.front() + ")"));
            }
            if (rel->requires_python && !rel->requires_python->matches(python.as_version())) {
                throw InstallFailure(InstallFailureKind::PythonVersionRejected, name, chain_for(name),
                                     label(name, rel->version) + " requires Python '" + rel->requires_python->str() +
                                         "', interpreter is " + python.str());
            }
            selected[name] = rel;
            fresh.push_back(name);
        }
        for (const auto& name : fresh) {
            const ReleaseRecord* rel = selected[name];
            for (const auto& d : rel->requires_dist) add_decl(d, label(name, rel->version));
        }
    }

    // every constraint that targeted a package holds for its final version
    for (const auto& [name, rel] : selected) {
        for (const auto& c : constraints[name]) {
            if (!c.set.matches(rel->version)) {
                throw InstallFailure(InstallFailureKind::DependencyConflict, name, chain_for(name),
                                     describe(name, c) + " but " + label(name, rel->version) + " was selected");
            }
        }
    }

    for (const auto& [name, rel] : selected) {
        InstalledDist d;
        d.name = name;
        d.version = rel->version;
        d.top_level_modules = rel->provided_modules();
        d.requires_dist = rel->requires_dist;
        d.submodules = rel->submodules;
        d.import_requires = rel->import_requires;
        d.import_errors = rel->import_errors;
        env.add(std::move(d));
    }
    return env;
}

std::optional<InterpreterVersion> python_version_from_path(const fs::path& site_dir) {
    static const std::regex re(R"(python(\d)\.(\d+))");
    for (const auto& part : site_dir) {
        std::smatch m;
        const std::string s = part.string();
        if (std::regex_match(s, m, re)) return InterpreterVersion{std::stoi(m[1]), std::stoi(m[2])};
    }
    return std::nullopt;
}

EnvironmentModel scan_environment(const fs::path& site_dir, const InterpreterVersion& python) {
    std::error_code ec;
    if (!fs::is_directory(site_dir, ec)) throw Error(ErrorCode::ScanError, site_dir.string() + " is not a directory");
    EnvironmentModel env;
    env.python_version = python;

    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(site_dir, ec)) {
        if (entry.is_directory() && entry.path().filename().string().ends_with(".dist-info")) dirs.push_back(entry.path());
    }
    if (ec) throw Error(ErrorCode::ScanError, site_dir.string() + ": " + ec.message());
    std::sort(dirs.begin(), dirs.end());

    for (const auto& dir : dirs) {
        const std::string dir_name = dir.filename().string();
        auto metadata = read_text(dir / "METADATA");
        if (!metadata) throw Error(ErrorCode::ScanError, dir_name + ": METADATA is missing or unreadable");
        DistMetadata meta = parse_metadata_text(*metadata);
        auto parts = split_metadata_dir_name(dir_name);
        InstalledDist d;
        try {
            const std::string name = meta.name ? *meta.name : (parts ? parts->first : std::string());
            const std::string version = meta.version ? *meta.version : (parts ? parts->second : std::string());
            d.name = normalize_name(name);
            d.version = Version::parse(version);
        } catch (const Error& e) {
            throw Error(ErrorCode::ScanError, dir_name + ": " + e.what());
        }
        for (const auto& r : meta.requires_dist) {
            try {
                d.requires_dist.push_back(parse_requirement(r).decl);
            } catch (const Error& e) {
                env.warnings.push_back(dir_name + ": skipped requirement '" + r + "': " + e.what());
            }
        }
        if (auto top = read_text(dir / "top_level.txt")) {
            std::istringstream lines(*top);
            for (std::string line; std::getline(lines, line);) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
                if (!line.empty()) d.top_level_modules.push_back(line);
            }
        } else {
            std::set<std::string> modules;
            if (auto record = read_text(dir / "RECORD")) {
                std::istringstream lines(*record);
                for (std::string line; std::getline(lines, line);) {
                    const std::string path = line.substr(0, line.find(','));
                    if (path.empty() || path.starts_with("..") || path.starts_with("/")) continue;
                    const auto slash = path.find('/');
                    std::string first = path.substr(0, slash);
                    if (first.ends_with(".dist-info") || first.ends_with(".data") || first == "__pycache__") continue;
                    if (slash == std::string::npos) {
                        if (first.ends_with(".py")) modules.insert(first.substr(0, first.size() - 3));
                        else if (first.ends_with(".so") || first.ends_with(".pyd")) modules.insert(first.substr(0, first.find('.')));
                    } else {
                        modules.insert(first);
                    }
                }
                env.warnings.push_back(dir_name + ": no top_level.txt; modules taken from RECORD");
            } else {
                std::string guess = d.name.value();
                std::replace(guess.begin(), guess.end(), '-', '_');
                if (fs::is_directory(site_dir / guess, ec) || fs::is_regular_file(site_dir / (guess + ".py"), ec)) {
                    modules.insert(guess);
                }
                env.warnings.push_back(dir_name + ": no top_level.txt or RECORD; modules inferred from adjacent " +
                                       (modules.empty() ? "entries (none found)" : "directory '" + guess + "'"));
            }
            d.top_level_modules.assign(modules.begin(), modules.end());
        }
        env.add(std::move(d));
    }
    return env;
}

std::vector<IssueRecord> check_env_consistency(const EnvironmentModel& env) {
    std::vector<IssueRecord> out;
    std::vector<std::string> ignored;
    for (const auto& [name, dist] : env.installed) {
        const std::string requirer = label(name, dist.version);
        for (const auto& r : dist.requires_dist) {
            if (!marker_applies(r, env.python_version, requirer, ignored)) continue;
            const InstalledDist* dep = env.find(r.name);
            if (dep == nullptr) {
                out.push_back({IssueKind::MissingIndirectImportModules, name.value(),
                               requirer + " requires " + r.name.value() + r.constraint.str() + ", which is not installed"});
            } else if (!r.constraint.matches(dep->version)) {
                out.push_back({IssueKind::MissingIndirectImportModules, name.value(),
                               requirer + " requires " + r.name.value() + r.constraint.str() + " but " +
                                   label(dep->name, dep->version) + " is installed"});
            }
        }
    }
    return out;
}

ImportResolution resolve_import(const EnvironmentModel& env, const std::string& module_path) {
    ImportResolution out;
    const std::string top = top_of(module_path);
    if (is_stdlib_module(top, env.python_version)) {
        out.kind = ResolutionKind::Stdlib;
        return out;
    }
    auto it = env.module_index.find(top);
    if (it == env.module_index.end()) {
        out.kind = ResolutionKind::MissingTopLevel;
        out.missing_module = top;
        out.error_type = "ModuleNotFoundError";
        out.message = "No module named '" + top + "'";
        return out;
    }
    const InstalledDist& dist = env.installed.at(it->second);
    out.dist = dist.name;

    if (dist.submodules && module_path != top) {
        const auto& subs = *dist.submodules;
        const bool present = std::any_of(subs.begin(), subs.end(), [&](const std::string& s) {
            return is_ancestor_or_self(module_path, s);
        });
        if (!present) {
            out.kind = ResolutionKind::MissingSubmodule;
            out.missing_module = module_path;
            out.error_type = "ModuleNotFoundError";
            out.message = "No module named '" + module_path + "' in " + label(dist.name, dist.version);
            return out;
        }
    }

    // load-time imports of the provider, followed through their own providers
    std::set<std::string> visited;
    std::vector<std::pair<const InstalledDist*, std::string>> pending;  // (importer, required module)
    auto enqueue = [&](const InstalledDist& d) {
        if (!d.import_requires) return;
        for (const auto& m : *d.import_requires) pending.emplace_back(&d, m);
    };
    enqueue(dist);
    visited.insert(dist.name.value());
    std::vector<std::pair<const InstalledDist*, std::string>> executed = {{&dist, module_path}};
    for (std::size_t i = 0; i < pending.size(); ++i) {
        const auto [importer, required] = pending[i];
        const std::string req_top = top_of(required);
        if (is_stdlib_module(req_top, env.python_version)) continue;
        auto provider = env.module_index.find(req_top);
        if (provider == env.module_index.end()) {
            out.kind = ResolutionKind::MissingIndirect;
            out.indirect = true;
            out.missing_module = req_top;
            out.error_type = "ModuleNotFoundError";
            out.message = "No module named '" + req_top + "' (imported by " + label(importer->name, importer->version) +
                          ")";
            return out;
        }
        const InstalledDist& next = env.installed.at(provider->second);
        executed.emplace_back(&next, required);
        if (visited.insert(next.name.value()).second) enqueue(next);
    }

    for (std::size_t i = 0; i < executed.size(); ++i) {
        const auto& [d, mod] = executed[i];
        for (const auto& rule : d->import_errors) {
            if (!is_ancestor_or_self(rule.module, mod)) continue;
            if (rule.when_name) {
                const InstalledDist* cond = env.find(*rule.when_name);
                if (cond == nullptr || !rule.when_constraint.matches(cond->version)) continue;
            }
            out.kind = ResolutionKind::RuntimeError;
            out.indirect = i > 0;
            out.missing_module = rule.module;
            out.error_type = rule.error_type;
            out.message = rule.message;
            return out;
        }
    }
    out.kind = ResolutionKind::Resolved;
    return out;
}

}  // namespace envcheck
