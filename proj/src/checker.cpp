#include "envcheck/checker.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "envcheck/stdlib.hpp"

namespace envcheck {

namespace fs = std::filesystem;

namespace {

const InterpreterReleaseTable& table_of(const CheckOptions& o) {
    return o.table ? *o.table : InterpreterReleaseTable::embedded();
}

const std::vector<DependencyDecl>& deps_of(const ProjectModel& p, const CheckOptions& o) {
    return o.deps_override ? *o.deps_override : p.declared_deps;
}

std::optional<SpecifierSet> python_of(const ProjectModel& p, const CheckOptions& o) {
    if (o.python_override) return o.python_override;
    return p.declared_python;
}

std::string project_label(const ProjectModel& p) {
    if (p.declared_name) return p.declared_name->value();
    return p.root.filename().string();
}

std::optional<std::string> read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string top_of(const std::string& module) { return module.substr(0, module.find('.')); }

bool is_any_stdlib(const std::string& top) {
    return is_stdlib_module(top, {2, 7}) || is_stdlib_module(top, {3, 10});
}

py::Dialect dialect_for(const InterpreterVersion& v) {
    return v.major == 2 ? py::Dialect::Legacy : py::Dialect::Modern;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string at_line(const std::string& file, int line) { return file + ":" + std::to_string(line); }

// Release record describing the project for initial_python_version.
ReleaseRecord release_view(const ProjectModel& p, const IndexSnapshot& snapshot) {
    ReleaseRecord rel;
    rel.name = p.declared_name.value_or(NormalizedName{});
    rel.version = p.declared_version.value_or(Version::parse("0"));
    rel.release_date = snapshot.snapshot_date();
    rel.classifiers = p.classifiers;
    if (p.declared_name && p.declared_version) {
        if (const auto* known = snapshot.find_release(*p.declared_name, *p.declared_version)) {
            rel.release_date = known->release_date;
            if (rel.classifiers.empty()) rel.classifiers = known->classifiers;
        }
    }
    return rel;
}

void add_project_dist(EnvironmentModel& env, const ProjectModel& p, const std::vector<DependencyDecl>& deps) {
    if (!p.declared_name || env.find(*p.declared_name)) return;
    InstalledDist self;
    self.name = *p.declared_name;
    self.version = p.declared_version.value_or(Version::parse("0"));
    self.top_level_modules = p.provided_modules;
    self.requires_dist = deps;
    env.add(std::move(self));
}

// Optimistic stand-in after installation failed everywhere: the newest
// matching release of each declared dependency, top-level modules only.
EnvironmentModel stand_in_env(const ProjectModel& p, const std::vector<DependencyDecl>& deps,
                              const IndexSnapshot& snapshot, const InterpreterVersion& python) {
    EnvironmentModel env;
    env.python_version = python;
    for (const auto& d : deps) {
        const auto* releases = snapshot.find(d.name);
        if (!releases || releases->empty() || env.find(d.name)) continue;
        const ReleaseRecord* pick = &releases->back();
        for (auto it = releases->rbegin(); it != releases->rend(); ++it) {
            if (d.constraint.matches(it->version)) {
                pick = &*it;
                break;
            }
        }
        InstalledDist dist;
        dist.name = pick->name;
        dist.version = pick->version;
        dist.top_level_modules = pick->provided_modules();
        env.add(std::move(dist));
    }
    add_project_dist(env, p, deps);
    return env;
}

struct Attempt {
    InterpreterVersion python;
    enum class Kind { SetupSyntax, Conflict, PythonRejected } kind;
    std::string evidence;
    std::string package;
};

// Block-free third-party imports of one file that setup_requires does not cover.
void unmet_build_imports(const py::Module& tree, const std::string& file, const std::set<std::string>& local,
                         const std::set<std::string>& covered, const std::string& via,
                         std::vector<IssueRecord>& out) {
    const auto nodes = collect_imports(tree, file);
    const auto expr = build_import_expr(tree, external_imports(nodes, local));
    std::set<std::string> seen;
    for (const auto& n : expr.block_free()) {
        if (n.scope != ImportScope::Module) continue;
        const std::string top = n.top_module();
        if (top.empty() || is_any_stdlib(top) || covered.contains(top) || !seen.insert(top).second) continue;
        out.push_back({IssueKind::MissingSetupRequires, at_line(file, n.line),
                       "'" + n.statement() + "' runs during setup" + via + " but no build requirement provides '" +
                           top + "'"});
    }
}

// Module-level statements, looking through with-blocks and loops.
void module_level_calls(const std::vector<py::Stmt>& body, std::vector<const py::CallSite*>& out) {
    for (const auto& s : body) {
        for (const auto& c : s.calls) out.push_back(&c);
        if (s.kind == py::StmtKind::With || s.kind == py::StmtKind::Loop) module_level_calls(s.body, out);
    }
}

IssueKind classify_static(const ImportNode& n, const ImportResolution& r, const EnvironmentModel& env,
                          const std::vector<DependencyDecl>& deps, const IndexSnapshot& snapshot,
                          std::string& evidence) {
    auto declared = [&](const NormalizedName& name) {
        return std::any_of(deps.begin(), deps.end(), [&](const DependencyDecl& d) { return d.name == name; });
    };
    const std::string stmt = n.statement();
    switch (r.kind) {
        case ResolutionKind::MissingTopLevel: {
            const std::string top = n.top_module();
            for (const auto& d : deps) {
                const InstalledDist* inst = env.find(d.name);
                if (!inst) continue;
                bool provides = false;
                if (is_valid_name(top) && normalize_name(top) == d.name) provides = true;
                if (const auto* releases = snapshot.find(d.name)) {
                    for (const auto& rel : *releases) {
                        const auto mods = rel.provided_modules();
                        if (std::find(mods.begin(), mods.end(), top) != mods.end()) provides = true;
                    }
                }
                if (provides) {
                    evidence = stmt + ": " + r.error_type + ": " + r.message + "; declared " + d.str() +
                               " resolved to " + inst->version.raw() + ", which does not provide it";
                    return IssueKind::DirectImportInconsistentWithInstalled;
                }
            }
            evidence = stmt + ": " + r.error_type + ": " + r.message + "; no declared dependency provides '" + top + "'";
            return IssueKind::MissingDirectImportDeps;
        }
        case ResolutionKind::MissingSubmodule:
            evidence = stmt + ": " + r.error_type + ": " + r.message;
            if (r.dist && declared(*r.dist)) return IssueKind::DirectImportInconsistentWithInstalled;
            evidence += "; " + (r.dist ? r.dist->value() : std::string("provider")) + " is not declared";
            return IssueKind::MissingDirectImportDeps;
        case ResolutionKind::MissingIndirect:
            evidence = stmt + ": " + r.error_type + ": " + r.message;
            return IssueKind::MissingIndirectImportModules;
        case ResolutionKind::RuntimeError:
            evidence = stmt + ": " + r.error_type + ": " + r.message;
            if (r.error_type == "ImportError" || r.error_type == "ModuleNotFoundError") {
                if (r.indirect) return IssueKind::MissingIndirectImportModules;
                return IssueKind::DirectImportInconsistentWithInstalled;
            }
            return IssueKind::OtherImportRuntimeError;
        default: break;
    }
    evidence = stmt;
    return IssueKind::OtherImportRuntimeError;
}

std::optional<std::string> missing_module_in(const std::string& message) {
    const std::string key = "No module named '";
    auto pos = message.find(key);
    if (pos == std::string::npos) return std::nullopt;
    pos += key.size();
    auto end = message.find('\'', pos);
    if (end == std::string::npos) return std::nullopt;
    return message.substr(pos, end - pos);
}

IssueKind classify_live(const ImportNode& n, const ProbeOutcome& o, const EnvironmentModel& env,
                        const std::vector<DependencyDecl>& deps, const IndexSnapshot& snapshot, std::string& evidence) {
    const std::string type = o.error_type.value_or("Error");
    const std::string msg = o.error_message.value_or("");
    evidence = n.statement() + ": " + type + (msg.empty() ? "" : ": " + msg);
    if (type != "ImportError" && type != "ModuleNotFoundError") return IssueKind::OtherImportRuntimeError;

    if (auto missing = missing_module_in(msg)) {
        const std::string missing_top = top_of(*missing);
        if (missing_top != n.top_module()) return IssueKind::MissingIndirectImportModules;
    }
    // the failure concerns the imported package itself
    std::string ignored;
    ImportResolution r = resolve_import(env, n.module_path);
    if (r.ok() || r.kind == ResolutionKind::MissingIndirect || r.kind == ResolutionKind::RuntimeError) {
        r.kind = ResolutionKind::MissingSubmodule;
        if (!r.dist) {
            auto it = env.module_index.find(n.top_module());
            if (it != env.module_index.end()) r.dist = it->second;
        }
    }
    if (r.kind == ResolutionKind::MissingSubmodule && !r.dist) r.kind = ResolutionKind::MissingTopLevel;
    return classify_static(n, r, env, deps, snapshot, ignored);
}

}  // namespace

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Loaded: return "S0-loaded";
        case CheckStatus::AnalyzedPy3: return "S1-analyzed-py3";
        case CheckStatus::AnalyzedPy2: return "S2-analyzed-py2";
        case CheckStatus::BlocksBuilt: return "S3-blocks-built";
        case CheckStatus::Validated: return "S4-validated";
    }
    return "";
}

std::optional<CheckStatus> parse_check_status(std::string_view text) {
    for (auto s : {CheckStatus::Loaded, CheckStatus::AnalyzedPy3, CheckStatus::AnalyzedPy2, CheckStatus::BlocksBuilt,
                   CheckStatus::Validated}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

std::string_view to_string(CheckMode mode) { return mode == CheckMode::Static ? "static" : "live"; }

std::string_view to_string(CheckOutcome outcome) {
    switch (outcome) {
        case CheckOutcome::Passed: return "passed";
        case CheckOutcome::Failed: return "failed";
        case CheckOutcome::Skipped: return "skipped";
    }
    return "";
}

bool CheckReport::has(IssueKind kind) const {
    return std::any_of(issues.begin(), issues.end(), [&](const IssueRecord& r) { return r.kind == kind; });
}

void SiblingCache::record(const NormalizedName& name, const InterpreterVersion& python) {
    std::lock_guard lock(mu_);
    auto& list = by_name_[name];
    if (std::find(list.begin(), list.end(), python) == list.end()) list.push_back(python);
}

std::vector<InterpreterVersion> SiblingCache::lookup(const NormalizedName& name) const {
    std::lock_guard lock(mu_);
    auto it = by_name_.find(name);
    return it == by_name_.end() ? std::vector<InterpreterVersion>{} : it->second;
}

std::vector<InterpreterVersion> python_search_order(const std::optional<SpecifierSet>& declared,
                                                    const std::optional<InterpreterVersion>& initial,
                                                    const std::vector<InterpreterVersion>& siblings,
                                                    const InterpreterReleaseTable& table) {
    std::vector<InterpreterVersion> order;
    auto push = [&](const InterpreterVersion& v) {
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    };
    auto versions = table.versions();
    std::reverse(versions.begin(), versions.end());
    if (declared) {
        if (initial && declared->matches(initial->as_version())) push(*initial);
        for (const auto& v : versions) {
            if (declared->matches(v.as_version())) push(v);
        }
    } else if (initial) {
        push(*initial);
    }
    for (const auto& v : siblings) push(v);
    for (const auto& v : {InterpreterVersion{2, 7}, InterpreterVersion{3, 6}, InterpreterVersion{3, 10}}) push(v);
    for (const auto& v : versions) push(v);
    return order;
}

std::vector<IssueRecord> setup_script_issues(const ProjectModel& p, const IndexSnapshot& snapshot) {
    std::vector<IssueRecord> out;
    if (!p.setup_script) return out;

    std::set<std::string> covered = {"setuptools", "distutils", "pkg_resources", "wheel", "setup"};
    for (const auto& d : p.setup_requires) {
        const auto* releases = snapshot.find(d.name);
        if (!releases || releases->empty()) {
            if (d.name.value() == "setuptools" || d.name.value() == "wheel") continue;
            out.push_back({IssueKind::MissingSetupRequires, d.name.value(),
                           "build requirement " + d.str() + " is not available from the index"});
            continue;
        }
        for (const auto& rel : *releases) {
            for (const auto& m : rel.provided_modules()) covered.insert(m);
        }
    }

    auto parsed = py::parse_source(*p.setup_script);
    const auto* tree = std::get_if<py::Module>(&parsed);
    if (!tree) return out;  // per-interpreter syntax failures are judged by the search

    const auto root_local = local_modules_for(p.root);
    unmet_build_imports(*tree, "setup.py", root_local, covered, "", out);

    // local packages imported by setup.py run their own module-level imports
    std::set<std::string> followed;
    for (const auto& n : collect_imports(*tree, "setup.py")) {
        if (n.relative_level != 0 || n.scope != ImportScope::Module) continue;
        const std::string top = n.top_module();
        if (!root_local.contains(top) || top == "setup" || !followed.insert(top).second) continue;
        fs::path file = p.root / top / "__init__.py";
        std::string rel = top + "/__init__.py";
        if (!fs::is_regular_file(file)) {
            file = p.root / (top + ".py");
            rel = top + ".py";
        }
        auto text = read_text(file);
        if (!text) continue;
        auto sub = py::parse_source(*text);
        const auto* subtree = std::get_if<py::Module>(&sub);
        if (!subtree) continue;
        unmet_build_imports(*subtree, rel, local_modules_for(file.parent_path()), covered,
                            " (setup.py imports " + top + ")", out);
    }

    std::vector<const py::CallSite*> calls;
    module_level_calls(tree->body, calls);
    for (const auto* c : calls) {
        if (c->callee != "open" && c->callee != "io.open" && c->callee != "codecs.open") continue;
        if (!c->first_literal || c->first_literal->empty()) continue;
        const fs::path target(*c->first_literal);
        if (target.is_absolute() || fs::exists(p.root / target)) continue;
        out.push_back({IssueKind::OtherSetupRuntimeError, at_line("setup.py", c->line),
                       "FileNotFoundError: [Errno 2] No such file or directory: '" + *c->first_literal + "'"});
    }
    return out;
}

InstallationResult run_installation_check(const ProjectModel& p, const IndexSnapshot& snapshot,
                                          const CheckOptions& options) {
    InstallationResult result;
    const auto& table = table_of(options);
    const auto& deps = deps_of(p, options);
    const auto declared_python = python_of(p, options);
    const std::string who = project_label(p);

    if (!p.has_dependency_source() && !options.deps_override) {
        result.issues.push_back({IssueKind::MissingConfigFiles, who,
                                 p.setup_script ? "only setup.py found; no static dependency declaration"
                                                : "no requirements.txt, setup.cfg, pyproject.toml or metadata directory"});
        return result;
    }
    result.issues = setup_script_issues(p, snapshot);
    if (!result.issues.empty()) return result;

    std::optional<InterpreterVersion> initial;
    try {
        initial = initial_python_version(release_view(p, snapshot), snapshot, table);
    } catch (const Error&) {
    }
    std::vector<InterpreterVersion> siblings;
    if (options.siblings && p.declared_name) siblings = options.siblings->lookup(*p.declared_name);
    const auto order = python_search_order(declared_python, initial, siblings, table);

    std::vector<Attempt> attempts;
    for (const auto& py : order) {
        result.tried.push_back(py);
        if (p.setup_script) {
            auto parsed = py::parse_module(*p.setup_script, dialect_for(py));
            if (const auto* f = std::get_if<py::ParseFailure>(&parsed)) {
                attempts.push_back({py, Attempt::Kind::SetupSyntax,
                                    "setup.py:" + std::to_string(f->line) + ": " + f->message, ""});
                continue;
            }
        }
        try {
            EnvironmentModel env = simulate_install(deps, snapshot, py);
            add_project_dist(env, p, deps);
            result.env = std::move(env);
            result.chosen_python = py;
            break;
        } catch (const InstallFailure& e) {
            std::string ev = e.what();
            for (const auto& line : e.chain()) ev += "; " + line;
            attempts.push_back({py,
                                e.kind() == InstallFailureKind::DependencyConflict ? Attempt::Kind::Conflict
                                                                                   : Attempt::Kind::PythonRejected,
                                ev, e.package().value()});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnknownPackage) throw;
            attempts.push_back({py, Attempt::Kind::Conflict, e.what(), ""});
        }
    }

    auto summary = [&](std::size_t limit) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < attempts.size() && i < limit; ++i) {
            parts.push_back(attempts[i].python.str() + ": " + attempts[i].evidence);
        }
        if (attempts.size() > limit) parts.push_back("... " + std::to_string(attempts.size() - limit) + " more");
        return join(parts, " | ");
    };

    if (result.env) {
        if (declared_python && !declared_python->matches(result.chosen_python->as_version())) {
            result.issues.push_back({IssueKind::IncorrectPythonVersion, who,
                                     "declared python " + declared_python->str() +
                                         " fails on every permitted version; installs on " +
                                         result.chosen_python->str() + " (" + summary(3) + ")"});
        }
        if (options.siblings && p.declared_name) options.siblings->record(*p.declared_name, *result.chosen_python);
        return result;
    }

    // total failure
    const auto conflict = std::find_if(attempts.begin(), attempts.end(),
                                       [](const Attempt& a) { return a.kind == Attempt::Kind::Conflict; });
    const bool all_syntax = !attempts.empty() && std::all_of(attempts.begin(), attempts.end(), [](const Attempt& a) {
        return a.kind == Attempt::Kind::SetupSyntax;
    });
    if (conflict != attempts.end()) {
        result.issues.push_back({IssueKind::SetupDependencyConflict, conflict->package.empty() ? who : conflict->package,
                                 conflict->python.str() + ": " + conflict->evidence});
    } else if (all_syntax) {
        result.issues.push_back({IssueKind::OtherSetupRuntimeError, "setup.py",
                                 "SyntaxError on every interpreter: " + summary(2)});
    } else if (declared_python) {
        result.issues.push_back({IssueKind::IncorrectPythonVersion, who,
                                 "declared python " + declared_python->str() + "; no interpreter installs: " +
                                     summary(3)});
    } else {
        const auto rejected = std::find_if(attempts.begin(), attempts.end(), [](const Attempt& a) {
            return a.kind == Attempt::Kind::PythonRejected;
        });
        result.issues.push_back({IssueKind::SetupDependencyConflict,
                                 rejected != attempts.end() ? rejected->package : who,
                                 "dependencies reject every interpreter: " + summary(3)});
    }
    return result;
}

std::vector<IssueRecord> run_dependency_check(const ProjectModel& p, const EnvironmentModel* env,
                                              const IndexSnapshot& snapshot, const CheckOptions& options) {
    std::vector<IssueRecord> out = check_metadata_consistency(p);
    if (env) {
        for (auto& r : check_env_consistency(*env)) out.push_back(std::move(r));
    }
    for (const auto& sf : p.source_files) {
        if (const auto* f = sf.failure()) {
            out.push_back({IssueKind::ParsingError, at_line(sf.path, f->line),
                           std::string(py::to_string(f->reason)) + ": " + f->message});
        }
    }
    if (!p.has_source()) {
        out.push_back({IssueKind::MissingSourceCode, project_label(p), "no Python source or extension module found"});
    }
    const bool configured = p.has_dependency_source() || options.deps_override;
    if (configured && !python_of(p, options)) {
        out.push_back({IssueKind::MissingPythonVersion, project_label(p), "no Python version constraint declared"});
    }

    std::set<NormalizedName> names;
    for (const auto& d : deps_of(p, options)) names.insert(d.name);
    for (const auto& name : names) {
        if (!snapshot.find(name)) continue;
        const auto pairs = detect_version_date_inversions(snapshot, name);
        if (pairs.empty()) continue;
        std::vector<std::string> parts;
        for (const auto& [older, newer] : pairs) {
            const auto* a = snapshot.find_release(name, older);
            const auto* b = snapshot.find_release(name, newer);
            parts.push_back(older.raw() + " (" + format_date(a->release_date) + ") released after " + newer.raw() +
                            " (" + format_date(b->release_date) + ")");
        }
        out.push_back({IssueKind::VersionDateInconsistency, name.value(), join(parts, "; ")});
    }
    return out;
}

std::vector<IssueRecord> run_import_validation(const ProjectModel& p, const EnvironmentModel& env,
                                               const IndexSnapshot& snapshot, const CheckOptions& options) {
    if (options.mode == CheckMode::Live && !options.probe) {
        throw Error(ErrorCode::ProbeError, "live mode needs a probe");
    }
    const auto& deps = deps_of(p, options);
    std::vector<IssueRecord> out;
    std::vector<const SourceFile*> files;
    for (const auto& sf : p.source_files) files.push_back(&sf);
    std::sort(files.begin(), files.end(), [](const SourceFile* a, const SourceFile* b) { return a->path < b->path; });

    for (const SourceFile* sf : files) {
        const py::Module* tree = sf->tree();
        if (!tree) continue;
        const auto ext = external_imports(collect_imports(*tree, sf->path), sf->local_modules);
        if (ext.empty()) continue;
        const ImportExpr expr = build_import_expr(*tree, ext);
        const auto leaves = expr.leaves();

        std::map<int, bool> results;
        std::map<int, ImportResolution> static_res;
        std::map<int, ProbeOutcome> live_res;
        if (options.mode == CheckMode::Static) {
            for (const auto& n : leaves) {
                auto r = resolve_import(env, n.module_path);
                results[n.id] = r.ok();
                static_res.emplace(n.id, std::move(r));
            }
        } else {
            std::vector<ProbeImport> request;
            for (const auto& n : leaves) {
                if (!results.contains(n.id)) request.push_back({n.id, n.statement()});
                results[n.id] = false;
            }
            const auto outcomes = options.probe(request);
            if (outcomes.size() != request.size()) {
                throw Error(ErrorCode::ProbeError, sf->path + ": probe returned " + std::to_string(outcomes.size()) +
                                                       " results for " + std::to_string(request.size()) + " imports");
            }
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                if (outcomes[i].id != request[i].id) throw Error(ErrorCode::ProbeError, "probe result order mismatch");
                results[outcomes[i].id] = outcomes[i].ok;
                live_res.emplace(outcomes[i].id, outcomes[i]);
            }
        }
        if (evaluate_expr(expr, results)) continue;

        std::vector<ImportNode> failed_free;
        for (const auto& n : expr.block_free()) {
            if (!results.at(n.id)) failed_free.push_back(n);
        }
        if (failed_free.empty()) {
            for (const auto& child : expr.children) {
                if (child.kind != ImportExpr::Kind::Any || evaluate_expr(child, results)) continue;
                std::vector<std::string> failed;
                for (const auto& n : child.leaves()) {
                    if (results.at(n.id)) continue;
                    std::string why = options.mode == CheckMode::Static
                                          ? static_res.at(n.id).error_type
                                          : live_res.at(n.id).error_type.value_or("Error");
                    failed.push_back(n.statement() + " (" + why + ")");
                }
                out.push_back({IssueKind::MultipleVersionControlFailure, at_line(sf->path, child.line),
                               "no alternative of the import block succeeds: " + join(failed, ", ")});
            }
            continue;
        }
        for (const auto& n : failed_free) {
            std::string evidence;
            const IssueKind kind = options.mode == CheckMode::Static
                                       ? classify_static(n, static_res.at(n.id), env, deps, snapshot, evidence)
                                       : classify_live(n, live_res.at(n.id), env, deps, snapshot, evidence);
            out.push_back({kind, at_line(sf->path, n.line), evidence});
        }
    }
    return out;
}

CheckReport check_project(const fs::path& root, const ProjectIdentity& identity, const IndexSnapshot& snapshot,
                          const CheckOptions& options) {
    ProjectModel p = parse_sources(inspect_project(root, identity));

    CheckReport report;
    report.mode = options.mode;
    report.statuses = {CheckStatus::Loaded};
    report.name = p.declared_name ? p.declared_name->value() : root.filename().string();
    report.version = p.declared_version ? p.declared_version->raw() : "";
    report.warnings = p.warnings;

    InstallationResult inst = run_installation_check(p, snapshot, options);
    report.pythons_tried = inst.tried;
    report.chosen_python = inst.chosen_python;

    EnvironmentModel env;
    if (inst.env) {
        env = std::move(*inst.env);
        for (const auto& [name, dist] : env.installed) report.environment[name.value()] = dist.version.raw();
        for (const auto& w : env.warnings) report.warnings.push_back(w);
    } else {
        report.degraded = true;
        const auto& table = table_of(options);
        InterpreterVersion fallback = table.versions().empty() ? InterpreterVersion{3, 10} : table.versions().back();
        if (!inst.tried.empty()) fallback = inst.tried.front();
        env = stand_in_env(p, p.has_dependency_source() || options.deps_override ? deps_of(p, options)
                                                                                : std::vector<DependencyDecl>{},
                           snapshot, fallback);
    }

    std::vector<IssueRecord> issues = inst.issues;
    for (auto& r : run_dependency_check(p, inst.env ? &env : nullptr, snapshot, options)) issues.push_back(std::move(r));

    const bool all_parsed = !p.source_files.empty() &&
                            std::all_of(p.source_files.begin(), p.source_files.end(),
                                        [](const SourceFile& sf) { return sf.tree() != nullptr; });
    if (!p.source_files.empty()) {
        for (auto& r : run_import_validation(p, env, snapshot, options)) issues.push_back(std::move(r));
        for (const auto& sf : p.source_files) {
            if (const auto* tree = sf.tree()) {
                for (auto& w : dynamic_import_warnings(*tree, sf.path)) report.warnings.push_back(std::move(w));
            }
        }
    }

    std::stable_sort(issues.begin(), issues.end(), [](const IssueRecord& a, const IssueRecord& b) {
        return static_cast<int>(a.check()) < static_cast<int>(b.check());
    });
    report.issues = std::move(issues);

    for (auto k : {CheckKind::Installation, CheckKind::Dependency, CheckKind::ImportValidation}) {
        const bool failed = std::any_of(report.issues.begin(), report.issues.end(),
                                        [&](const IssueRecord& r) { return r.check() == k; });
        report.checks[k] = failed ? CheckOutcome::Failed : CheckOutcome::Passed;
    }
    if (p.source_files.empty()) report.checks[CheckKind::ImportValidation] = CheckOutcome::Skipped;

    if (all_parsed) {
        const bool legacy = std::any_of(p.source_files.begin(), p.source_files.end(), [](const SourceFile& sf) {
            return sf.tree()->dialect == py::Dialect::Legacy;
        });
        report.statuses.push_back(legacy ? CheckStatus::AnalyzedPy2 : CheckStatus::AnalyzedPy3);
        report.statuses.push_back(CheckStatus::BlocksBuilt);
        if (report.issues.empty()) report.statuses.push_back(CheckStatus::Validated);
    }
    report.final_status = report.statuses.back();
    return report;
}

std::optional<std::pair<NormalizedName, Version>> split_release_dir_name(std::string_view dir_name) {
    for (auto pos = dir_name.rfind('-'); pos != std::string_view::npos && pos > 0;
         pos = dir_name.rfind('-', pos - 1)) {
        const auto name = dir_name.substr(0, pos);
        const auto version = Version::try_parse(dir_name.substr(pos + 1));
        if (version && is_valid_name(name)) {
            try {
                return std::pair{normalize_name(name), *version};
            } catch (const Error&) {
                return std::nullopt;
            }
        }
        if (pos == 0) break;
    }
    return std::nullopt;
}

std::vector<CorpusEntry> list_corpus(const fs::path& corpus_dir) {
    std::error_code ec;
    if (!fs::is_directory(corpus_dir, ec)) throw Error(ErrorCode::CorpusError, corpus_dir.string() + " is not a directory");
    std::vector<CorpusEntry> out;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (!entry.is_directory()) continue;
        const std::string dir = entry.path().filename().string();
        if (dir.starts_with(".")) continue;
        if (auto split = split_release_dir_name(dir)) out.push_back({split->first, split->second, entry.path()});
    }
    std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
        if (a.name != b.name) return a.name < b.name;
        if (a.version != b.version) return a.version < b.version;
        return a.dir < b.dir;
    });
    return out;
}

CheckReport check_release(const NormalizedName& name, const Version& version, const fs::path& corpus_dir,
                          const IndexSnapshot& snapshot, const CheckOptions& options) {
    fs::path dir = corpus_dir / (name.value() + "-" + version.raw());
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        dir.clear();
        if (fs::is_directory(corpus_dir, ec)) {
            for (const auto& e : list_corpus(corpus_dir)) {
                if (e.name == name && e.version == version) {
                    dir = e.dir;
                    break;
                }
            }
        }
        if (dir.empty()) {
            throw Error(ErrorCode::CorpusError,
                        "no directory for " + name.value() + " " + version.raw() + " under " + corpus_dir.string());
        }
    }
    return check_project(dir, ProjectIdentity{name, version}, snapshot, options);
}

std::vector<CheckReport> check_corpus(const std::vector<CorpusEntry>& entries, const IndexSnapshot& snapshot,
                                      const CheckOptions& options, unsigned jobs, const EntryOptionsFn& per_entry) {
    SiblingCache local_cache;
    CheckOptions base = options;
    if (!base.siblings) base.siblings = &local_cache;

    // releases of one package in version order, so sibling hits do not depend on scheduling
    std::map<NormalizedName, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) groups[entries[i].name].push_back(i);
    std::vector<std::vector<std::size_t>> work;
    for (auto& [name, idx] : groups) {
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return entries[a].version < entries[b].version; });
        work.push_back(idx);
    }

    std::vector<CheckReport> reports(entries.size());
    std::vector<std::exception_ptr> errors(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t g = next++; g < work.size(); g = next++) {
            for (std::size_t i : work[g]) {
                try {
                    CheckOptions opts = per_entry ? per_entry(entries[i], base) : base;
                    if (!opts.siblings) opts.siblings = base.siblings;
                    reports[i] = check_project(entries[i].dir, ProjectIdentity{entries[i].name, entries[i].version},
                                               snapshot, opts);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

}  // namespace envcheck
