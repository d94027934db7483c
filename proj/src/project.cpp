#include "envcheck/project.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "envcheck/error.hpp"

namespace envcheck {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_link(const fs::path& p) {
    std::error_code ec;
    return fs::is_symlink(fs::symlink_status(p, ec));
}

bool is_real_file(const fs::path& p) {
    std::error_code ec;
    return !is_link(p) && fs::is_regular_file(p, ec);
}

bool is_real_dir(const fs::path& p) {
    std::error_code ec;
    return !is_link(p) && fs::is_directory(p, ec);
}

bool is_binary_module_name(std::string_view file) {
    return file.ends_with(".so") || file.ends_with(".pyd");
}

void add_requirement(const std::string& text, std::optional<std::string> extra_marker, std::vector<DependencyDecl>& out,
                     std::vector<std::string>& warnings, std::string_view origin) {
    try {
        Requirement req = parse_requirement(text);
        if (!req.extras.empty()) {
            warnings.push_back(std::string(origin) + ": extras of " + req.decl.name.value() + " ignored");
        }
        if (extra_marker) {
            req.decl.marker = req.decl.marker ? "(" + *req.decl.marker + ") and (" + *extra_marker + ")" : *extra_marker;
        }
        if (std::find(out.begin(), out.end(), req.decl) == out.end()) out.push_back(std::move(req.decl));
    } catch (const Error& e) {
        warnings.push_back(std::string(origin) + ": skipped '" + text + "': " + e.what());
    }
}

// ---------------------------------------------------------------- INI / TOML subsets

using IniSections = std::map<std::string, std::map<std::string, std::string>>;

IniSections parse_ini(std::string_view text) {
    IniSections out;
    std::string section;
    std::string* current = nullptr;
    for (const auto& raw : split_lines(text)) {
        std::string stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
        const bool continuation = !raw.empty() && (raw[0] == ' ' || raw[0] == '\t');
        if (continuation && current != nullptr) {
            *current += "\n" + stripped;
            continue;
        }
        if (stripped.front() == '[' && stripped.back() == ']') {
            section = lower(trim(stripped.substr(1, stripped.size() - 2)));
            current = nullptr;
            continue;
        }
        auto sep = stripped.find_first_of("=:");
        if (sep == std::string::npos) continue;
        std::string key = lower(trim(stripped.substr(0, sep)));
        std::replace(key.begin(), key.end(), '-', '_');
        current = &out[section][key];
        *current = trim(stripped.substr(sep + 1));
    }
    return out;
}

std::vector<std::string> ini_list(const std::string& value) {
    std::vector<std::string> out;
    for (const auto& line : split_lines(value)) {
        std::string item = trim(line);
        if (!item.empty() && item[0] != '#') out.push_back(item);
    }
    return out;
}

struct TomlTables {
    std::map<std::string, std::map<std::string, std::vector<std::string>>> tables;
};

// Keys whose values are strings or arrays of strings; everything else is ignored.
TomlTables parse_toml_subset(std::string_view text) {
    TomlTables out;
    std::string table;
    auto lines = split_lines(text);
    auto strings_in = [](std::string_view s, std::vector<std::string>& dst) {
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '#') {
                while (i < s.size() && s[i] != '\n') ++i;
                continue;
            }
            if (c == '"' || c == '\'') {
                auto close = s.find(c, i + 1);
                if (close == std::string_view::npos) return;
                dst.emplace_back(s.substr(i + 1, close - i - 1));
                i = close + 1;
                continue;
            }
            ++i;
        }
    };
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string line = trim(lines[li]);
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '[') {
            table = trim(line.substr(1, line.find(']') - 1));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::vector<std::string> items;
        if (!value.empty() && value[0] == '[') {
            std::string joined = value;
            int depth = 0;
            auto balance = [&](const std::string& s) {
                bool in_str = false;
                char q = 0;
                for (char c : s) {
                    if (in_str) {
                        if (c == q) in_str = false;
                    } else if (c == '"' || c == '\'') {
                        in_str = true;
                        q = c;
                    } else if (c == '#') {
                        break;
                    } else if (c == '[') {
                        ++depth;
                    } else if (c == ']') {
                        --depth;
                    }
                }
            };
            balance(value);
            while (depth > 0 && li + 1 < lines.size()) {
                ++li;
                joined += "\n" + lines[li];
                balance(lines[li]);
            }
            strings_in(joined, items);
        } else if (!value.empty() && (value[0] == '"' || value[0] == '\'')) {
            strings_in(value, items);
            if (items.size() > 1) items.resize(1);
        } else {
            continue;
        }
        out.tables[table][key] = std::move(items);
    }
    return out;
}

// ---------------------------------------------------------------- metadata dirs

struct MetadataDir {
    std::string dir_name;
    bool egg = false;
    DistMetadata meta;
    std::vector<std::string> requires_lines;  // egg-info requires.txt, already marker-annotated
    std::optional<std::vector<std::string>> top_level;
};

std::optional<MetadataDir> read_metadata_dir(const fs::path& root, std::vector<std::string>& warnings) {
    std::vector<std::string> dist_infos, egg_infos;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(root, ec)) {
        const std::string name = entry.path().filename().string();
        if (!is_real_dir(entry.path())) continue;
        if (name.ends_with(".dist-info")) dist_infos.push_back(name);
        if (name.ends_with(".egg-info")) egg_infos.push_back(name);
    }
    std::sort(dist_infos.begin(), dist_infos.end());
    std::sort(egg_infos.begin(), egg_infos.end());
    std::vector<std::string>& pool = dist_infos.empty() ? egg_infos : dist_infos;
    if (pool.empty()) return std::nullopt;
    if (pool.size() > 1) warnings.push_back("several metadata directories; using " + pool.front());

    MetadataDir out;
    out.dir_name = pool.front();
    out.egg = dist_infos.empty();
    const fs::path dir = root / out.dir_name;
    if (auto text = read_file(dir / (out.egg ? "PKG-INFO" : "METADATA"))) {
        out.meta = parse_metadata_text(*text);
    } else {
        warnings.push_back(out.dir_name + ": no " + (out.egg ? "PKG-INFO" : "METADATA") + " file");
    }
    if (out.egg) {
        if (auto text = read_file(dir / "requires.txt")) {
            std::optional<std::string> section_marker;
            bool skip = false;
            for (const auto& raw : split_lines(*text)) {
                std::string line = trim(raw);
                if (line.empty() || line[0] == '#') continue;
                if (line.front() == '[' && line.back() == ']') {
                    std::string section = line.substr(1, line.size() - 2);
                    skip = section.empty() || section[0] != ':';
                    section_marker = skip ? std::nullopt : std::optional<std::string>(section.substr(1));
                    continue;
                }
                if (skip) continue;
                out.requires_lines.push_back(section_marker ? line + "; " + *section_marker : line);
            }
        }
    }
    if (auto text = read_file(dir / "top_level.txt")) {
        std::vector<std::string> modules;
        for (const auto& line : split_lines(*text)) {
            std::string m = trim(line);
            if (!m.empty()) modules.push_back(m);
        }
        out.top_level = std::move(modules);
    } else {
        warnings.push_back(out.dir_name + ": no top_level.txt; discovering packages at the project root");
    }
    return out;
}

// ---------------------------------------------------------------- sources

void collect_py_files(const fs::path& root, const fs::path& dir, std::vector<std::string>& out, bool& binary) {
    std::error_code ec;
    fs::recursive_directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    for (; !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
        const fs::path& p = it->path();
        if (is_link(p)) continue;
        if (!it->is_regular_file()) continue;
        const std::string name = p.filename().string();
        if (name.ends_with(".py")) out.push_back(fs::relative(p, root).generic_string());
        else if (is_binary_module_name(name)) binary = true;
    }
}

}  // namespace

// ---------------------------------------------------------------- public API

std::vector<DependencyDecl> parse_requirements_text(std::string_view text, std::vector<std::string>& warnings,
                                                    std::string_view origin) {
    std::vector<DependencyDecl> out;
    std::string logical;
    int line_no = 0, logical_start = 0;
    auto flush = [&]() {
        std::string line = logical;
        logical.clear();
        // '#' starts a comment at line start or after whitespace
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) return;
        const std::string where = std::string(origin) + ":" + std::to_string(logical_start);
        if (line[0] == '-') {
            warnings.push_back(where + ": skipped option line '" + line + "'");
            return;
        }
        if (line.find("://") != std::string::npos || line[0] == '.' || line[0] == '/' ||
            line.find(" @ ") != std::string::npos || line.ends_with(".whl") || line.ends_with(".zip") ||
            line.ends_with(".tar.gz")) {
            warnings.push_back(where + ": skipped URL or path requirement '" + line + "'");
            return;
        }
        add_requirement(line, std::nullopt, out, warnings, where);
    };
    for (const auto& raw : split_lines(text)) {
        ++line_no;
        if (logical.empty()) logical_start = line_no;
        std::string line = raw;
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (!line.empty() && line.back() == '\\') {
            line.pop_back();
            logical += line;
            continue;
        }
        logical += line;
        flush();
    }
    if (!logical.empty()) flush();
    return out;
}

DistMetadata parse_metadata_text(std::string_view text) {
    DistMetadata out;
    std::string key, value;
    auto commit = [&]() {
        if (key.empty()) return;
        const std::string k = lower(key);
        const std::string v = trim(value);
        if (k == "name") out.name = v;
        else if (k == "version") out.version = v;
        else if (k == "requires-python") out.requires_python = v;
        else if (k == "requires-dist") out.requires_dist.push_back(v);
        else if (k == "classifier") out.classifiers.push_back(v);
        key.clear();
        value.clear();
    };
    for (const auto& line : split_lines(text)) {
        if (line.empty()) break;  // headers end at the first blank line
        if (line[0] == ' ' || line[0] == '\t') {
            value += "\n" + line;
            continue;
        }
        commit();
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        key = line.substr(0, colon);
        value = line.substr(colon + 1);
    }
    commit();
    return out;
}

std::optional<std::pair<std::string, std::string>> split_metadata_dir_name(std::string_view dir_name) {
    std::string_view stem = dir_name;
    for (std::string_view suffix : {".dist-info", ".egg-info"}) {
        if (stem.ends_with(suffix)) stem.remove_suffix(suffix.size());
    }
    // egg-info names may carry a "-pyX.Y" tag after the version
    auto dash = stem.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    std::string name(stem.substr(0, dash));
    std::string version(stem.substr(dash + 1));
    if (auto tag = version.find("-py"); tag != std::string::npos) version.resize(tag);
    return std::make_pair(name, version);
}

std::set<std::string> local_modules_from_entries(const std::vector<DirEntry>& entries) {
    std::set<std::string> out;
    for (const auto& e : entries) {
        if (e.is_dir) {
            if (e.has_package_marker) out.insert(e.name);
        } else if (e.name.ends_with(".py") && e.name.size() > 3) {
            out.insert(e.name.substr(0, e.name.size() - 3));
        } else if (is_binary_module_name(e.name)) {
            out.insert(e.name.substr(0, e.name.find('.')));
        }
    }
    return out;
}

std::set<std::string> local_modules_for(const fs::path& dir) {
    std::vector<DirEntry> entries;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        DirEntry e;
        e.name = entry.path().filename().string();
        e.is_dir = is_real_dir(entry.path());
        e.has_package_marker = e.is_dir && is_real_file(entry.path() / "__init__.py");
        if (!e.is_dir && !is_real_file(entry.path())) continue;
        entries.push_back(std::move(e));
    }
    return local_modules_from_entries(entries);
}

ProjectModel inspect_project(const fs::path& root, const ProjectIdentity& identity) {
    if (!is_real_dir(root)) throw Error(ErrorCode::IoError, root.string() + " is not a directory");
    ProjectModel p;
    p.root = root;
    std::vector<std::string>& warnings = p.warnings;

    std::optional<std::string> name_text, version_text, python_text;
    auto set_once = [](std::optional<std::string>& slot, const std::optional<std::string>& value) {
        if (!slot && value && !value->empty()) slot = value;
    };

    // metadata directory: highest precedence for identity and python
    std::optional<MetadataDir> meta = read_metadata_dir(root, warnings);
    if (meta) {
        p.metadata_dir_name = meta->dir_name;
        p.dependency_sources.push_back(meta->dir_name);
        set_once(name_text, meta->meta.name);
        set_once(version_text, meta->meta.version);
        set_once(python_text, meta->meta.requires_python);
        for (const auto& r : meta->meta.requires_dist) add_requirement(r, std::nullopt, p.declared_deps, warnings, meta->dir_name);
        for (const auto& r : meta->requires_lines) add_requirement(r, std::nullopt, p.declared_deps, warnings, meta->dir_name);
        p.classifiers = meta->meta.classifiers;
        p.top_level_declared = meta->top_level;
    }

    if (auto text = read_file(root / "requirements.txt")) {
        p.dependency_sources.push_back("requirements.txt");
        for (auto& d : parse_requirements_text(*text, warnings)) {
            if (std::find(p.declared_deps.begin(), p.declared_deps.end(), d) == p.declared_deps.end()) {
                p.declared_deps.push_back(std::move(d));
            }
        }
    }

    if (auto text = read_file(root / "setup.cfg")) {
        IniSections ini = parse_ini(*text);
        auto get = [&](const char* section, const char* key) -> std::optional<std::string> {
            auto s = ini.find(section);
            if (s == ini.end()) return std::nullopt;
            auto k = s->second.find(key);
            if (k == s->second.end()) return std::nullopt;
            return k->second;
        };
        bool declares = false;
        if (auto v = get("options", "install_requires")) {
            declares = true;
            for (const auto& r : ini_list(*v)) add_requirement(r, std::nullopt, p.declared_deps, warnings, "setup.cfg");
        }
        if (auto v = get("options", "setup_requires")) {
            declares = true;
            for (const auto& r : ini_list(*v)) add_requirement(r, std::nullopt, p.setup_requires, warnings, "setup.cfg");
        }
        if (auto v = get("options", "python_requires")) {
            declares = true;
            set_once(python_text, v);
        }
        if (auto v = get("metadata", "name")) set_once(name_text, v);
        if (auto v = get("metadata", "version"); v && v->rfind("attr:", 0) != 0 && v->rfind("file:", 0) != 0) {
            set_once(version_text, v);
        }
        if (auto v = get("metadata", "classifiers"); v && p.classifiers.empty()) p.classifiers = ini_list(*v);
        if (declares) p.dependency_sources.push_back("setup.cfg");
    }

    if (auto text = read_file(root / "pyproject.toml")) {
        TomlTables toml = parse_toml_subset(*text);
        bool declares = false;
        auto first = [](const std::vector<std::string>& v) -> std::optional<std::string> {
            return v.empty() ? std::nullopt : std::optional<std::string>(v.front());
        };
        if (auto t = toml.tables.find("project"); t != toml.tables.end()) {
            auto& keys = t->second;
            if (keys.contains("dependencies")) {
                declares = true;
                for (const auto& r : keys["dependencies"]) {
                    add_requirement(r, std::nullopt, p.declared_deps, warnings, "pyproject.toml");
                }
            }
            if (keys.contains("requires-python")) {
                declares = true;
                set_once(python_text, first(keys["requires-python"]));
            }
            if (keys.contains("name")) set_once(name_text, first(keys["name"]));
            if (keys.contains("version")) set_once(version_text, first(keys["version"]));
            if (keys.contains("classifiers") && p.classifiers.empty()) p.classifiers = keys["classifiers"];
        }
        if (auto t = toml.tables.find("build-system"); t != toml.tables.end() && t->second.contains("requires")) {
            for (const auto& r : t->second["requires"]) {
                add_requirement(r, std::nullopt, p.setup_requires, warnings, "pyproject.toml");
            }
        }
        if (declares) p.dependency_sources.push_back("pyproject.toml");
    }

    if (auto text = read_file(root / "setup.py")) {
        p.setup_script = std::move(*text);
        if (p.dependency_sources.empty()) {
            warnings.push_back("setup.py is a dynamic script; its dependencies are not read");
        }
    }

    // identity: declared metadata, then caller identity, then the directory name
    std::optional<std::pair<std::string, std::string>> dir_identity;
    if (meta) dir_identity = split_metadata_dir_name(meta->dir_name);
    if (name_text) {
        try {
            p.declared_name = normalize_name(*name_text);
        } catch (const Error& e) {
            warnings.push_back(std::string("declared name ignored: ") + e.what());
        }
    }
    if (!p.declared_name && identity.name) p.declared_name = identity.name;
    if (!p.declared_name && dir_identity && is_valid_name(dir_identity->first)) {
        try {
            p.declared_name = normalize_name(dir_identity->first);
        } catch (const Error&) {
        }
    }
    if (version_text) {
        if (auto v = Version::try_parse(*version_text)) p.declared_version = *v;
        else warnings.push_back("declared version '" + *version_text + "' is not a supported version string");
    }
    if (!p.declared_version && identity.version) p.declared_version = identity.version;
    if (!p.declared_version && dir_identity) {
        if (auto v = Version::try_parse(dir_identity->second)) p.declared_version = *v;
    }
    if (python_text) {
        try {
            p.declared_python = SpecifierSet::parse(*python_text);
        } catch (const Error& e) {
            warnings.push_back(std::string("requires-python ignored: ") + e.what());
        }
    }

    // sources
    std::vector<std::string> modules;
    if (p.top_level_declared) {
        modules = *p.top_level_declared;
    } else {
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(root, ec)) {
            const std::string name = entry.path().filename().string();
            if (name.empty() || name[0] == '.') continue;
            if (is_real_dir(entry.path())) {
                if (is_real_file(entry.path() / "__init__.py")) modules.push_back(name);
            } else if (is_real_file(entry.path()) && name.ends_with(".py") && name != "setup.py") {
                modules.push_back(name.substr(0, name.size() - 3));
            }
        }
        std::sort(modules.begin(), modules.end());
    }

    std::vector<std::string> files;
    for (const auto& m : modules) {
        bool located = false;
        const fs::path dir = root / m;
        if (is_real_dir(dir)) {
            const std::size_t before = files.size();
            bool binary = false;
            collect_py_files(root, dir, files, binary);
            located = files.size() > before || binary;
            p.has_binary_modules = p.has_binary_modules || binary;
        }
        if (is_real_file(root / (m + ".py"))) {
            files.push_back(m + ".py");
            located = true;
        }
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(root, ec)) {
            const std::string name = entry.path().filename().string();
            if (is_binary_module_name(name) && name.substr(0, name.find('.')) == m && is_real_file(entry.path())) {
                located = true;
                p.has_binary_modules = true;
            }
        }
        if (located) p.provided_modules.push_back(m);
        else p.unmatched_top_level.push_back(m);
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());

    std::map<std::string, std::set<std::string>> dir_cache;
    for (auto& f : files) {
        SourceFile sf;
        sf.path = f;
        const std::string parent = fs::path(f).parent_path().generic_string();
        auto it = dir_cache.find(parent);
        if (it == dir_cache.end()) it = dir_cache.emplace(parent, local_modules_for(root / parent)).first;
        sf.local_modules = it->second;
        p.source_files.push_back(std::move(sf));
    }
    return p;
}

ProjectModel load_project(const fs::path& root, const ProjectIdentity& identity) {
    ProjectModel p = inspect_project(root, identity);
    if (!p.has_dependency_source()) {
        throw Error(ErrorCode::MissingConfigFiles, root.string() + ": no requirements file, metadata directory, "
                                                                   "setup.cfg or pyproject.toml declarations");
    }
    if (!p.has_source()) {
        throw Error(ErrorCode::MissingSourceCode, root.string() + ": no source located for the declared modules");
    }
    return p;
}

std::vector<IssueRecord> check_metadata_consistency(const ProjectModel& p) {
    std::vector<IssueRecord> out;
    if (p.metadata_dir_name) {
        const std::string& dir = *p.metadata_dir_name;
        const bool egg = dir.ends_with(".egg-info");
        auto parts = split_metadata_dir_name(dir);
        if (!parts && !egg) {
            out.push_back({IssueKind::MetadataInconsistency, dir, "metadata directory name has no version part"});
        } else if (parts) {
            std::vector<std::string> problems;
            if (p.declared_name) {
                if (!is_valid_name(parts->first) || normalize_name(parts->first) != *p.declared_name) {
                    problems.push_back("name '" + parts->first + "' differs from declared '" +
                                       p.declared_name->value() + "'");
                }
            }
            if (p.declared_version) {
                auto v = Version::try_parse(parts->second);
                if (!v || *v != *p.declared_version) {
                    problems.push_back("version '" + parts->second + "' differs from declared '" +
                                       p.declared_version->str() + "'");
                }
            }
            for (const auto& problem : problems) out.push_back({IssueKind::MetadataInconsistency, dir, problem});
        }
    }
    // all-unmatched is reported as missing source code instead
    if (!p.unmatched_top_level.empty() && !p.provided_modules.empty()) {
        std::string list;
        for (const auto& m : p.unmatched_top_level) list += (list.empty() ? "" : ", ") + m;
        out.push_back({IssueKind::MetadataInconsistency, "top_level.txt",
                       "declared top-level modules without source: " + list});
    }
    return out;
}

ProjectModel parse_sources(ProjectModel p) {
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next++;
            if (i >= p.source_files.size()) return;
            SourceFile& sf = p.source_files[i];
            auto text = read_file(p.root / sf.path);
            if (!text) {
                sf.parse_result = py::ParseFailure{py::FailureReason::Syntax, 0, "unreadable file"};
                continue;
            }
            auto result = py::parse_source(*text);
            if (auto* m = std::get_if<py::Module>(&result)) sf.parse_result = std::move(*m);
            else sf.parse_result = std::get<py::ParseFailure>(result);
        }
    };
    const std::size_t n = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                                std::max<std::size_t>(1, p.source_files.size() / 4));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    return p;
}

}  // namespace envcheck
