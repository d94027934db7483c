#include "envcheck/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <iomanip>
#include <set>
#include <sstream>

namespace envcheck {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) schema_error(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> str_list(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) schema_error(std::string("field '") + key + "' must be a list");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) schema_error(std::string("field '") + key + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

bool bool_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean()) schema_error(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok |= k == a;
        if (!ok) schema_error("unknown field '" + k + "' in " + what);
    }
}

json issue_to_json(const IssueRecord& i) {
    return {{"kind", to_string(i.kind)},
            {"category", to_string(i.category())},
            {"fatal", i.fatal()},
            {"check", to_string(i.check())},
            {"location", i.location},
            {"evidence", i.evidence}};
}

IssueRecord issue_from_json(const json& j) {
    check_keys(j, {"kind", "category", "fatal", "check", "location", "evidence"}, "issue");
    auto kind = parse_issue_kind(str_field(j, "kind"));
    if (!kind) schema_error("unknown issue kind '" + str_field(j, "kind") + "'");
    IssueRecord r{*kind, str_field(j, "location"), str_field(j, "evidence")};
    if (str_field(j, "category") != to_string(r.category()) || str_field(j, "check") != to_string(r.check()) ||
        bool_field(j, "fatal") != r.fatal()) {
        schema_error("issue attribution disagrees with the taxonomy for " + str_field(j, "kind"));
    }
    return r;
}

}  // namespace

json report_to_json(const CheckReport& r) {
    json issues = json::array();
    for (const auto& i : r.issues) issues.push_back(issue_to_json(i));
    json checks = json::object();
    for (const auto& [k, v] : r.checks) checks[std::string(to_string(k))] = to_string(v);
    json statuses = json::array();
    for (auto s : r.statuses) statuses.push_back(to_string(s));
    json tried = json::array();
    for (const auto& v : r.pythons_tried) tried.push_back(v.str());
    return {{"name", r.name},
            {"version", r.version},
            {"final_status", to_string(r.final_status)},
            {"statuses", statuses},
            {"validated", r.validated()},
            {"mode", to_string(r.mode)},
            {"checks", checks},
            {"issues", issues},
            {"chosen_python", r.chosen_python ? json(r.chosen_python->str()) : json(nullptr)},
            {"pythons_tried", tried},
            {"environment", r.environment},
            {"degraded", r.degraded},
            {"warnings", r.warnings}};
}

CheckReport report_from_json(const json& j) {
    check_keys(j,
               {"name", "version", "final_status", "statuses", "validated", "mode", "checks", "issues",
                "chosen_python", "pythons_tried", "environment", "degraded", "warnings"},
               "report");
    CheckReport r;
    r.name = str_field(j, "name");
    r.version = str_field(j, "version");
    auto status = parse_check_status(str_field(j, "final_status"));
    if (!status) schema_error("unknown status '" + str_field(j, "final_status") + "'");
    r.final_status = *status;
    for (const auto& s : str_list(j, "statuses")) {
        auto st = parse_check_status(s);
        if (!st) schema_error("unknown status '" + s + "'");
        r.statuses.push_back(*st);
    }
    const std::string mode = str_field(j, "mode");
    if (mode != "static" && mode != "live") schema_error("unknown mode '" + mode + "'");
    r.mode = mode == "static" ? CheckMode::Static : CheckMode::Live;
    const json& checks = field(j, "checks");
    if (!checks.is_object()) schema_error("field 'checks' must be an object");
    for (const auto& [k, v] : checks.items()) {
        auto kind = parse_check_kind(k);
        if (!kind || !v.is_string()) schema_error("bad check entry '" + k + "'");
        const std::string o = v.get<std::string>();
        if (o == "passed") r.checks[*kind] = CheckOutcome::Passed;
        else if (o == "failed") r.checks[*kind] = CheckOutcome::Failed;
        else if (o == "skipped") r.checks[*kind] = CheckOutcome::Skipped;
        else schema_error("bad check outcome '" + o + "'");
    }
    const json& issues = field(j, "issues");
    if (!issues.is_array()) schema_error("field 'issues' must be a list");
    for (const auto& i : issues) r.issues.push_back(issue_from_json(i));
    const json& py = field(j, "chosen_python");
    if (py.is_string()) r.chosen_python = InterpreterVersion::parse(py.get<std::string>());
    else if (!py.is_null()) schema_error("field 'chosen_python' must be a string or null");
    for (const auto& v : str_list(j, "pythons_tried")) r.pythons_tried.push_back(InterpreterVersion::parse(v));
    const json& env = field(j, "environment");
    if (!env.is_object()) schema_error("field 'environment' must be an object");
    for (const auto& [k, v] : env.items()) {
        if (!v.is_string()) schema_error("environment versions must be strings");
        r.environment[k] = v.get<std::string>();
    }
    r.degraded = bool_field(j, "degraded");
    r.warnings = str_list(j, "warnings");
    if (bool_field(j, "validated") != r.validated()) schema_error("'validated' disagrees with final_status");
    return r;
}

json reports_document(const std::vector<CheckReport>& reports) {
    json list = json::array();
    std::uint64_t validated = 0;
    for (const auto& r : reports) {
        list.push_back(report_to_json(r));
        validated += r.validated() ? 1 : 0;
    }
    return {{"schema_version", kReportSchemaVersion},
            {"reports", list},
            {"summary", {{"total", reports.size()}, {"validated", validated}}}};
}

std::vector<CheckReport> reports_from_document(const json& doc) {
    const json& v = field(doc, "schema_version");
    if (!v.is_number_integer()) schema_error("schema_version must be an integer");
    if (v.get<int>() > kReportSchemaVersion) {
        schema_error("schema_version " + std::to_string(v.get<int>()) + " is newer than supported (" +
                     std::to_string(kReportSchemaVersion) + ")");
    }
    const json& list = field(doc, "reports");
    if (!list.is_array()) schema_error("field 'reports' must be a list");
    std::vector<CheckReport> out;
    for (const auto& r : list) out.push_back(report_from_json(r));
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string PassRate::text() const {
    // exact rounding from the rational, half up
    const std::uint64_t scaled = (validated * 2000 + total) / (2 * total);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu.%03llu", static_cast<unsigned long long>(scaled / 1000),
                  static_cast<unsigned long long>(scaled % 1000));
    return buf;
}

PassRate compute_pass_rate(const std::vector<CheckReport>& reports) {
    if (reports.empty()) throw Error(ErrorCode::EmptyCorpus, "no reports to rate");
    PassRate p;
    p.total = reports.size();
    for (const auto& r : reports) p.validated += r.validated() ? 1 : 0;
    return p;
}

std::map<IssueKind, std::uint64_t> issue_histogram(const std::vector<CheckReport>& reports) {
    std::map<IssueKind, std::uint64_t> out;
    for (const auto& row : taxonomy()) out[row.kind] = 0;
    for (const auto& r : reports) {
        std::set<IssueKind> seen;
        for (const auto& i : r.issues) {
            if (seen.insert(i.kind).second) ++out[i.kind];
        }
    }
    return out;
}

std::string render_taxonomy_table(const std::vector<CheckReport>& reports, TableFormat format) {
    const auto counts = issue_histogram(reports);
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"Category", "Issue", "Check", "Fatal", "Releases"});
    for (const auto& row : taxonomy()) {
        rows.push_back({std::string(to_string(row.category)), std::string(row.label), std::string(to_string(row.check)),
                        row.fatal ? "yes" : "no", std::to_string(counts.at(row.kind))});
    }
    std::ostringstream out;
    if (format == TableFormat::Markdown) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << "|";
            for (const auto& cell : rows[i]) out << " " << cell << " |";
            out << "\n";
            if (i == 0) out << "|---|---|---|---|---:|\n";
        }
    } else {
        std::array<std::size_t, 5> width{};
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], r[c].size());
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t c = 0; c < 5; ++c) {
                if (c == 4) out << std::setw(static_cast<int>(width[c])) << std::right << rows[i][c];
                else out << std::setw(static_cast<int>(width[c])) << std::left << rows[i][c] << "  ";
            }
            out << "\n";
            if (i == 0) {
                std::size_t total = 8;
                for (auto w : width) total += w;
                out << std::string(total, '-') << "\n";
            }
        }
    }
    std::uint64_t validated = 0;
    for (const auto& r : reports) validated += r.validated() ? 1 : 0;
    out << "\n" << validated << " of " << reports.size() << " releases validated\n";
    return out.str();
}

std::vector<BenchEntry> parse_bench_entries(const json& doc) {
    if (!doc.is_array()) schema_error("bench file must be a JSON list");
    std::vector<BenchEntry> out;
    for (const auto& e : doc) {
        check_keys(e, {"name", "version", "inferred_deps", "inferred_python"}, "bench entry");
        BenchEntry b;
        b.name = normalize_name(str_field(e, "name"));
        b.version = Version::parse(str_field(e, "version"));
        for (const auto& d : str_list(e, "inferred_deps")) b.inferred_deps.push_back(parse_requirement(d).decl);
        if (e.contains("inferred_python")) {
            const json& py = e.at("inferred_python");
            if (py.is_string()) b.inferred_python = InterpreterVersion::parse(py.get<std::string>());
            else if (!py.is_null()) schema_error("inferred_python must be a string or null");
        }
        out.push_back(std::move(b));
    }
    return out;
}

BenchResult run_bench(const std::vector<BenchEntry>& entries, const std::filesystem::path& corpus_dir,
                      const IndexSnapshot& snapshot, const CheckOptions& options, unsigned jobs) {
    if (entries.empty()) throw Error(ErrorCode::EmptyCorpus, "bench file lists no entries");
    const auto available = list_corpus(corpus_dir);
    std::vector<CorpusEntry> corpus;
    std::map<std::pair<NormalizedName, std::string>, const BenchEntry*> by_id;
    for (const auto& b : entries) {
        auto it = std::find_if(available.begin(), available.end(), [&](const CorpusEntry& c) {
            return c.name == b.name && c.version == b.version;
        });
        if (it == available.end()) {
            throw Error(ErrorCode::CorpusError, "no directory for " + b.name.value() + " " + b.version.raw() +
                                                    " under " + corpus_dir.string());
        }
        corpus.push_back(*it);
        by_id[{b.name, b.version.str()}] = &b;
    }
    auto per_entry = [&](const CorpusEntry& c, CheckOptions o) {
        const BenchEntry& b = *by_id.at({c.name, c.version.str()});
        o.deps_override = b.inferred_deps;
        if (b.inferred_python) o.python_override = SpecifierSet::parse("==" + b.inferred_python->str() + ".*");
        return o;
    };
    BenchResult result;
    result.reports = check_corpus(corpus, snapshot, options, jobs, per_entry);
    result.pass_rate = compute_pass_rate(result.reports);
    result.histogram = issue_histogram(result.reports);
    return result;
}

json bench_document(const BenchResult& result) {
    json hist = json::object();
    for (const auto& [k, v] : result.histogram) hist[std::string(to_string(k))] = v;
    json doc = reports_document(result.reports);
    doc["pass_rate"] = result.pass_rate.text();
    doc["validated"] = result.pass_rate.validated;
    doc["total"] = result.pass_rate.total;
    doc["histogram"] = hist;
    return doc;
}

}  // namespace envcheck
