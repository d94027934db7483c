#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <thread>

#include "envcheck/checker.hpp"
#include "envcheck/env.hpp"
#include "envcheck/probe.hpp"
#include "envcheck/registry.hpp"
#include "envcheck/report.hpp"
#include "envcheck/snapshot.hpp"

namespace envcheck {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const fs::path& p) {
    try {
        return json::parse(read_file(p));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, p.string() + ": " + e.what());
    }
}

void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write " + p.string());
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void print_report(std::ostream& out, const CheckReport& r) {
    out << r.name << (r.version.empty() ? "" : " " + r.version) << ": " << to_string(r.final_status);
    if (r.chosen_python) out << " (python " << r.chosen_python->str() << ")";
    if (r.degraded) out << " [degraded]";
    out << "\n";
    for (const auto& i : r.issues) {
        out << "  " << to_string(i.kind) << (i.fatal() ? " [fatal]" : "") << " at " << i.location << ": "
            << i.evidence << "\n";
    }
}

struct CheckArgs {
    std::string project;
    std::string release;
    std::string corpus;
    std::string snapshot;
    std::string mode = "static";
    std::string python_table;
    std::string json_out;
    unsigned jobs = default_jobs();
    std::string interpreter;
    std::string probe_script;
};

int run_check(const CheckArgs& a, std::ostream& out) {
    const IndexSnapshot snapshot = load_snapshot(a.snapshot);
    std::optional<InterpreterReleaseTable> table;
    if (!a.python_table.empty()) table = InterpreterReleaseTable::load(a.python_table);

    CheckOptions options;
    if (table) options.table = &*table;
    std::optional<ProbeClient> probe;
    if (a.mode == "live") {
        if (a.interpreter.empty() || a.probe_script.empty()) {
            throw UsageError("--mode live needs --interpreter and --probe-script");
        }
        probe.emplace(a.interpreter, a.probe_script);
        options.mode = CheckMode::Live;
        options.probe = probe->as_fn();
    }

    std::vector<CheckReport> reports;
    if (!a.project.empty()) {
        if (!a.release.empty()) throw UsageError("--project and --release are exclusive");
        reports.push_back(check_project(a.project, {}, snapshot, options));
    } else if (!a.release.empty()) {
        const auto sep = a.release.find("==");
        if (sep == std::string::npos) throw UsageError("--release expects NAME==VERSION");
        if (a.corpus.empty()) throw UsageError("--release needs --corpus");
        reports.push_back(check_release(normalize_name(a.release.substr(0, sep)),
                                        Version::parse(a.release.substr(sep + 2)), a.corpus, snapshot, options));
    } else if (!a.corpus.empty()) {
        const auto entries = list_corpus(a.corpus);
        if (entries.empty()) throw Error(ErrorCode::EmptyCorpus, "no releases under " + a.corpus);
        reports = check_corpus(entries, snapshot, options, a.jobs);
    } else {
        throw UsageError("one of --project, --release or --corpus is required");
    }

    for (const auto& r : reports) print_report(out, r);
    const PassRate rate = compute_pass_rate(reports);
    out << rate.validated << "/" << rate.total << " validated (" << rate.text() << ")\n";
    if (!a.json_out.empty()) write_file(a.json_out, dump_json(reports_document(reports)));
    return rate.validated == rate.total ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Static checker for Python library release configurations"};
    app.name("envcheck");
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Build an index snapshot");
    bool from_registry = false;
    std::string from_dir, ingest_out, cache_dir, index_url = RegistryOptions{}.index_url, snapshot_date;
    std::vector<std::string> packages;
    int ttl_days = 7;
    ingest->add_flag("--from-registry", from_registry, "Fetch --packages from the registry JSON API");
    ingest->add_option("--from-dir", from_dir, "Directory of registry documents, one <name>.json per package");
    ingest->add_option("--packages", packages, "Package names to fetch");
    ingest->add_option("--index-url", index_url, "Registry JSON API base URL");
    ingest->add_option("--cache-dir", cache_dir, "Cache directory for registry documents");
    ingest->add_option("--ttl-days", ttl_days, "Cache lifetime in days");
    ingest->add_option("--snapshot-date", snapshot_date, "Snapshot date (YYYY-MM-DD), default today");
    ingest->add_option("--out", ingest_out, "Snapshot file to write")->required();

    // check
    auto* check = app.add_subcommand("check", "Check a project, a corpus release or a whole corpus");
    CheckArgs ca;
    check->add_option("--project", ca.project, "Project directory");
    check->add_option("--release", ca.release, "NAME==VERSION inside --corpus");
    check->add_option("--corpus", ca.corpus, "Corpus directory of <name>-<version> releases");
    check->add_option("--snapshot", ca.snapshot, "Index snapshot JSON")->required();
    check->add_option("--mode", ca.mode, "static or live")->check(CLI::IsMember({"static", "live"}));
    check->add_option("--python-table", ca.python_table, "Interpreter release dates JSON");
    check->add_option("--json", ca.json_out, "Write the JSON report here");
    check->add_option("--jobs", ca.jobs, "Parallel packages")->check(CLI::PositiveNumber);
    check->add_option("--interpreter", ca.interpreter, "Live mode: target interpreter");
    check->add_option("--probe-script", ca.probe_script, "Live mode: probe script");

    // scan-env
    auto* scan = app.add_subcommand("scan-env", "Inventory an installed site-packages directory");
    std::string site_dir, scan_python, scan_json;
    scan->add_option("--site-dir", site_dir, "site-packages directory")->required();
    scan->add_option("--python", scan_python, "Interpreter version X.Y (default: from the path)");
    scan->add_option("--json", scan_json, "Write the inventory here");

    // bench
    auto* bench = app.add_subcommand("bench", "Pass rate of inferred configurations");
    std::string bench_corpus, inferred, bench_snapshot, bench_json;
    unsigned bench_jobs = default_jobs();
    bench->add_option("--corpus", bench_corpus, "Corpus directory")->required();
    bench->add_option("--inferred", inferred, "JSON list of inferred configurations")->required();
    bench->add_option("--snapshot", bench_snapshot, "Index snapshot JSON")->required();
    bench->add_option("--json", bench_json, "Write the bench report here");
    bench->add_option("--jobs", bench_jobs, "Parallel packages")->check(CLI::PositiveNumber);

    // report
    auto* report = app.add_subcommand("report", "Render the issue table of a JSON report");
    std::string report_in, format = "text";
    report->add_option("--json", report_in, "Report JSON from check or bench")->required();
    report->add_option("--format", format, "text or markdown")->check(CLI::IsMember({"text", "markdown"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "envcheck: " << e.what() << "\n";
        if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        }
        return 2;
    }

    try {
        if (ingest->parsed()) {
            if (from_registry == !from_dir.empty()) throw UsageError("use exactly one of --from-registry, --from-dir");
            const Date date = snapshot_date.empty() ? today_utc() : parse_date(snapshot_date);
            std::vector<std::string> warnings;
            IndexSnapshot snap;
            if (!from_dir.empty()) {
                snap = snapshot_from_registry_dir(from_dir, date, warnings);
            } else {
                if (packages.empty()) throw UsageError("--from-registry needs --packages");
                RegistryOptions ro;
                ro.index_url = index_url;
                ro.cache_dir = cache_dir;
                ro.ttl_days = ttl_days;
                RegistryClient client(ro);
                IndexSnapshot::PackageMap map;
                for (const auto& p : packages) {
                    const auto name = normalize_name(p);
                    map[name] = client.fetch_package(name);
                }
                for (const auto& w : client.warnings()) warnings.push_back(w);
                snap = snapshot_as_of(date, std::move(map), warnings);
            }
            save_snapshot(snap, ingest_out);
            for (const auto& w : warnings) err << "warning: " << w << "\n";
            out << "wrote " << snap.packages().size() << " packages to " << ingest_out << "\n";
            return 0;
        }
        if (check->parsed()) return run_check(ca, out);
        if (scan->parsed()) {
            std::optional<InterpreterVersion> py;
            if (!scan_python.empty()) py = InterpreterVersion::parse(scan_python);
            else py = python_version_from_path(site_dir);
            if (!py) throw UsageError("cannot tell the interpreter version from the path; pass --python");
            const EnvironmentModel env = scan_environment(site_dir, *py);
            const auto issues = check_env_consistency(env);
            json dists = json::object();
            for (const auto& [name, d] : env.installed) {
                dists[name.value()] = {{"version", d.version.raw()}, {"top_level", d.top_level_modules}};
                out << name.value() << " " << d.version.raw() << "\n";
            }
            json list = json::array();
            for (const auto& i : issues) {
                out << "  " << to_string(i.kind) << " at " << i.location << ": " << i.evidence << "\n";
                list.push_back({{"kind", to_string(i.kind)}, {"location", i.location}, {"evidence", i.evidence}});
            }
            for (const auto& w : env.warnings) err << "warning: " << w << "\n";
            if (!scan_json.empty()) {
                write_file(scan_json, dump_json({{"schema_version", kReportSchemaVersion},
                                                 {"python", py->str()},
                                                 {"distributions", dists},
                                                 {"issues", list},
                                                 {"warnings", env.warnings}}));
            }
            return issues.empty() ? 0 : 1;
        }
        if (bench->parsed()) {
            const IndexSnapshot snapshot = load_snapshot(bench_snapshot);
            const auto entries = parse_bench_entries(read_json(inferred));
            const BenchResult result = run_bench(entries, bench_corpus, snapshot, {}, bench_jobs);
            for (const auto& r : result.reports) print_report(out, r);
            out << "pass rate: " << result.pass_rate.text() << " (" << result.pass_rate.validated << "/"
                << result.pass_rate.total << ")\n";
            for (const auto& [kind, count] : result.histogram) {
                if (count) out << "  " << to_string(kind) << ": " << count << "\n";
            }
            if (!bench_json.empty()) write_file(bench_json, dump_json(bench_document(result)));
            return result.pass_rate.validated == result.pass_rate.total ? 0 : 1;
        }
        if (report->parsed()) {
            const auto reports = reports_from_document(read_json(report_in));
            out << render_taxonomy_table(reports, format == "markdown" ? TableFormat::Markdown : TableFormat::Text);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "envcheck: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "envcheck: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "envcheck: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace envcheck
