#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "envcheck/checker.hpp"

namespace envcheck {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json report_to_json(const CheckReport& r);
/// Throws Error{SchemaError}.
CheckReport report_from_json(const nlohmann::json& j);

/// {"schema_version": 1, "reports": [...], "summary": {...}}
nlohmann::json reports_document(const std::vector<CheckReport>& reports);
/// Rejects a higher schema version with Error{SchemaError}.
std::vector<CheckReport> reports_from_document(const nlohmann::json& doc);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

struct PassRate {
    std::uint64_t validated = 0;
    std::uint64_t total = 0;

    [[nodiscard]] double value() const { return static_cast<double>(validated) / static_cast<double>(total); }
    /// Three decimals, e.g. "0.650".
    [[nodiscard]] std::string text() const;
};

/// Throws Error{EmptyCorpus} for an empty list.
PassRate compute_pass_rate(const std::vector<CheckReport>& reports);

/// Number of reports carrying each kind at least once; every kind present.
std::map<IssueKind, std::uint64_t> issue_histogram(const std::vector<CheckReport>& reports);

enum class TableFormat { Text, Markdown };
/// One row per issue kind: category, issue, check, fatal, count.
std::string render_taxonomy_table(const std::vector<CheckReport>& reports, TableFormat format = TableFormat::Text);

struct BenchEntry {
    NormalizedName name;
    Version version;
    std::vector<DependencyDecl> inferred_deps;
    std::optional<InterpreterVersion> inferred_python;
};

/// JSON list of {"name", "version", "inferred_deps": ["req", ...],
/// "inferred_python": "3.6" | null}. Throws Error{SchemaError} and the
/// requirement parse errors.
std::vector<BenchEntry> parse_bench_entries(const nlohmann::json& doc);

struct BenchResult {
    std::vector<CheckReport> reports;
    PassRate pass_rate;
    std::map<IssueKind, std::uint64_t> histogram;
};

/// Each entry is checked from <corpus>/<name>-<version> with the inferred
/// declarations substituted. An entry without inferred_python keeps the
/// project's own constraint. Throws Error{CorpusError}, Error{EmptyCorpus}.
BenchResult run_bench(const std::vector<BenchEntry>& entries, const std::filesystem::path& corpus_dir,
                      const IndexSnapshot& snapshot, const CheckOptions& options, unsigned jobs);

nlohmann::json bench_document(const BenchResult& result);

}  // namespace envcheck
