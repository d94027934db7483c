#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "envcheck/dates.hpp"
#include "envcheck/snapshot.hpp"

namespace envcheck {

struct RegistryOptions {
    /// Base of the JSON metadata API; package documents live at
    /// "<index_url>/<name>/json".
    std::string index_url = "https://pypi.org/pypi";
    std::filesystem::path cache_dir;
    int ttl_days = 7;
    /// Injected clock for cache expiry.
    Date today = today_utc();
    bool network = true;
    int timeout_seconds = 30;
};

/// Converts one registry metadata document into release records.
/// Release date is the earliest upload time across a version's files;
/// versions with no files or unparseable version strings are skipped and
/// reported through `warnings`. Dependencies and classifiers are only known
/// for the version the document describes in its "info" block.
std::vector<ReleaseRecord> parse_registry_payload(const nlohmann::json& payload, std::vector<std::string>& warnings);

/// Fetches package metadata from the registry, caching one JSON file per
/// package under `cache_dir`. Thread-safe; writes to one package's cache entry
/// are serialized.
class RegistryClient {
public:
    explicit RegistryClient(RegistryOptions options);

    /// Throws Error{NetworkError}, Error{NotFound}, Error{SchemaError}.
    std::vector<ReleaseRecord> fetch_package(const NormalizedName& name);

    [[nodiscard]] int network_calls() const noexcept { return network_calls_.load(); }
    [[nodiscard]] std::vector<std::string> warnings() const;

private:
    nlohmann::json fetch_payload(const NormalizedName& name);
    std::filesystem::path cache_path(const NormalizedName& name) const;
    std::mutex& package_mutex(const NormalizedName& name);

    RegistryOptions options_;
    std::atomic<int> network_calls_{0};
    mutable std::mutex state_mutex_;
    std::map<NormalizedName, std::unique_ptr<std::mutex>> package_mutexes_;
    std::vector<std::string> warnings_;
};

/// Builds a snapshot from registry documents, one "<name>.json" per package.
IndexSnapshot snapshot_from_registry_dir(const std::filesystem::path& dir, Date snapshot_date,
                                         std::vector<std::string>& warnings);

/// Drops releases uploaded after the snapshot date (with a warning each) and
/// packages left with no releases.
IndexSnapshot snapshot_as_of(Date snapshot_date, IndexSnapshot::PackageMap packages, std::vector<std::string>& warnings);

}  // namespace envcheck
