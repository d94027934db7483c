#include "envcheck/registry.hpp"

#include <algorithm>
#include <fstream>

#include <httplib.h>

namespace envcheck {

namespace {

using nlohmann::json;

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;    // without trailing slash
};

SplitUrl split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw Error(ErrorCode::NetworkError, "bad index url '" + url + "'");
    auto path_start = url.find('/', scheme_end + 3);
    SplitUrl out;
    out.origin = url.substr(0, path_start);
    out.path = path_start == std::string::npos ? "" : url.substr(path_start);
    while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
    return out;
}

std::string json_string_or(const json& obj, const char* key, std::string fallback = {}) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return fallback;
    return it->get<std::string>();
}

}  // namespace

std::vector<ReleaseRecord> parse_registry_payload(const json& payload, std::vector<std::string>& warnings) {
    if (!payload.is_object() || !payload.contains("info") || !payload["info"].is_object()) {
        throw Error(ErrorCode::SchemaError, "registry payload lacks an 'info' object");
    }
    const json& info = payload["info"];
    const std::string raw_name = json_string_or(info, "name");
    if (raw_name.empty()) throw Error(ErrorCode::SchemaError, "registry payload lacks info.name");
    const NormalizedName name = normalize_name(raw_name);
    const auto described = Version::try_parse(json_string_or(info, "version"));

    auto releases_it = payload.find("releases");
    if (releases_it == payload.end() || !releases_it->is_object()) {
        throw Error(ErrorCode::SchemaError, name.value() + ": registry payload lacks a 'releases' object");
    }

    std::vector<ReleaseRecord> out;
    for (const auto& [version_text, files] : releases_it->items()) {
        auto version = Version::try_parse(version_text);
        if (!version) {
            warnings.push_back("skipped " + name.value() + " " + version_text + ": unsupported version string");
            continue;
        }
        if (!files.is_array()) throw Error(ErrorCode::SchemaError, name.value() + " " + version_text + ": files");
        if (files.empty()) {
            warnings.push_back("skipped " + name.value() + " " + version_text + ": no uploaded files");
            continue;
        }
        ReleaseRecord rel;
        rel.name = name;
        rel.version = *version;
        std::optional<Date> earliest;
        std::string file_requires_python;
        for (const auto& file : files) {
            std::string stamp = json_string_or(file, "upload_time_iso_8601", json_string_or(file, "upload_time"));
            if (stamp.empty()) throw Error(ErrorCode::SchemaError, name.value() + " " + version_text + ": upload time");
            Date d = parse_date(stamp);
            if (!earliest || std::chrono::sys_days{d} < std::chrono::sys_days{*earliest}) earliest = d;
            if (json_string_or(file, "packagetype") == "sdist") rel.has_source = true;
            if (file_requires_python.empty()) file_requires_python = json_string_or(file, "requires_python");
        }
        rel.release_date = *earliest;

        const bool is_described = described && *described == rel.version;
        std::string requires_python = is_described ? json_string_or(info, "requires_python") : "";
        if (requires_python.empty()) requires_python = file_requires_python;
        if (!requires_python.empty()) {
            try {
                rel.requires_python = SpecifierSet::parse(requires_python);
            } catch (const Error& e) {
                warnings.push_back(name.value() + " " + version_text + ": ignoring requires_python: " + e.what());
            }
        }
        if (is_described) {
            if (auto deps = info.find("requires_dist"); deps != info.end() && deps->is_array()) {
                for (const auto& dep : *deps) {
                    if (!dep.is_string()) continue;
                    try {
                        rel.requires_dist.push_back(parse_requirement(dep.get<std::string>()).decl);
                    } catch (const Error& e) {
                        warnings.push_back(name.value() + " " + version_text + ": ignoring requirement: " + e.what());
                    }
                }
            }
            if (auto cls = info.find("classifiers"); cls != info.end() && cls->is_array()) {
                for (const auto& c : *cls) {
                    if (c.is_string()) rel.classifiers.push_back(c.get<std::string>());
                }
            }
        }
        out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end(), [](const ReleaseRecord& a, const ReleaseRecord& b) { return a.version < b.version; });
    return out;
}

RegistryClient::RegistryClient(RegistryOptions options) : options_(std::move(options)) {}

std::filesystem::path RegistryClient::cache_path(const NormalizedName& name) const {
    return options_.cache_dir / (name.value() + ".json");
}

std::mutex& RegistryClient::package_mutex(const NormalizedName& name) {
    std::lock_guard lock(state_mutex_);
    auto& slot = package_mutexes_[name];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

std::vector<std::string> RegistryClient::warnings() const {
    std::lock_guard lock(state_mutex_);
    return warnings_;
}

json RegistryClient::fetch_payload(const NormalizedName& name) {
    std::lock_guard package_lock(package_mutex(name));

    if (!options_.cache_dir.empty()) {
        std::ifstream in(cache_path(name));
        if (in) {
            try {
                json cached = json::parse(in);
                Date fetched = parse_date(cached.at("fetched").get<std::string>());
                long age = days_between(fetched, options_.today);
                if (age >= 0 && age < options_.ttl_days) return cached.at("payload");
            } catch (const std::exception&) {
                // unreadable cache entries are refetched
            }
        }
    }

    if (!options_.network) throw Error(ErrorCode::NetworkError, "network disabled and no fresh cache for " + name.value());

    const SplitUrl url = split_url(options_.index_url);
    httplib::Client client(url.origin);
    client.set_follow_location(true);
    client.set_connection_timeout(options_.timeout_seconds);
    client.set_read_timeout(options_.timeout_seconds);
    ++network_calls_;
    auto res = client.Get(url.path + "/" + name.value() + "/json");
    if (!res) {
        throw Error(ErrorCode::NetworkError, name.value() + ": " + httplib::to_string(res.error()));
    }
    if (res->status == 404) throw Error(ErrorCode::NotFound, name.value());
    if (res->status != 200) {
        throw Error(ErrorCode::NetworkError, name.value() + ": HTTP " + std::to_string(res->status));
    }
    json payload;
    try {
        payload = json::parse(res->body);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, name.value() + ": " + e.what());
    }

    if (!options_.cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(options_.cache_dir, ec);
        const auto target = cache_path(name);
        const auto tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp);
            out << json{{"name", name.value()}, {"fetched", format_date(options_.today)}, {"payload", payload}}.dump();
        }
        std::filesystem::rename(tmp, target, ec);
        if (ec) {
            std::lock_guard lock(state_mutex_);
            warnings_.push_back("could not write cache entry for " + name.value() + ": " + ec.message());
        }
    }
    return payload;
}

std::vector<ReleaseRecord> RegistryClient::fetch_package(const NormalizedName& name) {
    json payload = fetch_payload(name);
    std::vector<std::string> warnings;
    auto records = parse_registry_payload(payload, warnings);
    if (!records.empty() && records.front().name != name) {
        throw Error(ErrorCode::SchemaError, "registry returned '" + records.front().name.value() + "' for '" +
                                                name.value() + "'");
    }
    std::lock_guard lock(state_mutex_);
    warnings_.insert(warnings_.end(), warnings.begin(), warnings.end());
    return records;
}

IndexSnapshot snapshot_from_registry_dir(const std::filesystem::path& dir, Date snapshot_date,
                                         std::vector<std::string>& warnings) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::IoError, dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    IndexSnapshot::PackageMap packages;
    for (const auto& file : files) {
        std::ifstream in(file);
        json payload;
        try {
            payload = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::SchemaError, file.string() + ": " + e.what());
        }
        // cache entries wrap the registry document
        if (payload.contains("payload") && payload.contains("fetched")) payload = payload["payload"];
        for (auto& rel : parse_registry_payload(payload, warnings)) packages[rel.name].push_back(std::move(rel));
    }
    return snapshot_as_of(snapshot_date, std::move(packages), warnings);
}

IndexSnapshot snapshot_as_of(Date snapshot_date, IndexSnapshot::PackageMap packages, std::vector<std::string>& warnings) {
    for (auto it = packages.begin(); it != packages.end();) {
        auto& releases = it->second;
        std::erase_if(releases, [&](const ReleaseRecord& rel) {
            if (std::chrono::sys_days{rel.release_date} <= std::chrono::sys_days{snapshot_date}) return false;
            warnings.push_back("dropped " + rel.name.value() + " " + rel.version.raw() + ": released after snapshot date");
            return true;
        });
        it = releases.empty() ? packages.erase(it) : std::next(it);
    }
    return IndexSnapshot(snapshot_date, std::move(packages), warnings);
}

}  // namespace envcheck
