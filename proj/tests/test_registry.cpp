#include <doctest.h>

#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "envcheck/registry.hpp"
#include "test_support.hpp"

using namespace envcheck;
using envcheck::testing::fixture;
using envcheck::testing::TempDir;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Serves recorded registry documents from tests/fixtures/registry.
class FixtureRegistry {
public:
    FixtureRegistry() {
        server_.Get(R"(/pypi/([^/]+)/json)", [this](const httplib::Request& req, httplib::Response& res) {
            ++hits_;
            auto file = fixture("registry/payloads/" + req.matches[1].str() + ".json");
            if (!std::filesystem::exists(file)) {
                res.status = 404;
                return;
            }
            res.set_content(slurp(file), "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~FixtureRegistry() {
        server_.stop();
        thread_.join();
    }

    [[nodiscard]] std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/pypi"; }
    [[nodiscard]] int hits() const { return hits_.load(); }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> hits_{0};
};

std::string dump_records(const std::vector<ReleaseRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(release_to_json(r));
    return arr.dump();
}

}  // namespace

TEST_CASE("registry fetch matches the equivalent local snapshot") {
    FixtureRegistry registry;
    TempDir cache;
    RegistryOptions opts;
    opts.index_url = registry.url();
    opts.cache_dir = cache.path();
    opts.today = parse_date("2023-07-15");
    RegistryClient client(opts);

    auto fetched = client.fetch_package(normalize_name("gym"));
    auto local = load_snapshot(fixture("registry/gym_snapshot.json"));
    CHECK(dump_records(fetched) == dump_records(*local.find(normalize_name("gym"))));

    // the empty 0.26.3 upload, the legacy version and the URL requirement are reported
    auto warnings = client.warnings();
    CHECK(warnings.size() == 3);
}

TEST_CASE("registry cache is served within its TTL") {
    FixtureRegistry registry;
    TempDir cache;
    RegistryOptions opts;
    opts.index_url = registry.url();
    opts.cache_dir = cache.path();
    opts.today = parse_date("2023-07-15");

    RegistryClient first(opts);
    first.fetch_package(normalize_name("gym"));
    CHECK(first.network_calls() == 1);
    CHECK(std::filesystem::exists(cache.path() / "gym.json"));

    opts.today = parse_date("2023-07-21");  // 6 days later, TTL 7
    RegistryClient second(opts);
    auto records = second.fetch_package(normalize_name("gym"));
    CHECK(second.network_calls() == 0);
    CHECK(records.size() == 3);

    opts.today = parse_date("2023-07-22");  // 7 days: expired
    RegistryClient third(opts);
    third.fetch_package(normalize_name("gym"));
    CHECK(third.network_calls() == 1);
    CHECK(registry.hits() == 2);
}

TEST_CASE("registry errors") {
    FixtureRegistry registry;
    RegistryOptions opts;
    opts.index_url = registry.url();
    RegistryClient client(opts);
    try {
        client.fetch_package(normalize_name("does-not-exist"));
        FAIL("expected NotFound");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFound);
    }

    RegistryOptions offline;
    offline.network = false;
    try {
        RegistryClient(offline).fetch_package(normalize_name("gym"));
        FAIL("expected NetworkError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NetworkError);
    }

    RegistryOptions dead;
    dead.index_url = "http://127.0.0.1:1/pypi";
    dead.timeout_seconds = 2;
    try {
        RegistryClient(dead).fetch_package(normalize_name("gym"));
        FAIL("expected NetworkError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NetworkError);
    }
}

TEST_CASE("registry payload parsing") {
    std::vector<std::string> warnings;
    auto payload = nlohmann::json::parse(slurp(fixture("registry/payloads/gym.json")));
    auto records = parse_registry_payload(payload, warnings);
    REQUIRE(records.size() == 3);
    // earliest upload wins when a version has several files
    CHECK(format_date(records[1].release_date) == "2022-02-17");
    CHECK(records[2].requires_dist.size() == 4);
    CHECK(records[0].requires_dist.empty());

    CHECK_THROWS_AS(parse_registry_payload(nlohmann::json::object(), warnings), Error);
}

TEST_CASE("snapshot from a directory of registry documents") {
    std::vector<std::string> warnings;
    auto snap = snapshot_from_registry_dir(fixture("registry/payloads"), parse_date("2022-06-01"), warnings);
    const auto* gym = snap.find(normalize_name("gym"));
    REQUIRE(gym);
    CHECK(gym->size() == 2);  // 0.26.2 postdates the snapshot
}

TEST_CASE("snapshot_as_of drops later releases") {
    auto rel = [](const char* name, const char* version, const char* date) {
        ReleaseRecord r;
        r.name = normalize_name(name);
        r.version = Version::parse(version);
        r.release_date = parse_date(date);
        return r;
    };
    IndexSnapshot::PackageMap map;
    map[normalize_name("gym")] = {rel("gym", "0.22.0", "2022-02-17"), rel("gym", "0.26.2", "2022-10-04")};
    map[normalize_name("late")] = {rel("late", "1.0", "2024-01-01")};
    std::vector<std::string> warnings;
    const auto snap = snapshot_as_of(parse_date("2022-06-01"), std::move(map), warnings);
    CHECK(snap.packages().size() == 1);
    CHECK(latest_satisfying(snap, normalize_name("gym"), {}).raw() == "0.22.0");
    CHECK(warnings.size() == 2);
}
