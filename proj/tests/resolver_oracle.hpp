#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "envcheck/snapshot.hpp"

namespace envcheck::testing {

struct OracleTally {
    int draws = 0;
    int mismatches = 0;
    std::string first_mismatch;
};

inline ReleaseRecord oracle_release(const std::string& name, const std::string& version, const Date& date) {
    ReleaseRecord r;
    r.name = normalize_name(name);
    r.version = Version::parse(version);
    r.release_date = date;
    return r;
}

/// latest_satisfying against filter-then-max over random packages and constraints.
inline OracleTally latest_satisfying_oracle(int draws, unsigned seed) {
    std::mt19937 rng(seed);
    static constexpr const char* kOps[] = {">=", "<=", ">", "<", "==", "!=", "~="};
    OracleTally t;
    const auto name = normalize_name("pkg");
    for (int draw = 0; draw < draws; ++draw) {
        IndexSnapshot::PackageMap map;
        std::vector<Version> seen;
        const int n = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) {
            std::string v = std::to_string(rng() % 3) + "." + std::to_string(rng() % 4);
            if (rng() % 3 == 0) v += "." + std::to_string(rng() % 3);
            if (rng() % 6 == 0) v += "rc" + std::to_string(rng() % 2);
            auto parsed = Version::parse(v);
            if (std::find(seen.begin(), seen.end(), parsed) != seen.end()) continue;
            seen.push_back(parsed);
            map[name].push_back(oracle_release("pkg", v, parse_date("2020-01-01")));
        }
        IndexSnapshot snap(parse_date("2023-01-01"), std::move(map));

        std::string text;
        const int clauses = static_cast<int>(rng() % 3);
        for (int c = 0; c < clauses; ++c) {
            if (c) text += ",";
            std::string op = kOps[rng() % std::size(kOps)];
            std::string v = std::to_string(rng() % 3) + "." + std::to_string(rng() % 4);
            if (op != "~=" && rng() % 8 == 0) v += "rc1";
            text += op + v;
        }
        const auto set = parse_specifier_set(text);

        std::optional<Version> expected;
        for (const auto& v : seen) {
            if (v.is_prerelease() && !set.names_prerelease()) continue;
            if (!set.matches(v)) continue;
            if (!expected || v > *expected) expected = v;
        }
        std::optional<Version> got;
        try {
            got = latest_satisfying(snap, name, set);
        } catch (const NoSatisfyingVersionError&) {
        }
        ++t.draws;
        if (got != expected) {
            if (!t.mismatches) t.first_mismatch = "constraint '" + text + "'";
            ++t.mismatches;
        }
    }
    return t;
}

/// detect_version_date_inversions against the O(n^2) pair enumeration.
inline OracleTally inversion_oracle(int draws, unsigned seed) {
    std::mt19937 rng(seed);
    OracleTally t;
    const auto name = normalize_name("p");
    for (int draw = 0; draw < draws; ++draw) {
        IndexSnapshot::PackageMap map;
        const int n = 1 + static_cast<int>(rng() % 15);
        for (int i = 0; i < n; ++i) {
            auto date = add_days(parse_date("2015-01-01"), static_cast<long>(rng() % 40));
            map[name].push_back(oracle_release("p", "1." + std::to_string(i), date));
        }
        IndexSnapshot snap(parse_date("2023-01-01"), map);
        const auto& rels = *snap.find(name);
        std::vector<std::pair<Version, Version>> expected;
        for (const auto& a : rels) {
            for (const auto& b : rels) {
                if (a.version < b.version && days_between(b.release_date, a.release_date) > 0) {
                    expected.emplace_back(a.version, b.version);
                }
            }
        }
        std::sort(expected.begin(), expected.end());
        ++t.draws;
        if (detect_version_date_inversions(snap, name) != expected) {
            if (!t.mismatches) t.first_mismatch = "draw " + std::to_string(draw);
            ++t.mismatches;
        }
    }
    return t;
}

}  // namespace envcheck::testing
