#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace envcheck {

enum class PrePhase { Alpha, Beta, ReleaseCandidate };

struct PreRelease {
    PrePhase phase = PrePhase::Alpha;
    std::uint64_t number = 0;

    friend bool operator==(const PreRelease&, const PreRelease&) = default;
};

/// A package version in the release/pre/post/dev subset of the Python
/// packaging version scheme. Epochs ("1!2.0") and local labels ("1.0+abc")
/// are rejected.
///
/// Ordering ignores trailing zero release segments, so 1.0 == 1.0.0. The raw
/// text is kept for reporting only and does not take part in comparison.
class Version {
public:
    Version() = default;

    /// Throws Error{InvalidVersion}.
    static Version parse(std::string_view text);
    static std::optional<Version> try_parse(std::string_view text) noexcept;

    [[nodiscard]] const std::vector<std::uint64_t>& release() const noexcept { return release_; }
    [[nodiscard]] const std::optional<PreRelease>& pre() const noexcept { return pre_; }
    [[nodiscard]] const std::optional<std::uint64_t>& post() const noexcept { return post_; }
    [[nodiscard]] const std::optional<std::uint64_t>& dev() const noexcept { return dev_; }
    [[nodiscard]] const std::string& raw() const noexcept { return raw_; }

    /// Pre-release or development release.
    [[nodiscard]] bool is_prerelease() const noexcept { return pre_.has_value() || dev_.has_value(); }
    [[nodiscard]] bool is_postrelease() const noexcept { return post_.has_value(); }

    /// Canonical string form, e.g. "1.0rc1.post2.dev3".
    [[nodiscard]] std::string str() const;

    /// The release-only version (suffixes dropped).
    [[nodiscard]] Version base() const;

    friend std::strong_ordering operator<=>(const Version& a, const Version& b) noexcept;
    friend bool operator==(const Version& a, const Version& b) noexcept {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    std::vector<std::uint64_t> release_;
    std::optional<PreRelease> pre_;
    std::optional<std::uint64_t> post_;
    std::optional<std::uint64_t> dev_;
    std::string raw_;
};

std::strong_ordering compare_versions(const Version& a, const Version& b) noexcept;

/// Compares only the release segments, zero-padding the shorter one.
std::strong_ordering compare_release(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) noexcept;

}  // namespace envcheck
