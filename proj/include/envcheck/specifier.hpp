#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "envcheck/version.hpp"

namespace envcheck {

enum class SpecOp {
    Equal,          // ==V
    NotEqual,       // !=V
    GreaterEqual,   // >=V
    LessEqual,      // <=V
    Greater,        // >V
    Less,           // <V
    PrefixEqual,    // ==V.*  (also produced by ~=)
    PrefixNotEqual  // !=V.*
};

std::string_view to_string(SpecOp op) noexcept;

/// One version comparison clause.
struct Specifier {
    SpecOp op = SpecOp::GreaterEqual;
    Version version;

    /// Version comparison without any pre-release gating.
    [[nodiscard]] bool contains(const Version& v) const noexcept;
    [[nodiscard]] bool names_prerelease() const noexcept { return version.is_prerelease(); }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Specifier& a, const Specifier& b) noexcept {
        return a.op == b.op && a.version == b.version;
    }
};

/// Conjunction of specifiers. `~=` is expanded at parse time into a
/// GreaterEqual / PrefixEqual pair, so matching has a single code path.
class SpecifierSet {
public:
    SpecifierSet() = default;
    explicit SpecifierSet(std::vector<Specifier> specs) : specs_(std::move(specs)) {}

    /// Comma-separated clauses, whitespace-insensitive. Throws
    /// Error{InvalidSpecifier}.
    static SpecifierSet parse(std::string_view text);

    [[nodiscard]] const std::vector<Specifier>& specifiers() const noexcept { return specs_; }
    [[nodiscard]] bool empty() const noexcept { return specs_.empty(); }
    [[nodiscard]] bool names_prerelease() const noexcept;

    /// Every clause holds, and a pre/dev version is accepted only when some
    /// clause names a pre/dev version. The empty set accepts everything.
    [[nodiscard]] bool matches(const Version& v) const noexcept;

    /// Canonical text, clauses joined by ",". `~=` renders in its expanded
    /// form. The empty set renders as "".
    [[nodiscard]] std::string str() const;

    /// Appends the clauses of `other`.
    void merge(const SpecifierSet& other);

    friend bool operator==(const SpecifierSet&, const SpecifierSet&) = default;

private:
    std::vector<Specifier> specs_;
};

SpecifierSet parse_specifier_set(std::string_view text);
bool matches(const SpecifierSet& set, const Version& v) noexcept;

}  // namespace envcheck
