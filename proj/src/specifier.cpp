#include "envcheck/specifier.hpp"

#include <algorithm>
#include <cctype>

#include "envcheck/error.hpp"

namespace envcheck {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

bool prefix_match(const Version& prefix, const Version& v) {
    const auto& want = prefix.release();
    const auto& have = v.release();
    for (std::size_t i = 0; i < want.size(); ++i) {
        std::uint64_t seg = i < have.size() ? have[i] : 0;
        if (seg != want[i]) return false;
    }
    return true;
}

Specifier parse_clause(const std::string& clause) {
    static constexpr std::pair<std::string_view, SpecOp> kOps[] = {
        {"~=", SpecOp::GreaterEqual}, {"==", SpecOp::Equal},       {"!=", SpecOp::NotEqual},
        {"<=", SpecOp::LessEqual},    {">=", SpecOp::GreaterEqual}, {"<", SpecOp::Less},
        {">", SpecOp::Greater},
    };
    if (clause.starts_with("===")) {
        throw Error(ErrorCode::InvalidSpecifier, "arbitrary equality '===' is not supported");
    }
    for (const auto& [token, op] : kOps) {
        if (!clause.starts_with(token)) continue;
        std::string rest = clause.substr(token.size());
        Specifier spec;
        spec.op = op;
        if (rest.ends_with(".*")) {
            if (op != SpecOp::Equal && op != SpecOp::NotEqual) {
                throw Error(ErrorCode::InvalidSpecifier, "'" + clause + "': wildcard only allowed with == and !=");
            }
            spec.op = op == SpecOp::Equal ? SpecOp::PrefixEqual : SpecOp::PrefixNotEqual;
            rest.resize(rest.size() - 2);
        }
        auto version = Version::try_parse(rest);
        if (!version) throw Error(ErrorCode::InvalidSpecifier, "'" + clause + "': bad version");
        if ((spec.op == SpecOp::PrefixEqual || spec.op == SpecOp::PrefixNotEqual) &&
            (version->pre() || version->post() || version->dev())) {
            throw Error(ErrorCode::InvalidSpecifier, "'" + clause + "': wildcard prefix must be a release");
        }
        spec.version = std::move(*version);
        return spec;
    }
    throw Error(ErrorCode::InvalidSpecifier, "'" + clause + "': missing operator");
}

}  // namespace

std::string_view to_string(SpecOp op) noexcept {
    switch (op) {
        case SpecOp::Equal: return "==";
        case SpecOp::NotEqual: return "!=";
        case SpecOp::GreaterEqual: return ">=";
        case SpecOp::LessEqual: return "<=";
        case SpecOp::Greater: return ">";
        case SpecOp::Less: return "<";
        case SpecOp::PrefixEqual: return "==";
        case SpecOp::PrefixNotEqual: return "!=";
    }
    return "?";
}

bool Specifier::contains(const Version& v) const noexcept {
    switch (op) {
        case SpecOp::Equal: return v == version;
        case SpecOp::NotEqual: return v != version;
        case SpecOp::GreaterEqual: return v >= version;
        case SpecOp::LessEqual: return v <= version;
        case SpecOp::Greater:
            if (!(v > version)) return false;
            // >V excludes post-releases of V itself unless V is a post-release
            if (!version.is_postrelease() && v.is_postrelease() && v.base() == version.base()) return false;
            return true;
        case SpecOp::Less:
            if (!(v < version)) return false;
            // <V excludes pre-releases of V itself unless V is a pre-release
            if (!version.is_prerelease() && v.is_prerelease() && v.base() == version.base()) return false;
            return true;
        case SpecOp::PrefixEqual: return prefix_match(version, v);
        case SpecOp::PrefixNotEqual: return !prefix_match(version, v);
    }
    return false;
}

std::string Specifier::str() const {
    std::string out(to_string(op));
    out += version.str();
    if (op == SpecOp::PrefixEqual || op == SpecOp::PrefixNotEqual) out += ".*";
    return out;
}

SpecifierSet SpecifierSet::parse(std::string_view text) {
    std::string compact = strip_spaces(text);
    std::vector<Specifier> specs;
    if (compact.empty()) return SpecifierSet{};

    std::size_t start = 0;
    while (start <= compact.size()) {
        auto comma = compact.find(',', start);
        std::string clause = compact.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (clause.empty()) throw Error(ErrorCode::InvalidSpecifier, "empty clause in '" + std::string(text) + "'");
        if (clause.starts_with("~=")) {
            auto lower = parse_clause(clause);
            const auto& rel = lower.version.release();
            if (rel.size() < 2) {
                throw Error(ErrorCode::InvalidSpecifier, "'" + clause + "': ~= needs at least two release segments");
            }
            std::string prefix;
            for (std::size_t i = 0; i + 1 < rel.size(); ++i) {
                if (i) prefix += '.';
                prefix += std::to_string(rel[i]);
            }
            specs.push_back(lower);
            specs.push_back(Specifier{SpecOp::PrefixEqual, Version::parse(prefix)});
        } else {
            specs.push_back(parse_clause(clause));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return SpecifierSet(std::move(specs));
}

bool SpecifierSet::names_prerelease() const noexcept {
    return std::any_of(specs_.begin(), specs_.end(), [](const Specifier& s) {
        return s.op != SpecOp::NotEqual && s.op != SpecOp::PrefixNotEqual && s.names_prerelease();
    });
}

bool SpecifierSet::matches(const Version& v) const noexcept {
    if (specs_.empty()) return true;
    if (v.is_prerelease() && !names_prerelease()) return false;
    return std::all_of(specs_.begin(), specs_.end(), [&](const Specifier& s) { return s.contains(v); });
}

std::string SpecifierSet::str() const {
    std::string out;
    for (const auto& s : specs_) {
        if (!out.empty()) out += ',';
        out += s.str();
    }
    return out;
}

void SpecifierSet::merge(const SpecifierSet& other) {
    specs_.insert(specs_.end(), other.specs_.begin(), other.specs_.end());
}

SpecifierSet parse_specifier_set(std::string_view text) { return SpecifierSet::parse(text); }

bool matches(const SpecifierSet& set, const Version& v) noexcept { return set.matches(v); }

}  // namespace envcheck
