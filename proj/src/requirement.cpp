#include "envcheck/requirement.hpp"

#include <cctype>

#include "envcheck/error.hpp"

namespace envcheck {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
}

}  // namespace

std::string DependencyDecl::str() const {
    std::string out = name.value() + constraint.str();
    if (marker) out += "; " + *marker;
    return out;
}

Requirement parse_requirement(std::string_view text) {
    std::string_view body = trim(text);
    Requirement req;

    if (auto semi = body.find(';'); semi != std::string_view::npos) {
        auto marker = trim(body.substr(semi + 1));
        if (marker.empty()) throw Error(ErrorCode::InvalidSpecifier, "empty marker in '" + std::string(text) + "'");
        req.decl.marker = std::string(marker);
        body = trim(body.substr(0, semi));
    }

    std::size_t i = 0;
    while (i < body.size() && is_name_char(body[i])) ++i;
    req.decl.name = normalize_name(body.substr(0, i));
    std::string_view rest = trim(body.substr(i));

    if (!rest.empty() && rest.front() == '[') {
        auto close = rest.find(']');
        if (close == std::string_view::npos) {
            throw Error(ErrorCode::InvalidSpecifier, "unterminated extras in '" + std::string(text) + "'");
        }
        std::string_view extras = rest.substr(1, close - 1);
        std::size_t start = 0;
        while (start <= extras.size()) {
            auto comma = extras.find(',', start);
            auto item = trim(extras.substr(start, comma == std::string_view::npos ? extras.npos : comma - start));
            if (!item.empty()) req.extras.emplace_back(item);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rest = trim(rest.substr(close + 1));
    }

    if (!rest.empty() && rest.front() == '@') {
        throw Error(ErrorCode::InvalidSpecifier, "URL requirements are not supported: '" + std::string(text) + "'");
    }
    if (!rest.empty() && rest.front() == '(') {
        if (rest.back() != ')') throw Error(ErrorCode::InvalidSpecifier, "unbalanced '(' in '" + std::string(text) + "'");
        rest = trim(rest.substr(1, rest.size() - 2));
    }
    req.decl.constraint = SpecifierSet::parse(rest);
    return req;
}

}  // namespace envcheck
