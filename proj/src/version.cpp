#include "envcheck/version.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "envcheck/error.hpp"

namespace envcheck {

namespace {

class VersionLexer {
public:
    explicit VersionLexer(std::string_view text) : s_(text) {}

    [[nodiscard]] bool done() const noexcept { return pos_ >= s_.size(); }
    [[nodiscard]] char peek(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
    }
    [[nodiscard]] std::size_t pos() const noexcept { return pos_; }
    void reset(std::size_t p) noexcept { pos_ = p; }

    bool eat(char c) noexcept {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_separator() noexcept { return eat('.') || eat('-') || eat('_'); }

    bool eat_word(std::string_view w) noexcept {
        if (s_.substr(pos_, w.size()) == w) {
            // a word must not run into further letters ("rc" vs "rcx")
            char next = pos_ + w.size() < s_.size() ? s_[pos_ + w.size()] : '\0';
            if (std::isalpha(static_cast<unsigned char>(next))) return false;
            pos_ += w.size();
            return true;
        }
        return false;
    }

    std::optional<std::uint64_t> number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                throw Error(ErrorCode::InvalidVersion, "numeric component overflows");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string lower_trimmed(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = text.find_last_not_of(" \t\r\n");
    std::string out(text.substr(first, last - first + 1));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::optional<PrePhase> lex_pre_phase(VersionLexer& lx) {
    // longer spellings first so "preview" is not read as "pre"
    static constexpr std::pair<std::string_view, PrePhase> kWords[] = {
        {"preview", PrePhase::ReleaseCandidate}, {"alpha", PrePhase::Alpha},
        {"beta", PrePhase::Beta},                {"pre", PrePhase::ReleaseCandidate},
        {"rc", PrePhase::ReleaseCandidate},      {"a", PrePhase::Alpha},
        {"b", PrePhase::Beta},                   {"c", PrePhase::ReleaseCandidate},
    };
    for (const auto& [word, phase] : kWords) {
        if (lx.eat_word(word)) return phase;
    }
    return std::nullopt;
}

// Sort key for the suffix part. Lower rank sorts first.
struct SuffixKey {
    int pre_rank;          // 0: dev-only (before any pre), 1: pre present, 2: no pre
    int pre_phase;
    std::uint64_t pre_num;
    int post_rank;         // 0: no post, 1: post present
    std::uint64_t post_num;
    int dev_rank;          // 0: dev present, 1: no dev
    std::uint64_t dev_num;

    friend auto operator<=>(const SuffixKey&, const SuffixKey&) = default;
};

SuffixKey suffix_key(const Version& v) {
    SuffixKey k{};
    if (v.pre()) {
        k.pre_rank = 1;
        k.pre_phase = static_cast<int>(v.pre()->phase);
        k.pre_num = v.pre()->number;
    } else if (v.dev() && !v.post()) {
        k.pre_rank = 0;
    } else {
        k.pre_rank = 2;
    }
    if (v.post()) {
        k.post_rank = 1;
        k.post_num = *v.post();
    }
    if (v.dev()) {
        k.dev_rank = 0;
        k.dev_num = *v.dev();
    } else {
        k.dev_rank = 1;
    }
    return k;
}

}  // namespace

Version Version::parse(std::string_view text) {
    std::string norm = lower_trimmed(text);
    if (norm.empty()) throw Error(ErrorCode::InvalidVersion, "empty version string");

    VersionLexer lx(norm);
    Version v;
    v.raw_ = std::string(text);

    lx.eat('v');
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        auto first = lx.number();
        if (lx.peek() == '!') {
            throw Error(ErrorCode::InvalidVersion, "'" + std::string(text) + "': epochs are not supported");
        }
        v.release_.push_back(*first);
    } else {
        throw Error(ErrorCode::InvalidVersion, "'" + std::string(text) + "'");
    }
    while (lx.peek() == '.' && std::isdigit(static_cast<unsigned char>(lx.peek(1)))) {
        lx.eat('.');
        v.release_.push_back(*lx.number());
    }

    // pre-release
    {
        auto save = lx.pos();
        lx.eat_separator();
        if (auto phase = lex_pre_phase(lx)) {
            auto before_num = lx.pos();
            lx.eat_separator();
            auto num = lx.number();
            if (!num) lx.reset(before_num);
            v.pre_ = PreRelease{*phase, num.value_or(0)};
        } else {
            lx.reset(save);
        }
    }

    // post-release: "-N" or [sep](post|rev|r)[sep][N]
    {
        auto save = lx.pos();
        if (lx.peek() == '-' && std::isdigit(static_cast<unsigned char>(lx.peek(1)))) {
            lx.eat('-');
            v.post_ = *lx.number();
        } else {
            lx.eat_separator();
            if (lx.eat_word("post") || lx.eat_word("rev") || lx.eat_word("r")) {
                auto before_num = lx.pos();
                lx.eat_separator();
                auto num = lx.number();
                if (!num) lx.reset(before_num);
                v.post_ = num.value_or(0);
            } else {
                lx.reset(save);
            }
        }
    }

    // development release
    {
        auto save = lx.pos();
        lx.eat_separator();
        if (lx.eat_word("dev")) {
            auto before_num = lx.pos();
            lx.eat_separator();
            auto num = lx.number();
            if (!num) lx.reset(before_num);
            v.dev_ = num.value_or(0);
        } else {
            lx.reset(save);
        }
    }

    if (lx.peek() == '+') {
        throw Error(ErrorCode::InvalidVersion,
                    "'" + std::string(text) + "': local version labels are not supported");
    }
    if (!lx.done()) throw Error(ErrorCode::InvalidVersion, "'" + std::string(text) + "'");
    return v;
}

std::optional<Version> Version::try_parse(std::string_view text) noexcept {
    try {
        return parse(text);
    } catch (...) {
        return std::nullopt;
    }
}

std::string Version::str() const {
    std::string out;
    for (std::size_t i = 0; i < release_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(release_[i]);
    }
    if (pre_) {
        switch (pre_->phase) {
            case PrePhase::Alpha: out += 'a'; break;
            case PrePhase::Beta: out += 'b'; break;
            case PrePhase::ReleaseCandidate: out += "rc"; break;
        }
        out += std::to_string(pre_->number);
    }
    if (post_) out += ".post" + std::to_string(*post_);
    if (dev_) out += ".dev" + std::to_string(*dev_);
    return out;
}

Version Version::base() const {
    Version v;
    v.release_ = release_;
    v.raw_ = v.str();
    return v;
}

std::strong_ordering compare_release(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) noexcept {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Version& a, const Version& b) noexcept {
    if (auto c = compare_release(a.release_, b.release_); c != 0) return c;
    return suffix_key(a) <=> suffix_key(b);
}

std::strong_ordering compare_versions(const Version& a, const Version& b) noexcept { return a <=> b; }

}  // namespace envcheck
