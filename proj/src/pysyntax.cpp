#include "envcheck/pysyntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <utility>

namespace envcheck::py {

namespace {

struct SyntaxIssue {
    FailureReason reason;
    int line;
    std::string message;
};

[[noreturn]] void syntax_error(int line, std::string message) {
    throw SyntaxIssue{FailureReason::Syntax, line, std::move(message)};
}

// ---------------------------------------------------------------- encoding

bool valid_utf8(std::string_view s, int& bad_line) {
    int line = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        if (c == '\n') ++line;
        if (c < 0x80) {
            ++i;
            continue;
        }
        int extra = 0;
        unsigned cp = 0;
        if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            bad_line = line;
            return false;
        }
        if (i + extra >= s.size()) {
            bad_line = line;
            return false;
        }
        for (int k = 1; k <= extra; ++k) {
            auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) {
                bad_line = line;
                return false;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        static constexpr std::array<unsigned, 4> kMin{0, 0x80, 0x800, 0x10000};
        if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            bad_line = line;
            return false;
        }
        i += extra + 1;
    }
    return true;
}

std::string lower_codec(std::string name) {
    for (auto& c : name) {
        c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return name;
}

std::optional<std::string> coding_cookie(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\f')) ++i;
    if (i >= line.size() || line[i] != '#') return std::nullopt;
    auto at = line.find("coding", i);
    if (at == std::string_view::npos) return std::nullopt;
    std::size_t j = at + 6;
    if (j >= line.size() || (line[j] != ':' && line[j] != '=')) return std::nullopt;
    ++j;
    while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) ++j;
    std::size_t k = j;
    while (k < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[k])) || line[k] == '-' || line[k] == '_' || line[k] == '.')) {
        ++k;
    }
    if (k == j) return std::nullopt;
    return std::string(line.substr(j, k - j));
}

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\f' && c != '\r') return false;
    }
    return true;
}

// iso-8859-N, cpNNN, windows-NNNN
bool codec_family(const std::string& codec) {
    for (std::string_view prefix : {"iso-8859-", "iso8859-", "cp", "windows-"}) {
        if (codec.size() > prefix.size() && codec.compare(0, prefix.size(), prefix) == 0 &&
            codec.find_first_not_of("0123456789", prefix.size()) == std::string::npos) {
            return true;
        }
    }
    return false;
}

// Validates the byte stream against the declared (or default) source encoding
// and returns the text to tokenize.
std::string_view check_encoding(std::string_view src, Dialect dialect) {
    bool bom = src.size() >= 3 && src.substr(0, 3) == "\xEF\xBB\xBF";
    if (bom) src.remove_prefix(3);

    std::optional<std::string> cookie;
    auto first_end = src.find('\n');
    std::string_view first = src.substr(0, first_end);
    cookie = coding_cookie(first);
    if (!cookie && first_end != std::string_view::npos && blank_or_comment(first)) {
        auto rest = src.substr(first_end + 1);
        cookie = coding_cookie(rest.substr(0, rest.find('\n')));
    }

    auto fail = [](int line, std::string msg) { throw SyntaxIssue{FailureReason::Encoding, line, std::move(msg)}; };
    std::string codec = cookie ? lower_codec(*cookie) : (bom || dialect == Dialect::Modern ? "utf-8" : "ascii");
    if (codec == "utf8" || codec.rfind("utf-8", 0) == 0) codec = "utf-8";
    if (bom && codec != "utf-8") fail(1, "encoding problem: " + codec + " with BOM");

    static const std::set<std::string> kSingleByte = {
        "latin-1", "latin1", "iso-8859-1", "iso8859-1", "iso-latin-1", "l1", "cp1252", "windows-1252",
        "iso-8859-15", "iso8859-15", "latin-9", "cp1251", "windows-1251", "koi8-r", "koi8-u", "cp437",
        "cp850", "iso-8859-2", "iso8859-2", "cp1250", "iso-8859-7", "cp1253", "iso-8859-9", "cp1254",
        "mac-roman", "macroman"};
    static const std::set<std::string> kMultiByte = {
        "euc-jp", "shift-jis", "shift_jis", "sjis", "cp932", "gbk", "gb2312", "gb18030", "big5", "cp950",
        "euc-kr", "cp949", "utf-16", "utf-32", "iso-2022-jp"};

    int bad_line = 0;
    if (codec == "utf-8") {
        if (!valid_utf8(src, bad_line)) fail(bad_line, "invalid utf-8 byte sequence");
    } else if (codec == "ascii" || codec == "us-ascii") {
        int line = 1;
        for (char c : src) {
            if (c == '\n') ++line;
            if (static_cast<unsigned char>(c) >= 0x80) fail(line, "non-ascii byte without an encoding declaration");
        }
    } else if (!kSingleByte.contains(codec) && !kMultiByte.contains(codec) && !codec_family(codec)) {
        fail(1, "unknown encoding: " + codec);
    }
    return src;
}

// ---------------------------------------------------------------- tokens

enum class Tok { Name, Number, String, Op, Newline, Indent, Dedent, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    // plain str literal value (not bytes, not f-string)
    std::optional<std::string> str_value;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

class Tokenizer {
public:
    Tokenizer(std::string_view src, Dialect d) : src_(src), dialect_(d) {}

    std::vector<Token> run() {
        indents_.push_back({0, 0});
        bool line_start = true;
        while (true) {
            if (line_start && depth_ == 0) {
                if (!indentation()) break;
                line_start = false;
            }
            if (i_ >= src_.size()) break;
            char c = src_[i_];
            if (c == ' ' || c == '\t' || c == '\f') {
                ++i_;
            } else if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n' && src_[i_] != '\r') ++i_;
            } else if (c == '\\') {
                ++i_;
                if (!eat_newline()) {
                    if (i_ >= src_.size()) syntax_error(line_, "unexpected EOF after line continuation");
                    syntax_error(line_, "unexpected character after line continuation character");
                }
                if (i_ >= src_.size()) syntax_error(line_, "unexpected EOF after line continuation");
            } else if (c == '\n' || c == '\r') {
                if (depth_ == 0 && !out_.empty() && out_.back().kind != Tok::Newline) push(Tok::Newline, "");
                eat_newline();
                line_start = depth_ == 0;
            } else if (ident_start(static_cast<unsigned char>(c))) {
                name_or_string();
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '.' && i_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_ + 1])))) {
                number();
            } else if (c == '"' || c == '\'') {
                string_literal(i_, "");
            } else {
                op();
            }
        }
        if (depth_ > 0) syntax_error(line_, "unexpected EOF: unclosed bracket");
        if (!out_.empty() && out_.back().kind != Tok::Newline && out_.back().kind != Tok::Dedent) push(Tok::Newline, "");
        while (indents_.size() > 1) {
            indents_.pop_back();
            push(Tok::Dedent, "");
        }
        push(Tok::End, "");
        return std::move(out_);
    }

private:
    void push(Tok k, std::string text, std::optional<std::string> value = std::nullopt) {
        out_.push_back(Token{k, std::move(text), line_, std::move(value)});
    }

    bool eat_newline() {
        if (i_ < src_.size() && src_[i_] == '\r') {
            ++i_;
            if (i_ < src_.size() && src_[i_] == '\n') ++i_;
            ++line_;
            return true;
        }
        if (i_ < src_.size() && src_[i_] == '\n') {
            ++i_;
            ++line_;
            return true;
        }
        return false;
    }

    // Measures the indentation of the next logical line; skips blank and
    // comment-only lines. Returns false at end of input.
    bool indentation() {
        while (true) {
            int col = 0, alt = 0;
            while (i_ < src_.size()) {
                char c = src_[i_];
                if (c == ' ') {
                    ++col;
                    ++alt;
                } else if (c == '\t') {
                    col = (col / 8 + 1) * 8;
                    ++alt;
                } else if (c == '\f') {
                    col = alt = 0;
                } else {
                    break;
                }
                ++i_;
            }
            if (i_ >= src_.size()) return false;
            char c = src_[i_];
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n' && src_[i_] != '\r') ++i_;
                if (!eat_newline()) return false;
                continue;
            }
            if (c == '\n' || c == '\r') {
                eat_newline();
                continue;
            }
            if (c == '\\') {
                // a continuation line that starts a logical line
                return true;
            }
            apply_indent(col, alt);
            return true;
        }
    }

    void apply_indent(int col, int alt) {
        const bool strict = dialect_ == Dialect::Modern;
        auto [top, top_alt] = indents_.back();
        if (col == top) {
            if (strict && alt != top_alt) syntax_error(line_, "inconsistent use of tabs and spaces in indentation");
            return;
        }
        if (col > top) {
            if (strict && alt <= top_alt) syntax_error(line_, "inconsistent use of tabs and spaces in indentation");
            indents_.push_back({col, alt});
            push(Tok::Indent, "");
            return;
        }
        while (indents_.size() > 1 && indents_.back().first > col) {
            indents_.pop_back();
            push(Tok::Dedent, "");
        }
        if (indents_.back().first != col) syntax_error(line_, "unindent does not match any outer indentation level");
        if (strict && indents_.back().second != alt) {
            syntax_error(line_, "inconsistent use of tabs and spaces in indentation");
        }
    }

    bool string_prefix(std::string lower) const {
        static const std::set<std::string> kModern = {"r", "u", "b", "br", "rb", "f", "fr", "rf"};
        static const std::set<std::string> kLegacy = {"r", "u", "b", "br", "ur", "rb"};
        return dialect_ == Dialect::Modern ? kModern.contains(lower) : kLegacy.contains(lower);
    }

    void name_or_string() {
        std::size_t j = i_;
        while (j < src_.size() && ident_char(static_cast<unsigned char>(src_[j]))) ++j;
        std::string word(src_.substr(i_, j - i_));
        if (j < src_.size() && (src_[j] == '"' || src_[j] == '\'') && word.size() <= 2) {
            std::string lower = word;
            for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            if (string_prefix(lower)) {
                i_ = j;
                string_literal(j, lower);
                return;
            }
        }
        i_ = j;
        push(Tok::Name, std::move(word));
    }

    void string_literal(std::size_t quote_at, const std::string& prefix) {
        const int start_line = line_;
        const char q = src_[quote_at];
        const bool triple = quote_at + 2 < src_.size() && src_[quote_at + 1] == q && src_[quote_at + 2] == q;
        const bool raw = prefix.find('r') != std::string::npos;
        std::size_t j = quote_at + (triple ? 3 : 1);
        std::string value;
        while (true) {
            if (j >= src_.size()) {
                line_ = start_line;
                syntax_error(start_line, triple ? "unterminated triple-quoted string literal"
                                                : "unterminated string literal");
            }
            char c = src_[j];
            if (c == '\\') {
                if (j + 1 >= src_.size()) continue;
                char n = src_[j + 1];
                if (n == '\n' || n == '\r') {
                    ++line_;
                    if (n == '\r' && j + 2 < src_.size() && src_[j + 2] == '\n') ++j;
                    j += 2;
                    if (raw) value += '\\';
                    continue;
                }
                if (raw) {
                    value += c;
                    value += n;
                } else {
                    switch (n) {
                        case 'n': value += '\n'; break;
                        case 't': value += '\t'; break;
                        case '\\': value += '\\'; break;
                        case '\'': value += '\''; break;
                        case '"': value += '"'; break;
                        default:
                            value += c;
                            value += n;
                    }
                }
                j += 2;
                continue;
            }
            if (c == '\n' || c == '\r') {
                if (!triple) syntax_error(start_line, "unterminated string literal");
                ++line_;
                if (c == '\r' && j + 1 < src_.size() && src_[j + 1] == '\n') {
                    ++j;
                }
                value += '\n';
                ++j;
                continue;
            }
            if (c == q) {
                if (!triple) {
                    ++j;
                    break;
                }
                if (j + 2 < src_.size() && src_[j + 1] == q && src_[j + 2] == q) {
                    j += 3;
                    break;
                }
            }
            value += c;
            ++j;
        }
        std::optional<std::string> plain;
        if (prefix.find('b') == std::string::npos && prefix.find('f') == std::string::npos) plain = std::move(value);
        std::string text(src_.substr(i_, j - i_));
        i_ = j;
        out_.push_back(Token{Tok::String, std::move(text), start_line, std::move(plain)});
    }

    void number() {
        std::size_t j = i_;
        auto digits = [&](auto pred) {
            std::size_t k = j;
            while (j < src_.size() && (pred(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
            return j > k;
        };
        auto is_dec = [](unsigned char c) { return std::isdigit(c) != 0; };
        bool is_float = false;
        if (src_[j] == '0' && j + 1 < src_.size() && std::string_view("xXoObB").find(src_[j + 1]) != std::string_view::npos) {
            char base = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[j + 1])));
            j += 2;
            bool ok = false;
            if (base == 'x') ok = digits([](unsigned char c) { return std::isxdigit(c) != 0; });
            if (base == 'o') ok = digits([](unsigned char c) { return c >= '0' && c <= '7'; });
            if (base == 'b') ok = digits([](unsigned char c) { return c == '0' || c == '1'; });
            if (!ok) syntax_error(line_, "invalid number literal");
        } else {
            digits(is_dec);
            if (j < src_.size() && src_[j] == '.') {
                ++j;
                is_float = true;
                digits(is_dec);
            }
            if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
                if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
                    j = k;
                    digits(is_dec);
                    is_float = true;
                }
            }
            std::string_view lit = src_.substr(i_, j - i_);
            if (!is_float && dialect_ == Dialect::Modern && lit.size() > 1 && lit[0] == '0' &&
                lit.find_first_not_of("0_") != std::string_view::npos) {
                syntax_error(line_, "leading zeros in decimal integer literals are not permitted");
            }
        }
        if (j < src_.size() && (src_[j] == 'j' || src_[j] == 'J')) {
            ++j;
        } else if (j < src_.size() && (src_[j] == 'l' || src_[j] == 'L') && dialect_ == Dialect::Legacy && !is_float) {
            ++j;
        }
        if (j < src_.size() && src_[j] == '_') syntax_error(line_, "invalid decimal literal");
        push(Tok::Number, std::string(src_.substr(i_, j - i_)));
        i_ = j;
    }

    void op() {
        static constexpr std::array<std::string_view, 24> kThreeTwo = {
            "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", ">>", "<<", "<=",
            ">=",  "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@="};
        for (auto candidate : kThreeTwo) {
            if (src_.substr(i_, candidate.size()) == candidate) {
                push(Tok::Op, std::string(candidate));
                i_ += candidate.size();
                return;
            }
        }
        if (dialect_ == Dialect::Legacy && src_.substr(i_, 2) == "<>") {
            push(Tok::Op, "<>");
            i_ += 2;
            return;
        }
        char c = src_[i_];
        static constexpr std::string_view kSingle = "+-*/%@&|^~<>()[]{},:;.=";
        if (kSingle.find(c) != std::string_view::npos || (c == '`' && dialect_ == Dialect::Legacy)) {
            if (c == '(' || c == '[' || c == '{') ++depth_;
            if (c == ')' || c == ']' || c == '}') {
                if (depth_ == 0) syntax_error(line_, std::string("unmatched '") + c + "'");
                --depth_;
            }
            push(Tok::Op, std::string(1, c));
            ++i_;
            return;
        }
        syntax_error(line_, std::string("invalid character '") + c + "'");
    }

    std::string_view src_;
    Dialect dialect_;
    std::size_t i_ = 0;
    int line_ = 1;
    int depth_ = 0;
    std::vector<std::pair<int, int>> indents_;
    std::vector<Token> out_;
};

// ---------------------------------------------------------------- parser

struct Expr {
    enum Kind { Name, Attr, Subscript, Call, Literal, Tuple, List, Starred, Yield, Other } kind = Other;
    bool parenthesized = false;
    bool elements_assignable = false;  // Tuple/List/Starred
    std::string dotted;                // Name/Attr chains
    std::optional<std::string> str;    // plain string literal

    [[nodiscard]] bool assignable() const {
        switch (kind) {
            case Name:
            case Attr:
            case Subscript:
                return true;
            case Tuple:
            case List:
            case Starred:
                return elements_assignable;
            default:
                return false;
        }
    }
    [[nodiscard]] bool single_target() const { return kind == Name || kind == Attr || kind == Subscript; }
};

struct Backtrack {};

class Parser {
public:
    Parser(std::vector<Token> tokens, Dialect dialect) : t_(std::move(tokens)), dialect_(dialect) {
        if (dialect_ == Dialect::Legacy) {
            keywords_ = {"and", "as", "assert", "break", "class", "continue", "def", "del", "elif", "else",
                         "except", "exec", "finally", "for", "from", "global", "if", "import", "in", "is",
                         "lambda", "not", "or", "pass", "print", "raise", "return", "try", "while", "with", "yield"};
            if (has_print_function()) keywords_.erase("print");
        } else {
            keywords_ = {"False", "None", "True", "and", "as", "assert", "async", "await", "break", "class",
                         "continue", "def", "del", "elif", "else", "except", "finally", "for", "from", "global",
                         "if", "import", "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return",
                         "try", "while", "with", "yield"};
        }
    }

    std::vector<Stmt> parse_file() {
        std::vector<Stmt> out;
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Newline) {
                ++p_;
                continue;
            }
            auto stmts = parse_statement();
            for (auto& s : stmts) out.push_back(std::move(s));
        }
        return out;
    }

private:
    // -- token helpers
    const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
    bool at_op(std::string_view op, std::size_t k = 0) const {
        return peek(k).kind == Tok::Op && peek(k).text == op;
    }
    bool at_kw(std::string_view kw, std::size_t k = 0) const {
        return peek(k).kind == Tok::Name && peek(k).text == kw && keywords_.contains(peek(k).text);
    }
    bool at_soft(std::string_view word, std::size_t k = 0) const {
        return peek(k).kind == Tok::Name && peek(k).text == word;
    }
    bool at_identifier(std::size_t k = 0) const {
        return peek(k).kind == Tok::Name && !keywords_.contains(peek(k).text);
    }
    int line() const { return peek().line; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& tok = peek();
        std::string got;
        switch (tok.kind) {
            case Tok::Newline: got = "end of line"; break;
            case Tok::Indent: got = "indent"; break;
            case Tok::Dedent: got = "dedent"; break;
            case Tok::End: got = "end of file"; break;
            default: got = "'" + tok.text + "'";
        }
        syntax_error(tok.line, what + ", found " + got);
    }
    void expect_op(std::string_view op) {
        if (!at_op(op)) fail("expected '" + std::string(op) + "'");
        ++p_;
    }
    void expect_kw(std::string_view kw) {
        if (!at_kw(kw)) fail("expected '" + std::string(kw) + "'");
        ++p_;
    }
    std::string expect_identifier() {
        if (!at_identifier()) fail("expected a name");
        return t_[p_++].text;
    }
    void expect_newline() {
        if (peek().kind != Tok::Newline) fail("expected end of statement");
        ++p_;
    }

    bool has_print_function() const {
        for (std::size_t i = 0; i + 3 < t_.size(); ++i) {
            if (t_[i].kind == Tok::Name && t_[i].text == "from" && t_[i + 1].text == "__future__" &&
                t_[i + 2].text == "import") {
                for (std::size_t j = i + 3; j < t_.size() && t_[j].kind != Tok::Newline; ++j) {
                    if (t_[j].text == "print_function") return true;
                }
            }
        }
        return false;
    }

    // -- statements
    std::vector<Stmt> parse_statement() {
        if (peek().kind == Tok::Indent) fail("unexpected indent");
        if (peek().kind == Tok::Dedent) fail("unexpected dedent");
        if (at_op("@")) return {parse_decorated()};
        if (at_kw("if")) return {parse_if()};
        if (at_kw("while")) return {parse_while()};
        if (at_kw("for")) return {parse_for()};
        if (at_kw("try")) return {parse_try()};
        if (at_kw("with")) return {parse_with()};
        if (at_kw("def")) return {parse_def()};
        if (at_kw("class")) return {parse_class()};
        if (at_kw("async") && (at_kw("def", 1) || at_kw("for", 1) || at_kw("with", 1))) {
            ++p_;
            if (at_kw("def")) return {parse_def()};
            if (at_kw("for")) return {parse_for()};
            return {parse_with()};
        }
        if (dialect_ == Dialect::Modern && at_soft("match")) {
            if (auto m = try_parse_match()) return {std::move(*m)};
        }
        return parse_simple_line();
    }

    std::vector<Stmt> parse_simple_line() {
        std::vector<Stmt> out;
        while (true) {
            out.push_back(parse_small_stmt());
            if (at_op(";")) {
                ++p_;
                if (peek().kind == Tok::Newline) break;
                continue;
            }
            break;
        }
        expect_newline();
        return out;
    }

    std::vector<Stmt> parse_suite() {
        std::vector<Stmt> out;
        if (peek().kind != Tok::Newline) return parse_simple_line();
        ++p_;
        if (peek().kind != Tok::Indent) fail("expected an indented block");
        ++p_;
        while (peek().kind != Tok::Dedent && peek().kind != Tok::End) {
            auto stmts = parse_statement();
            for (auto& s : stmts) out.push_back(std::move(s));
        }
        if (peek().kind == Tok::Dedent) ++p_;
        return out;
    }

    // Collects call sites produced while parsing a statement header or body.
    struct CallScope {
        Parser& p;
        std::vector<CallSite>* saved;
        std::vector<CallSite> calls;
        explicit CallScope(Parser& parser) : p(parser), saved(parser.calls_) { p.calls_ = &calls; }
        ~CallScope() { p.calls_ = saved; }
        CallScope(const CallScope&) = delete;
        CallScope& operator=(const CallScope&) = delete;
    };

    Stmt make(StmtKind kind, int at) {
        Stmt s;
        s.kind = kind;
        s.line = at;
        return s;
    }

    Stmt parse_small_stmt() {
        const int at = line();
        CallScope scope(*this);
        Stmt s = make(StmtKind::Simple, at);
        if (at_kw("import") || at_kw("from")) {
            s.kind = StmtKind::Import;
            s.import = at_kw("import") ? parse_import_name() : parse_import_from();
        } else if (at_kw("pass") || at_kw("break") || at_kw("continue")) {
            ++p_;
        } else if (at_kw("del")) {
            ++p_;
            Expr e = parse_exprlist();
            if (!e.assignable()) syntax_error(at, "cannot delete expression");
        } else if (at_kw("return")) {
            ++p_;
            if (!at_statement_end()) parse_testlist_star_expr();
        } else if (at_kw("raise")) {
            ++p_;
            if (!at_statement_end()) {
                parse_test();
                if (at_kw("from")) {
                    ++p_;
                    parse_test();
                } else if (dialect_ == Dialect::Legacy && at_op(",")) {
                    ++p_;
                    parse_test();
                    if (at_op(",")) {
                        ++p_;
                        parse_test();
                    }
                }
            }
        } else if (at_kw("global") || (dialect_ == Dialect::Modern && at_kw("nonlocal"))) {
            ++p_;
            expect_identifier();
            while (at_op(",")) {
                ++p_;
                expect_identifier();
            }
        } else if (at_kw("assert")) {
            ++p_;
            parse_test();
            if (at_op(",")) {
                ++p_;
                parse_test();
            }
        } else if (at_kw("print")) {
            parse_print_statement();
        } else if (at_kw("exec")) {
            ++p_;
            parse_bitor();
            if (at_kw("in")) {
                ++p_;
                parse_test();
                if (at_op(",")) {
                    ++p_;
                    parse_test();
                }
            }
        } else if (dialect_ == Dialect::Modern && at_soft("type") && at_identifier(1) &&
                   (at_op("=", 2) || at_op("[", 2))) {
            p_ += 2;
            if (at_op("[")) skip_brackets();
            expect_op("=");
            parse_test();
        } else {
            parse_expr_stmt();
        }
        if (!at_statement_end()) fail("invalid syntax");
        s.calls = std::move(scope.calls);
        return s;
    }

    bool at_statement_end() const { return peek().kind == Tok::Newline || at_op(";"); }

    void parse_print_statement() {
        ++p_;
        if (at_statement_end()) return;
        if (at_op(">>")) {
            ++p_;
            parse_test();
            if (!at_op(",")) return;
            ++p_;
        }
        parse_test();
        while (at_op(",")) {
            ++p_;
            if (at_statement_end()) return;
            parse_test();
        }
    }

    void parse_expr_stmt() {
        const int at = line();
        if (at_kw("yield")) {
            parse_yield();
            return;
        }
        Expr lhs = parse_testlist_star_expr();
        static const std::set<std::string> kAug = {"+=", "-=", "*=", "/=", "//=", "%=", "**=",
                                                   ">>=", "<<=", "&=", "|=", "^=", "@="};
        if (at_op(":")) {
            if (!lhs.single_target()) syntax_error(at, "illegal target for annotation");
            ++p_;
            parse_test();
            if (at_op("=")) {
                ++p_;
                if (at_kw("yield")) parse_yield();
                else parse_testlist_star_expr();
            }
            return;
        }
        if (peek().kind == Tok::Op && kAug.contains(peek().text)) {
            if (!lhs.single_target()) syntax_error(at, "illegal expression for augmented assignment");
            ++p_;
            if (at_kw("yield")) parse_yield();
            else parse_testlist_star_expr();
            return;
        }
        Expr target = lhs;
        while (at_op("=")) {
            if (!target.assignable()) syntax_error(at, "cannot assign to expression");
            ++p_;
            target = at_kw("yield") ? parse_yield() : parse_testlist_star_expr();
        }
    }

    ImportStmt parse_import_name() {
        ++p_;
        ImportStmt st;
        do {
            if (!st.names.empty()) ++p_;
            ImportAlias alias;
            alias.name = parse_dotted_name();
            if (at_kw("as")) {
                ++p_;
                alias.asname = expect_identifier();
            }
            st.names.push_back(std::move(alias));
        } while (at_op(","));
        return st;
    }

    std::string parse_dotted_name() {
        std::string name = expect_identifier();
        while (at_op(".")) {
            ++p_;
            name += "." + expect_identifier();
        }
        return name;
    }

    ImportStmt parse_import_from() {
        ++p_;
        ImportStmt st;
        st.is_from = true;
        while (at_op(".") || at_op("...")) {
            st.level += at_op(".") ? 1 : 3;
            ++p_;
        }
        if (!at_kw("import")) st.module = parse_dotted_name();
        else if (st.level == 0) fail("expected module name");
        expect_kw("import");
        if (at_op("*")) {
            ++p_;
            st.names.push_back({"*", std::nullopt});
            return st;
        }
        const bool paren = at_op("(");
        if (paren) ++p_;
        while (true) {
            ImportAlias alias;
            alias.name = expect_identifier();
            if (at_kw("as")) {
                ++p_;
                alias.asname = expect_identifier();
            }
            st.names.push_back(std::move(alias));
            if (!at_op(",")) break;
            ++p_;
            if (paren && at_op(")")) break;
            if (!paren && at_statement_end()) fail("trailing comma not allowed without surrounding parentheses");
        }
        if (paren) expect_op(")");
        return st;
    }

    Stmt parse_if() {
        const int at = line();
        CallScope scope(*this);
        ++p_;  // if / elif
        parse_namedexpr_test();
        expect_op(":");
        Stmt s = make(StmtKind::If, at);
        s.calls = std::move(scope.calls);
        s.body = parse_suite();
        if (at_kw("elif")) {
            s.orelse.push_back(parse_if());
        } else if (at_kw("else")) {
            ++p_;
            expect_op(":");
            s.orelse = parse_suite();
        }
        return s;
    }

    Stmt parse_while() {
        const int at = line();
        CallScope scope(*this);
        ++p_;
        parse_namedexpr_test();
        expect_op(":");
        Stmt s = make(StmtKind::Loop, at);
        s.calls = std::move(scope.calls);
        s.body = parse_suite();
        parse_loop_else(s);
        return s;
    }

    Stmt parse_for() {
        const int at = line();
        CallScope scope(*this);
        ++p_;
        Expr target = parse_exprlist();
        if (!target.assignable()) syntax_error(at, "cannot assign to for-loop target");
        expect_kw("in");
        parse_testlist_star_expr();
        expect_op(":");
        Stmt s = make(StmtKind::Loop, at);
        s.calls = std::move(scope.calls);
        s.body = parse_suite();
        parse_loop_else(s);
        return s;
    }

    void parse_loop_else(Stmt& s) {
        if (at_kw("else")) {
            ++p_;
            expect_op(":");
            s.orelse = parse_suite();
        }
    }

    Stmt parse_try() {
        const int at = line();
        ++p_;
        expect_op(":");
        Stmt s = make(StmtKind::Try, at);
        s.body = parse_suite();
        bool bare_seen = false;
        while (at_kw("except")) {
            const int except_line = line();
            if (bare_seen) syntax_error(except_line, "default 'except:' must be last");
            ++p_;
            CallScope scope(*this);
            if (dialect_ == Dialect::Modern && at_op("*")) ++p_;
            if (at_op(":")) {
                bare_seen = true;
            } else {
                parse_test();
                if (at_kw("as")) {
                    ++p_;
                    expect_identifier();
                } else if (dialect_ == Dialect::Legacy && at_op(",")) {
                    ++p_;
                    if (!parse_test().assignable()) syntax_error(except_line, "invalid except target");
                }
            }
            expect_op(":");
            for (auto& c : scope.calls) s.calls.push_back(std::move(c));
            s.handlers.push_back(parse_suite());
        }
        if (at_kw("else")) {
            if (s.handlers.empty()) fail("expected 'except' or 'finally' block");
            ++p_;
            expect_op(":");
            s.orelse = parse_suite();
        }
        if (at_kw("finally")) {
            ++p_;
            expect_op(":");
            s.finalbody = parse_suite();
        } else if (s.handlers.empty()) {
            fail("expected 'except' or 'finally' block");
        }
        return s;
    }

    Stmt parse_with() {
        const int at = line();
        CallScope scope(*this);
        ++p_;
        bool done = false;
        if (at_op("(")) {
            const std::size_t save = p_;
            const std::size_t saved_calls = scope.calls.size();
            try {
                ++p_;
                parse_with_item();
                while (at_op(",")) {
                    ++p_;
                    if (at_op(")")) break;
                    parse_with_item();
                }
                expect_op(")");
                if (!at_op(":")) throw Backtrack{};
                done = true;
            } catch (const SyntaxIssue&) {
                p_ = save;
                scope.calls.resize(saved_calls);
            } catch (const Backtrack&) {
                p_ = save;
                scope.calls.resize(saved_calls);
            }
        }
        if (!done) {
            parse_with_item();
            while (at_op(",")) {
                ++p_;
                parse_with_item();
            }
        }
        expect_op(":");
        Stmt s = make(StmtKind::With, at);
        s.calls = std::move(scope.calls);
        s.body = parse_suite();
        return s;
    }

    void parse_with_item() {
        const int at = line();
        parse_test();
        if (at_kw("as")) {
            ++p_;
            if (!parse_bitor().assignable()) syntax_error(at, "cannot assign to with-item target");
        }
    }

    Stmt parse_decorated() {
        const int at = line();
        std::vector<CallSite> calls;
        while (at_op("@")) {
            CallScope scope(*this);
            ++p_;
            parse_namedexpr_test();
            expect_newline();
            for (auto& c : scope.calls) calls.push_back(std::move(c));
        }
        if (at_kw("async") && at_kw("def", 1)) ++p_;
        Stmt s;
        if (at_kw("def")) s = parse_def();
        else if (at_kw("class")) s = parse_class();
        else fail("expected function or class after decorator");
        s.line = std::min(s.line, at);
        calls.insert(calls.end(), s.calls.begin(), s.calls.end());
        s.calls = std::move(calls);
        return s;
    }

    Stmt parse_def() {
        const int at = line();
        CallScope scope(*this);
        ++p_;
        expect_identifier();
        if (at_op("[")) skip_brackets();
        expect_op("(");
        parse_params(")", true);
        expect_op(")");
        if (at_op("->")) {
            ++p_;
            parse_test();
        }
        expect_op(":");
        Stmt s = make(StmtKind::FunctionDef, at);
        s.calls = std::move(scope.calls);
        s.body = parse_suite();
        return s;
    }

    Stmt parse_class() {
        const int at = line();
        CallScope scope(*this);
        ++p_;
        expect_identifier();
        if (at_op("[")) skip_brackets();
        if (at_op("(")) {
            ++p_;
            parse_arglist(")");
            expect_op(")");
        }
        expect_op(":");
        Stmt s = make(StmtKind::ClassDef, at);
        s.calls = std::move(scope.calls);
        s.body = parse_suite();
        return s;
    }

    // Parameter list up to (not including) `close`.
    void parse_params(std::string_view close, bool annotations) {
        bool seen_default = false;
        bool seen_star = false;
        bool seen_kwargs = false;
        while (!at_op(close)) {
            if (seen_kwargs) fail("arguments cannot follow var-keyword argument");
            if (at_op("/") && dialect_ == Dialect::Modern) {
                ++p_;
            } else if (at_op("**")) {
                ++p_;
                parse_param_name(annotations);
                seen_kwargs = true;
            } else if (at_op("*")) {
                if (seen_star) fail("* argument may appear only once");
                ++p_;
                seen_star = true;
                if (!at_op(",") && !at_op(close)) parse_param_name(annotations);
            } else {
                if (dialect_ == Dialect::Legacy && at_op("(")) {
                    skip_brackets();
                } else {
                    parse_param_name(annotations);
                }
                if (at_op("=")) {
                    ++p_;
                    parse_test();
                    seen_default = true;
                } else if (seen_default && !seen_star) {
                    fail("non-default argument follows default argument");
                }
            }
            if (!at_op(",")) break;
            ++p_;
        }
    }

    void parse_param_name(bool annotations) {
        expect_identifier();
        if (annotations && at_op(":")) {
            ++p_;
            if (at_op("*")) {
                ++p_;
                parse_bitor();
            } else {
                parse_test();
            }
        }
    }

    void skip_brackets() {
        const std::string open = peek().text;
        const std::string close = open == "(" ? ")" : open == "[" ? "]" : "}";
        int depth = 0;
        do {
            if (peek().kind == Tok::End) fail("unclosed bracket");
            if (peek().kind == Tok::Op && (peek().text == "(" || peek().text == "[" || peek().text == "{")) ++depth;
            if (peek().kind == Tok::Op && (peek().text == ")" || peek().text == "]" || peek().text == "}")) --depth;
            ++p_;
        } while (depth > 0);
    }

    std::optional<Stmt> try_parse_match() {
        const int at = line();
        const std::size_t save = p_;
        std::vector<CallSite> calls;
        try {
            CallScope scope(*this);
            ++p_;
            if (at_op(":") || at_op("=") || at_op(".") || at_statement_end()) throw Backtrack{};
            parse_star_namedexpr_list();
            if (!at_op(":")) throw Backtrack{};
            ++p_;
            if (peek().kind != Tok::Newline || peek(1).kind != Tok::Indent || !at_soft("case", 2)) throw Backtrack{};
            calls = std::move(scope.calls);
        } catch (const Backtrack&) {
            p_ = save;
            return std::nullopt;
        } catch (const SyntaxIssue&) {
            p_ = save;
            return std::nullopt;
        }
        p_ += 2;
        Stmt s = make(StmtKind::Match, at);
        s.calls = std::move(calls);
        while (at_soft("case")) {
            ++p_;
            skip_pattern();
            s.handlers.push_back(parse_suite());
        }
        if (peek().kind != Tok::Dedent) fail("expected 'case' block");
        ++p_;
        return s;
    }

    // Patterns are not interpreted; tokens up to the closing ':' are checked for
    // bracket balance only.
    void skip_pattern() {
        int depth = 0;
        std::size_t count = 0;
        while (true) {
            const Token& tok = peek();
            if (tok.kind == Tok::Newline || tok.kind == Tok::End) fail("expected ':' after case pattern");
            if (tok.kind == Tok::Op) {
                if (tok.text == "(" || tok.text == "[" || tok.text == "{") ++depth;
                if (tok.text == ")" || tok.text == "]" || tok.text == "}") --depth;
                if (tok.text == ":" && depth == 0) break;
            }
            ++p_;
            ++count;
        }
        if (count == 0) fail("expected case pattern");
        ++p_;
    }

    void parse_star_namedexpr_list() {
        if (at_op("*")) {
            ++p_;
            parse_bitor();
        } else {
            parse_namedexpr_test();
        }
        while (at_op(",")) {
            ++p_;
            if (at_op(":")) break;
            if (at_op("*")) {
                ++p_;
                parse_bitor();
            } else {
                parse_namedexpr_test();
            }
        }
    }

    // -- expressions
    Expr parse_yield() {
        ++p_;
        if (at_kw("from")) {
            ++p_;
            parse_test();
        } else if (!at_statement_end() && !at_op(")") && !at_op("=")) {
            parse_testlist_star_expr();
        }
        Expr e;
        e.kind = Expr::Yield;
        return e;
    }

    Expr parse_testlist_star_expr() {
        Expr first = parse_test_or_star();
        if (!at_op(",")) return first;
        Expr tuple;
        tuple.kind = Expr::Tuple;
        tuple.elements_assignable = first.assignable();
        while (at_op(",")) {
            ++p_;
            if (!starts_expression()) break;
            Expr e = parse_test_or_star();
            tuple.elements_assignable = tuple.elements_assignable && e.assignable();
        }
        return tuple;
    }

    Expr parse_exprlist() {
        Expr first = parse_expr_or_star();
        if (!at_op(",")) return first;
        Expr tuple;
        tuple.kind = Expr::Tuple;
        tuple.elements_assignable = first.assignable();
        while (at_op(",")) {
            ++p_;
            if (!starts_expression()) break;
            Expr e = parse_expr_or_star();
            tuple.elements_assignable = tuple.elements_assignable && e.assignable();
        }
        return tuple;
    }

    bool starts_expression() const {
        const Token& tok = peek();
        if (tok.kind == Tok::Number || tok.kind == Tok::String) return true;
        if (tok.kind == Tok::Name) {
            if (!keywords_.contains(tok.text)) return true;
            static const std::set<std::string> kExprKw = {"not", "lambda", "await", "None", "True", "False", "yield"};
            return kExprKw.contains(tok.text);
        }
        if (tok.kind == Tok::Op) {
            static const std::set<std::string> kStart = {"(", "[", "{", "-", "+", "~", "*", "...", "`"};
            return kStart.contains(tok.text);
        }
        return false;
    }

    Expr parse_test_or_star() {
        if (at_op("*")) return parse_star_expr();
        return parse_namedexpr_test();
    }

    Expr parse_expr_or_star() {
        if (at_op("*")) return parse_star_expr();
        return parse_bitor();
    }

    Expr parse_star_expr() {
        ++p_;
        Expr inner = parse_bitor();
        Expr e;
        e.kind = Expr::Starred;
        e.elements_assignable = inner.assignable();
        return e;
    }

    Expr parse_namedexpr_test() {
        const int at = line();
        Expr e = parse_test();
        if (at_op(":=") && dialect_ == Dialect::Modern) {
            if (e.kind != Expr::Name || e.parenthesized) syntax_error(at, "cannot use assignment expressions here");
            ++p_;
            parse_test();
            return Expr{};
        }
        return e;
    }

    Expr parse_test() {
        if (at_kw("lambda")) {
            ++p_;
            parse_params(":", false);
            expect_op(":");
            parse_test();
            return Expr{};
        }
        Expr e = parse_or_test();
        if (at_kw("if")) {
            ++p_;
            parse_or_test();
            expect_kw("else");
            parse_test();
            return Expr{};
        }
        return e;
    }

    Expr parse_or_test() {
        Expr e = parse_and_test();
        while (at_kw("or")) {
            ++p_;
            parse_and_test();
            e = Expr{};
        }
        return e;
    }

    Expr parse_and_test() {
        Expr e = parse_not_test();
        while (at_kw("and")) {
            ++p_;
            parse_not_test();
            e = Expr{};
        }
        return e;
    }

    Expr parse_not_test() {
        if (at_kw("not")) {
            ++p_;
            parse_not_test();
            return Expr{};
        }
        return parse_comparison();
    }

    bool at_comp_op() const {
        if (peek().kind == Tok::Op) {
            static const std::set<std::string> kOps = {"<", ">", "==", ">=", "<=", "!=", "<>"};
            return kOps.contains(peek().text);
        }
        return at_kw("in") || at_kw("is") || (at_kw("not") && at_kw("in", 1));
    }

    Expr parse_comparison() {
        Expr e = parse_bitor();
        while (at_comp_op()) {
            if (at_kw("not")) ++p_;
            ++p_;
            if (at_kw("not")) ++p_;
            parse_bitor();
            e = Expr{};
        }
        return e;
    }

    Expr parse_binary(int level) {
        static const std::array<std::set<std::string>, 6> kLevels = {{
            {"|"}, {"^"}, {"&"}, {"<<", ">>"}, {"+", "-"}, {"*", "/", "//", "%", "@"},
        }};
        if (level == static_cast<int>(kLevels.size())) return parse_factor();
        Expr e = parse_binary(level + 1);
        while (peek().kind == Tok::Op && kLevels[level].contains(peek().text)) {
            ++p_;
            parse_binary(level + 1);
            e = Expr{};
        }
        return e;
    }

    Expr parse_bitor() { return parse_binary(0); }

    Expr parse_factor() {
        if (at_op("+") || at_op("-") || at_op("~")) {
            ++p_;
            parse_factor();
            return Expr{};
        }
        return parse_power();
    }

    Expr parse_power() {
        bool awaited = false;
        if (at_kw("await")) {
            ++p_;
            awaited = true;
        }
        Expr e = parse_primary();
        if (awaited) e = Expr{};
        if (at_op("**")) {
            ++p_;
            parse_factor();
            return Expr{};
        }
        return e;
    }

    Expr parse_primary() {
        Expr e = parse_atom();
        while (true) {
            if (at_op("(")) {
                const int at = line();
                ++p_;
                auto first = parse_arglist(")");
                expect_op(")");
                if (calls_ != nullptr && (e.kind == Expr::Name || e.kind == Expr::Attr) && !e.dotted.empty()) {
                    calls_->push_back(CallSite{e.dotted, first, at});
                }
                e = Expr{};
                e.kind = Expr::Call;
            } else if (at_op("[")) {
                ++p_;
                parse_subscripts();
                expect_op("]");
                e = Expr{};
                e.kind = Expr::Subscript;
            } else if (at_op(".")) {
                ++p_;
                std::string attr = expect_identifier();
                std::string dotted = (e.kind == Expr::Name || e.kind == Expr::Attr) && !e.dotted.empty()
                                         ? e.dotted + "." + attr
                                         : std::string();
                e = Expr{};
                e.kind = Expr::Attr;
                e.dotted = std::move(dotted);
            } else {
                return e;
            }
        }
    }

    void parse_subscripts() {
        while (true) {
            if (at_op("*")) {
                parse_star_expr();
            } else {
                if (!at_op(":")) parse_namedexpr_test();
                if (at_op(":")) {
                    ++p_;
                    if (!at_op(":") && !at_op("]") && !at_op(",")) parse_test();
                    if (at_op(":")) {
                        ++p_;
                        if (!at_op("]") && !at_op(",")) parse_test();
                    }
                }
            }
            if (!at_op(",")) return;
            ++p_;
            if (at_op("]")) return;
        }
    }

    // Returns the first positional argument when it is a plain string literal.
    std::optional<std::string> parse_arglist(std::string_view close) {
        std::optional<std::string> first_literal;
        bool first = true;
        while (!at_op(close)) {
            const int at = line();
            if (at_op("*") || at_op("**")) {
                ++p_;
                parse_test();
            } else {
                Expr e = parse_test();
                if (at_op("=")) {
                    if (e.kind != Expr::Name || e.parenthesized) syntax_error(at, "expression cannot contain assignment");
                    ++p_;
                    parse_test();
                } else if (at_op(":=") && dialect_ == Dialect::Modern) {
                    if (e.kind != Expr::Name) syntax_error(at, "cannot use assignment expressions here");
                    ++p_;
                    parse_test();
                } else if (at_comp_for()) {
                    parse_comp_for();
                } else if (first && e.kind == Expr::Literal && e.str) {
                    first_literal = e.str;
                }
            }
            first = false;
            if (!at_op(",")) break;
            ++p_;
        }
        return first_literal;
    }

    bool at_comp_for() const {
        return at_kw("for") || (dialect_ == Dialect::Modern && at_kw("async") && at_kw("for", 1));
    }

    void parse_comp_for() {
        while (true) {
            if (at_kw("async")) ++p_;
            if (at_kw("for")) {
                const int at = line();
                ++p_;
                if (!parse_exprlist().assignable()) syntax_error(at, "cannot assign to comprehension target");
                expect_kw("in");
                parse_or_test();
            } else if (at_kw("if")) {
                ++p_;
                if (at_kw("lambda")) parse_test();
                else parse_or_test();
            } else {
                return;
            }
        }
    }

    Expr parse_atom() {
        const Token& tok = peek();
        Expr e;
        if (tok.kind == Tok::Number) {
            ++p_;
            e.kind = Expr::Literal;
            return e;
        }
        if (tok.kind == Tok::String) {
            e.kind = Expr::Literal;
            std::string value;
            bool plain = true;
            while (peek().kind == Tok::String) {
                if (peek().str_value) value += *peek().str_value;
                else plain = false;
                ++p_;
            }
            if (plain) e.str = std::move(value);
            return e;
        }
        if (tok.kind == Tok::Name) {
            if (tok.text == "None" || tok.text == "True" || tok.text == "False") {
                ++p_;
                e.kind = dialect_ == Dialect::Legacy && tok.text != "None" ? Expr::Name : Expr::Literal;
                e.dotted = e.kind == Expr::Name ? tok.text : "";
                return e;
            }
            if (keywords_.contains(tok.text)) {
                if (tok.text == "yield") fail("'yield' outside parentheses");
                fail("invalid syntax");
            }
            ++p_;
            e.kind = Expr::Name;
            e.dotted = tok.text;
            return e;
        }
        if (tok.kind != Tok::Op) fail("invalid syntax");
        if (tok.text == "...") {
            ++p_;
            e.kind = Expr::Literal;
            return e;
        }
        if (tok.text == "`" && dialect_ == Dialect::Legacy) {
            ++p_;
            parse_testlist_star_expr();
            expect_op("`");
            return e;
        }
        if (tok.text == "(") {
            ++p_;
            if (at_op(")")) {
                ++p_;
                e.kind = Expr::Tuple;
                e.elements_assignable = true;
                return e;
            }
            if (at_kw("yield")) {
                parse_yield();
                expect_op(")");
                return e;
            }
            e = parse_sequence(")", Expr::Tuple);
            expect_op(")");
            e.parenthesized = true;
            return e;
        }
        if (tok.text == "[") {
            ++p_;
            if (at_op("]")) {
                ++p_;
                e.kind = Expr::List;
                e.elements_assignable = true;
                return e;
            }
            e = parse_sequence("]", Expr::List);
            expect_op("]");
            if (e.kind != Expr::List && e.kind != Expr::Other) {
                // a single bracketed element is a one-item list
                const bool ok = e.assignable();
                e = Expr{};
                e.kind = Expr::List;
                e.elements_assignable = ok;
            }
            return e;
        }
        if (tok.text == "{") {
            ++p_;
            parse_dict_or_set();
            expect_op("}");
            return e;
        }
        fail("invalid syntax");
    }

    // Element list of a parenthesized or bracketed display. A single element
    // without a trailing comma is returned unchanged (parenthesized
    // expression), a comprehension becomes Other.
    Expr parse_sequence(std::string_view close, Expr::Kind kind) {
        Expr first = parse_test_or_star();
        if (at_comp_for()) {
            parse_comp_for();
            return Expr{};
        }
        if (!at_op(",")) {
            if (first.kind == Expr::Starred && kind == Expr::Tuple) fail("cannot use starred expression here");
            return first;
        }
        Expr seq;
        seq.kind = kind;
        seq.elements_assignable = first.assignable();
        while (at_op(",")) {
            ++p_;
            if (at_op(close)) break;
            Expr e = parse_test_or_star();
            seq.elements_assignable = seq.elements_assignable && e.assignable();
        }
        return seq;
    }

    void parse_dict_or_set() {
        if (at_op("}")) return;
        bool is_dict = false;
        auto item = [&](bool first) {
            if (at_op("**")) {
                if (!first && !is_dict) fail("invalid syntax");
                ++p_;
                parse_bitor();
                is_dict = true;
                return;
            }
            if (at_op("*")) {
                if (!first && is_dict) fail("invalid syntax");
                parse_star_expr();
                return;
            }
            parse_namedexpr_test();
            if (first && at_op(":")) is_dict = true;
            if (is_dict) {
                expect_op(":");
                parse_test();
            }
        };
        item(true);
        if (at_comp_for()) {
            parse_comp_for();
            return;
        }
        while (at_op(",")) {
            ++p_;
            if (at_op("}")) break;
            item(false);
        }
    }

    std::vector<Token> t_;
    Dialect dialect_;
    std::size_t p_ = 0;
    std::set<std::string> keywords_;
    std::vector<CallSite>* calls_ = nullptr;
};

}  // namespace

std::string_view to_string(FailureReason reason) {
    return reason == FailureReason::Encoding ? "encoding" : "syntax";
}

ParseResult parse_module(std::string_view source, Dialect dialect) {
    try {
        std::string_view text = check_encoding(source, dialect);
        Tokenizer tokenizer(text, dialect);
        Parser parser(tokenizer.run(), dialect);
        Module m;
        m.dialect = dialect;
        m.body = parser.parse_file();
        return m;
    } catch (const SyntaxIssue& issue) {
        return ParseFailure{issue.reason, issue.line, issue.message};
    }
}

ParseResult parse_source(std::string_view source) {
    ParseResult modern = parse_module(source, Dialect::Modern);
    if (std::holds_alternative<Module>(modern)) return modern;
    if (std::get<ParseFailure>(modern).reason == FailureReason::Encoding) {
        // an undeclared non-utf8 byte is an encoding failure under both grammars
        ParseResult legacy = parse_module(source, Dialect::Legacy);
        if (std::holds_alternative<Module>(legacy)) return legacy;
        return modern;
    }
    ParseResult legacy = parse_module(source, Dialect::Legacy);
    if (std::holds_alternative<Module>(legacy)) return legacy;
    return modern;
}

}  // namespace envcheck::py
