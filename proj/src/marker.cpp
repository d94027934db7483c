#include "envcheck/marker.hpp"

#include <cctype>
#include <vector>

#include "envcheck/error.hpp"
#include "envcheck/specifier.hpp"

namespace envcheck {

namespace {

struct Token {
    enum Kind { Ident, String, Op, LParen, RParen, End } kind;
    std::string text;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        return Error(ErrorCode::InvalidMarker, why + " in '" + std::string(s) + "'");
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            out.push_back({Token::LParen, "("});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, ")"});
            ++i;
        } else if (c == '"' || c == '\'') {
            auto close = s.find(c, i + 1);
            if (close == std::string_view::npos) throw fail("unterminated string");
            out.push_back({Token::String, std::string(s.substr(i + 1, close - i - 1))});
            i = close + 1;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
            std::string word(s.substr(i, j - i));
            if (word == "in") {
                out.push_back({Token::Op, "in"});
            } else if (word == "not") {
                // only "not in" exists in the marker grammar
                std::size_t k = j;
                while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
                if (s.substr(k, 2) != "in") throw fail("stray 'not'");
                out.push_back({Token::Op, "not in"});
                j = k + 2;
            } else {
                out.push_back({Token::Ident, word});
            }
            i = j;
        } else {
            static constexpr std::string_view kOps[] = {"===", "==", "!=", "<=", ">=", "~=", "<", ">"};
            bool matched = false;
            for (auto op : kOps) {
                if (s.substr(i, op.size()) == op) {
                    out.push_back({Token::Op, std::string(op)});
                    i += op.size();
                    matched = true;
                    break;
                }
            }
            if (!matched) throw fail(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

class MarkerEvaluator {
public:
    MarkerEvaluator(std::string_view text, const InterpreterVersion& py)
        : text_(text), tokens_(lex(text)), python_(py.str()) {}

    MarkerOutcome run() {
        MarkerOutcome out;
        out.value = parse_or();
        if (tokens_[pos_].kind != Token::End) throw fail("trailing input");
        out.unsupported_variable = unsupported_;
        return out;
    }

private:
    Error fail(const std::string& why) const {
        return Error(ErrorCode::InvalidMarker, why + " in '" + std::string(text_) + "'");
    }

    bool parse_or() {
        bool v = parse_and();
        while (is_ident("or")) {
            ++pos_;
            bool rhs = parse_and();
            v = v || rhs;
        }
        return v;
    }

    bool parse_and() {
        bool v = parse_atom();
        while (is_ident("and")) {
            ++pos_;
            bool rhs = parse_atom();
            v = v && rhs;
        }
        return v;
    }

    bool parse_atom() {
        if (tokens_[pos_].kind == Token::LParen) {
            ++pos_;
            bool v = parse_or();
            if (tokens_[pos_].kind != Token::RParen) throw fail("missing ')'");
            ++pos_;
            return v;
        }
        Token lhs = value();
        if (tokens_[pos_].kind != Token::Op) throw fail("expected comparison operator");
        std::string op = tokens_[pos_++].text;
        Token rhs = value();
        return compare(lhs, op, rhs);
    }

    Token value() {
        const Token& t = tokens_[pos_];
        if (t.kind != Token::Ident && t.kind != Token::String) throw fail("expected variable or string");
        if (t.kind == Token::Ident && (t.text == "and" || t.text == "or")) throw fail("unexpected '" + t.text + "'");
        ++pos_;
        return t;
    }

    bool is_ident(std::string_view w) const {
        return tokens_[pos_].kind == Token::Ident && tokens_[pos_].text == w;
    }

    bool compare(const Token& lhs, std::string op, const Token& rhs) {
        if (lhs.kind == Token::Ident && rhs.kind == Token::Ident) throw fail("comparison of two variables");
        if (lhs.kind == Token::String && rhs.kind == Token::String) return compare_strings(lhs.text, op, rhs.text);
        bool var_left = lhs.kind == Token::Ident;
        const std::string& var = var_left ? lhs.text : rhs.text;
        const std::string& literal = var_left ? rhs.text : lhs.text;

        if (var == "extra") return false;
        if (var != "python_version") {
            if (!unsupported_) unsupported_ = var;
            return false;
        }
        if (op == "in" || op == "not in") {
            bool found = var_left ? literal.find(python_) != std::string::npos
                                  : python_.find(literal) != std::string::npos;
            return op == "in" ? found : !found;
        }
        if (!var_left) op_flip(op);
        std::string clause = op + literal;
        try {
            auto set = SpecifierSet::parse(clause);
            return set.specifiers().front().contains(Version::parse(python_));
        } catch (const Error&) {
            return compare_strings(python_, op, literal);
        }
    }

    static void op_flip(std::string& op) {
        if (op == "<") op = ">";
        else if (op == ">") op = "<";
        else if (op == "<=") op = ">=";
        else if (op == ">=") op = "<=";
    }

    static bool compare_strings(const std::string& a, const std::string& op, const std::string& b) {
        if (op == "==" || op == "===") return a == b;
        if (op == "!=") return a != b;
        if (op == "in") return b.find(a) != std::string::npos;
        if (op == "not in") return b.find(a) == std::string::npos;
        if (op == "<") return a < b;
        if (op == "<=") return a <= b;
        if (op == ">") return a > b;
        if (op == ">=") return a >= b;
        return false;
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::string python_;
    std::optional<std::string> unsupported_;
};

}  // namespace

MarkerOutcome evaluate_marker(std::string_view marker, const InterpreterVersion& python) {
    return MarkerEvaluator(marker, python).run();
}

}  // namespace envcheck
