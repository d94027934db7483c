#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace envcheck::py {

/// Modern is the 3.x grammar; Legacy additionally accepts the 2.x statement
/// forms (print/exec statements, "except E, e", "raise E, v", backticks,
/// "<>", long and old-octal literals) and treats async/await as names.
enum class Dialect { Modern, Legacy };

struct ImportAlias {
    std::string name;
    std::optional<std::string> asname;
};

struct ImportStmt {
    bool is_from = false;
    /// Leading dots of a from-import.
    int level = 0;
    /// Dotted module after "from"; empty for "from . import x".
    std::string module;
    /// Plain import: one alias per module. From-import: imported names ("*" allowed).
    std::vector<ImportAlias> names;
};

/// A call whose callee is a dotted name, e.g. open("README.md").
struct CallSite {
    std::string callee;
    /// First positional argument when it is a plain string literal.
    std::optional<std::string> first_literal;
    int line = 0;
};

enum class StmtKind { Simple, Import, If, Try, Match, Loop, With, FunctionDef, ClassDef };

/// Statement skeleton. Only the structure that import analysis needs is kept:
/// imports, branch statements with their suites, and container bodies.
struct Stmt {
    StmtKind kind = StmtKind::Simple;
    int line = 0;
    std::optional<ImportStmt> import;
    std::vector<CallSite> calls;
    /// If: true branch. Try: try body. Loop/With/FunctionDef/ClassDef: body.
    std::vector<Stmt> body;
    /// If: else branch (an elif is a single nested If). Try/Loop: else clause.
    std::vector<Stmt> orelse;
    /// Try: except clause bodies. Match: case bodies.
    std::vector<std::vector<Stmt>> handlers;
    /// Try: finally body.
    std::vector<Stmt> finalbody;
};

struct Module {
    std::vector<Stmt> body;
    Dialect dialect = Dialect::Modern;
};

enum class FailureReason { Syntax, Encoding };

struct ParseFailure {
    FailureReason reason = FailureReason::Syntax;
    int line = 0;
    std::string message;
};

using ParseResult = std::variant<Module, ParseFailure>;

/// Parses source bytes with one grammar. Checks the coding declaration and
/// rejects undecodable bytes with FailureReason::Encoding.
ParseResult parse_module(std::string_view source, Dialect dialect);

/// Modern grammar first, then the legacy grammar when the modern pass fails
/// with a syntax error. On double failure the modern-pass failure is returned.
ParseResult parse_source(std::string_view source);

[[nodiscard]] std::string_view to_string(FailureReason reason);

}  // namespace envcheck::py
