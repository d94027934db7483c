#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "envcheck/pysyntax.hpp"

namespace envcheck {

enum class ImportKind { Plain, From };
enum class ImportScope { Module, Function };

struct ImportNode {
    /// Ordinal of the node within its file, in source order.
    int id = 0;
    /// Dotted module; empty for "from . import x".
    std::string module_path;
    ImportKind kind = ImportKind::Plain;
    int relative_level = 0;
    std::string file;
    int line = 0;
    ImportScope scope = ImportScope::Module;
    /// From-import names; empty for plain imports.
    std::vector<std::string> names;

    [[nodiscard]] std::string top_module() const { return module_path.substr(0, module_path.find('.')); }
    /// Executable statement for this module alone, e.g. "from a.b import X".
    [[nodiscard]] std::string statement() const;

    friend bool operator==(const ImportNode&, const ImportNode&) = default;
};

/// One node per imported module path, in source order. "import a, b" yields two.
std::vector<ImportNode> collect_imports(const py::Module& tree, const std::string& file);

enum class ImportClass { Internal, External };
ImportClass classify_import(const ImportNode& n, const std::set<std::string>& local);

std::vector<ImportNode> external_imports(const std::vector<ImportNode>& nodes, const std::set<std::string>& local);

struct ImportExpr {
    enum class Kind { All, Any, Leaf };
    Kind kind = Kind::All;
    std::vector<ImportExpr> children;
    /// Leaf only.
    ImportNode leaf;
    /// Any: line of the branch statement.
    int line = 0;

    static ImportExpr all(std::vector<ImportExpr> children = {});
    static ImportExpr any(std::vector<ImportExpr> children, int line);
    static ImportExpr of(ImportNode n);

    /// Leaves of the root All node (imports outside every branch statement).
    [[nodiscard]] std::vector<ImportNode> block_free() const;
    /// Every leaf, depth first.
    [[nodiscard]] std::vector<ImportNode> leaves() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ImportExpr&, const ImportExpr&) = default;
};

/// Groups the given nodes (a subset of collect_imports(tree)) into the
/// alternating All/Any expression. Branch statements: if (body, else), try
/// (body+else+finally, each handler+finally), match (one branch per case).
/// Loops, with-blocks, defs and classes are transparent. Within an All node
/// leaves come first in source order, deduplicated by module path, then Any
/// nodes ordered by statement line.
ImportExpr build_import_expr(const py::Module& tree, const std::vector<ImportNode>& nodes);

/// Results keyed by ImportNode::id. Throws Error{MissingResult} for a leaf
/// without an entry.
bool evaluate_expr(const ImportExpr& e, const std::map<int, bool>& results);

/// All at even depth, Any at odd depth, leaves only under All.
bool alternates(const ImportExpr& e);

/// Calls to __import__ / importlib.import_module, reported as "file:line: text".
std::vector<std::string> dynamic_import_warnings(const py::Module& tree, const std::string& file);

}  // namespace envcheck
