#include "envcheck/imports.hpp"

#include <algorithm>

#include "envcheck/error.hpp"

namespace envcheck {

namespace {

using py::Stmt;
using py::StmtKind;

struct PathStep {
    const Stmt* stmt;
    int region;
};

// Region numbering per branch statement kind.
//   If: 0 body, 1 else.  Try: 0 body, 1 else, 2 finally, 3+k handler k.
//   Match: k = case k.
constexpr int kTryElse = 1, kTryFinally = 2, kTryHandler0 = 3;

struct Located {
    ImportNode node;
    std::vector<PathStep> path;
};

class Collector {
public:
    explicit Collector(const std::string& file) : file_(file) {}

    void visit(const std::vector<Stmt>& body, std::vector<PathStep>& path, ImportScope scope) {
        for (const auto& s : body) visit(s, path, scope);
    }

    std::vector<Located> out;

private:
    void add(ImportNode n, const std::vector<PathStep>& path) {
        n.id = static_cast<int>(out.size());
        out.push_back({std::move(n), path});
    }

    void branch(const std::vector<Stmt>& body, std::vector<PathStep>& path, const Stmt& s, int region,
                ImportScope scope) {
        path.push_back({&s, region});
        visit(body, path, scope);
        path.pop_back();
    }

    void visit(const Stmt& s, std::vector<PathStep>& path, ImportScope scope) {
        switch (s.kind) {
            case StmtKind::Import: {
                const auto& imp = *s.import;
                if (imp.is_from) {
                    ImportNode n;
                    n.module_path = imp.module;
                    n.kind = ImportKind::From;
                    n.relative_level = imp.level;
                    n.file = file_;
                    n.line = s.line;
                    n.scope = scope;
                    for (const auto& a : imp.names) n.names.push_back(a.name);
                    add(std::move(n), path);
                } else {
                    for (const auto& a : imp.names) {
                        ImportNode n;
                        n.module_path = a.name;
                        n.file = file_;
                        n.line = s.line;
                        n.scope = scope;
                        add(std::move(n), path);
                    }
                }
                break;
            }
            case StmtKind::If:
                branch(s.body, path, s, 0, scope);
                branch(s.orelse, path, s, 1, scope);
                break;
            case StmtKind::Try:
                branch(s.body, path, s, 0, scope);
                for (std::size_t k = 0; k < s.handlers.size(); ++k) {
                    branch(s.handlers[k], path, s, kTryHandler0 + static_cast<int>(k), scope);
                }
                branch(s.orelse, path, s, kTryElse, scope);
                branch(s.finalbody, path, s, kTryFinally, scope);
                break;
            case StmtKind::Match:
                for (std::size_t k = 0; k < s.handlers.size(); ++k) {
                    branch(s.handlers[k], path, s, static_cast<int>(k), scope);
                }
                break;
            case StmtKind::FunctionDef:
                visit(s.body, path, ImportScope::Function);
                break;
            case StmtKind::Loop:
            case StmtKind::With:
            case StmtKind::ClassDef:
                visit(s.body, path, scope);
                visit(s.orelse, path, scope);
                break;
            case StmtKind::Simple:
                break;
        }
    }

    const std::string& file_;
};

std::vector<Located> locate(const py::Module& tree, const std::string& file) {
    Collector c(file);
    std::vector<PathStep> path;
    c.visit(tree.body, path, ImportScope::Module);
    return std::move(c.out);
}

// divideBlock: the region sets making up each branch of a branch statement.
std::vector<std::vector<int>> divide_block(const Stmt& s) {
    std::vector<std::vector<int>> out;
    switch (s.kind) {
        case StmtKind::If:
            out = {{0}, {1}};
            break;
        case StmtKind::Try:
            out.push_back({0, kTryElse, kTryFinally});
            for (std::size_t k = 0; k < s.handlers.size(); ++k) {
                out.push_back({kTryHandler0 + static_cast<int>(k), kTryFinally});
            }
            break;
        case StmtKind::Match:
            for (std::size_t k = 0; k < s.handlers.size(); ++k) out.push_back({static_cast<int>(k)});
            break;
        default:
            break;
    }
    return out;
}

ImportExpr get_import_blocks(const Stmt& b, std::size_t depth, const std::vector<const Located*>& nodes);

// Leaves (deduplicated by module path) then one Any per outermost branch
// statement below `depth`, ordered by line.
ImportExpr make_block(std::size_t depth, const std::vector<const Located*>& nodes) {
    std::vector<ImportExpr> leaves;
    std::set<std::string> seen;
    std::vector<const Stmt*> branch_stmts;
    for (const Located* n : nodes) {
        if (n->path.size() > depth) {
            const Stmt* b = n->path[depth].stmt;
            if (std::find(branch_stmts.begin(), branch_stmts.end(), b) == branch_stmts.end()) branch_stmts.push_back(b);
        } else if (seen.insert(n->node.module_path).second) {
            leaves.push_back(ImportExpr::of(n->node));
        }
    }
    std::stable_sort(branch_stmts.begin(), branch_stmts.end(),
                     [](const Stmt* a, const Stmt* b) { return a->line < b->line; });
    for (const Stmt* b : branch_stmts) {
        std::vector<const Located*> inside;
        for (const Located* n : nodes) {
            if (n->path.size() > depth && n->path[depth].stmt == b) inside.push_back(n);
        }
        leaves.push_back(get_import_blocks(*b, depth, inside));
    }
    return ImportExpr::all(std::move(leaves));
}

ImportExpr get_import_blocks(const Stmt& b, std::size_t depth, const std::vector<const Located*>& nodes) {
    std::vector<ImportExpr> branches;
    for (const auto& regions : divide_block(b)) {
        std::vector<const Located*> sub;
        for (const Located* n : nodes) {
            if (std::find(regions.begin(), regions.end(), n->path[depth].region) != regions.end()) sub.push_back(n);
        }
        branches.push_back(make_block(depth + 1, sub));
    }
    return ImportExpr::any(std::move(branches), b.line);
}

void collect_leaves(const ImportExpr& e, std::vector<ImportNode>& out) {
    if (e.kind == ImportExpr::Kind::Leaf) {
        out.push_back(e.leaf);
        return;
    }
    for (const auto& c : e.children) collect_leaves(c, out);
}

bool alternates_at(const ImportExpr& e, bool expect_all) {
    using K = ImportExpr::Kind;
    if (e.kind == K::Leaf) return false;
    if ((e.kind == K::All) != expect_all) return false;
    for (const auto& c : e.children) {
        if (c.kind == K::Leaf) {
            if (!expect_all) return false;
            continue;
        }
        if (!alternates_at(c, !expect_all)) return false;
    }
    return true;
}

void walk_calls(const std::vector<Stmt>& body, const std::string& file, std::vector<std::string>& out) {
    for (const auto& s : body) {
        for (const auto& c : s.calls) {
            if (c.callee == "__import__" || c.callee == "importlib.import_module" || c.callee == "import_module") {
                std::string text = c.callee + "(" + (c.first_literal ? "'" + *c.first_literal + "'" : "...") + ")";
                out.push_back(file + ":" + std::to_string(c.line) + ": dynamic import " + text + " not analyzed");
            }
        }
        walk_calls(s.body, file, out);
        walk_calls(s.orelse, file, out);
        for (const auto& h : s.handlers) walk_calls(h, file, out);
        walk_calls(s.finalbody, file, out);
    }
}

}  // namespace

std::string ImportNode::statement() const {
    if (kind == ImportKind::Plain) return "import " + module_path;
    std::string out = "from " + std::string(static_cast<std::size_t>(relative_level), '.') + module_path + " import ";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out;
}

std::vector<ImportNode> collect_imports(const py::Module& tree, const std::string& file) {
    std::vector<ImportNode> out;
    for (auto& l : locate(tree, file)) out.push_back(std::move(l.node));
    return out;
}

ImportClass classify_import(const ImportNode& n, const std::set<std::string>& local) {
    if (n.relative_level > 0 || local.contains(n.top_module())) return ImportClass::Internal;
    return ImportClass::External;
}

std::vector<ImportNode> external_imports(const std::vector<ImportNode>& nodes, const std::set<std::string>& local) {
    std::vector<ImportNode> out;
    for (const auto& n : nodes) {
        if (classify_import(n, local) == ImportClass::External) out.push_back(n);
    }
    return out;
}

ImportExpr ImportExpr::all(std::vector<ImportExpr> children) {
    ImportExpr e;
    e.kind = Kind::All;
    e.children = std::move(children);
    return e;
}

ImportExpr ImportExpr::any(std::vector<ImportExpr> children, int line) {
    ImportExpr e;
    e.kind = Kind::Any;
    e.children = std::move(children);
    e.line = line;
    return e;
}

ImportExpr ImportExpr::of(ImportNode n) {
    ImportExpr e;
    e.kind = Kind::Leaf;
    e.leaf = std::move(n);
    return e;
}

std::vector<ImportNode> ImportExpr::block_free() const {
    std::vector<ImportNode> out;
    for (const auto& c : children) {
        if (c.kind == Kind::Leaf) out.push_back(c.leaf);
    }
    return out;
}

std::vector<ImportNode> ImportExpr::leaves() const {
    std::vector<ImportNode> out;
    collect_leaves(*this, out);
    return out;
}

std::string ImportExpr::str() const {
    if (kind == Kind::Leaf) return leaf.module_path;
    std::string out = kind == Kind::All ? "All(" : "Any(";
    for (std::size_t i = 0; i < children.size(); ++i) out += (i ? ", " : "") + children[i].str();
    return out + ")";
}

ImportExpr build_import_expr(const py::Module& tree, const std::vector<ImportNode>& nodes) {
    std::set<int> wanted;
    for (const auto& n : nodes) wanted.insert(n.id);
    std::string file = nodes.empty() ? std::string() : nodes.front().file;
    std::vector<Located> located = locate(tree, file);
    std::vector<const Located*> selected;
    for (const auto& l : located) {
        if (wanted.contains(l.node.id)) selected.push_back(&l);
    }
    // keep the caller's node values (file, names) on the leaves
    std::map<int, const ImportNode*> by_id;
    for (const auto& n : nodes) by_id[n.id] = &n;
    std::vector<Located> patched;
    patched.reserve(selected.size());
    for (const Located* l : selected) patched.push_back({*by_id[l->node.id], l->path});
    std::vector<const Located*> ptrs;
    for (const auto& l : patched) ptrs.push_back(&l);
    return make_block(0, ptrs);
}

bool evaluate_expr(const ImportExpr& e, const std::map<int, bool>& results) {
    switch (e.kind) {
        case ImportExpr::Kind::Leaf: {
            auto it = results.find(e.leaf.id);
            if (it == results.end()) {
                throw Error(ErrorCode::MissingResult, "no result for import '" + e.leaf.module_path + "' at line " +
                                                          std::to_string(e.leaf.line));
            }
            return it->second;
        }
        case ImportExpr::Kind::All: {
            bool value = true;
            // evaluate every child so a missing result is always reported
            for (const auto& c : e.children) value = evaluate_expr(c, results) && value;
            return value;
        }
        case ImportExpr::Kind::Any: {
            if (e.children.empty()) return true;
            bool value = false;
            for (const auto& c : e.children) value = evaluate_expr(c, results) || value;
            return value;
        }
    }
    return false;
}

bool alternates(const ImportExpr& e) { return e.kind == ImportExpr::Kind::All && alternates_at(e, true); }

std::vector<std::string> dynamic_import_warnings(const py::Module& tree, const std::string& file) {
    std::vector<std::string> out;
    walk_calls(tree.body, file, out);
    return out;
}

}  // namespace envcheck
