#include <doctest.h>

#include <chrono>
#include <functional>
#include <random>

#include "envcheck/error.hpp"
#include "envcheck/imports.hpp"
#include "import_oracle.hpp"
#include "test_support.hpp"

using namespace envcheck;

namespace {

py::Module parse(const std::string& src) {
    auto r = py::parse_source(src);
    REQUIRE(std::holds_alternative<py::Module>(r));
    return std::get<py::Module>(r);
}

ImportExpr expr_of(const std::string& src, const std::set<std::string>& local = {}) {
    auto tree = parse(src);
    return build_import_expr(tree, external_imports(collect_imports(tree, "f.py"), local));
}

}  // namespace

TEST_CASE("collect_imports") {
    auto nodes = collect_imports(parse("import celery\n"), "a.py");
    REQUIRE(nodes.size() == 1);
    CHECK(nodes[0].module_path == "celery");
    CHECK(nodes[0].kind == ImportKind::Plain);
    CHECK(nodes[0].statement() == "import celery");

    nodes = collect_imports(parse("from gym.wrappers import Monitor\n"), "a.py");
    REQUIRE(nodes.size() == 1);
    CHECK(nodes[0].module_path == "gym.wrappers");
    CHECK(nodes[0].names == std::vector<std::string>{"Monitor"});
    CHECK(nodes[0].statement() == "from gym.wrappers import Monitor");
    CHECK(nodes[0].top_module() == "gym");

    CHECK(collect_imports(parse(""), "a.py").empty());

    nodes = collect_imports(parse("import a, b.c as d\ndef f():\n    from ..x import y\n"), "a.py");
    REQUIRE(nodes.size() == 3);
    CHECK(nodes[1].module_path == "b.c");
    CHECK(nodes[1].id == 1);
    CHECK(nodes[2].scope == ImportScope::Function);
    CHECK(nodes[2].relative_level == 2);
    CHECK(nodes[2].statement() == "from ..x import y");
}

TEST_CASE("classify_import") {
    const std::set<std::string> local = {"util"};
    auto classify = [&](const std::string& src) {
        return classify_import(collect_imports(parse(src), "a.py").at(0), local);
    };
    CHECK(classify("from . import x\n") == ImportClass::Internal);
    CHECK(classify("import util\n") == ImportClass::Internal);
    CHECK(classify("from util.sub import f\n") == ImportClass::Internal);
    CHECK(classify("import numpy\n") == ImportClass::External);
    CHECK(classify("import utility\n") == ImportClass::External);
}

TEST_CASE("build_import_expr shapes") {
    CHECK(expr_of("import a\nimport b\n").str() == "All(a, b)");
    CHECK(expr_of("x = 1\n").str() == "All()");

    const std::string fig =
        "if sys.version_info >= (3,):\n"
        "    import p1\n"
        "    import p2\n"
        "    try:\n"
        "        import t\n"
        "    except ImportError:\n"
        "        import e\n"
        "else:\n"
        "    import f\n";
    CHECK(expr_of(fig).str() == "All(Any(All(p1, p2, Any(All(t), All(e))), All(f)))");

    // missing else is an empty branch; elif nests
    CHECK(expr_of("if a:\n    import x\nelif b:\n    import y\n").str() == "All(Any(All(x), All(Any(All(y), All()))))");
    // try branches: body+else+finally, handler+finally
    CHECK(expr_of("try:\n    import a\nexcept E:\n    import b\nelse:\n    import c\nfinally:\n    import d\n").str() ==
          "All(Any(All(a, c, d), All(b, d)))");
    // loops and with-blocks are transparent; leaves precede branch nodes
    CHECK(expr_of("if x:\n    import a\nfor i in y:\n    import b\nwith c:\n    import d\n").str() ==
          "All(b, d, Any(All(a), All()))");
    // branch statements without external imports are omitted
    CHECK(expr_of("import os\nif x:\n    from . import a\n    import util\n", {"util"}).str() == "All(os)");
    // duplicates within one block collapse
    CHECK(expr_of("import a\nimport a\nif x:\n    import a\n").str() == "All(a, Any(All(a), All()))");
    // match: one branch per case
    CHECK(expr_of("match v:\n    case 1:\n        import a\n    case _:\n        import b\n").str() ==
          "All(Any(All(a), All(b)))");
}

TEST_CASE("block_free leaves") {
    auto e = expr_of("import celery\ntry:\n    import ujson as json\nexcept ImportError:\n    import json\n");
    auto bf = e.block_free();
    REQUIRE(bf.size() == 1);
    CHECK(bf[0].module_path == "celery");
    CHECK(e.leaves().size() == 3);
}

TEST_CASE("evaluate_expr") {
    ImportNode a, b;
    a.id = 0;
    b.id = 1;
    const auto t_t = ImportExpr::all({ImportExpr::of(a), ImportExpr::of(b)});
    CHECK(evaluate_expr(t_t, {{0, true}, {1, true}}));
    const auto nested = ImportExpr::all({ImportExpr::of(a), ImportExpr::any({ImportExpr::all({ImportExpr::of(b)}),
                                                                             ImportExpr::all({ImportExpr::of(a)})},
                                                                            1)});
    CHECK(evaluate_expr(nested, {{0, true}, {1, false}}));
    CHECK_FALSE(evaluate_expr(nested, {{0, false}, {1, true}}));
    CHECK(evaluate_expr(ImportExpr::all(), {}));
    CHECK(evaluate_expr(ImportExpr::any({}, 1), {}));
    try {
        evaluate_expr(t_t, {{0, true}});
        FAIL("expected MissingResult");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingResult);
    }
}

namespace {

ImportExpr random_expr(std::mt19937& rng, int depth, bool all, int& next_id) {
    std::uniform_int_distribution<int> width(0, 3);
    std::vector<ImportExpr> kids;
    const int n = width(rng);
    for (int i = 0; i < n; ++i) {
        if (all && (depth >= 4 || rng() % 2 == 0)) {
            ImportNode leaf;
            leaf.id = next_id++;
            kids.push_back(ImportExpr::of(leaf));
        } else if (depth < 4) {
            kids.push_back(random_expr(rng, depth + 1, !all, next_id));
        }
    }
    if (!all && kids.empty()) kids.push_back(ImportExpr::all());
    return all ? ImportExpr::all(std::move(kids)) : ImportExpr::any(std::move(kids), depth);
}

bool naive(const ImportExpr& e, const std::map<int, bool>& r) {
    if (e.kind == ImportExpr::Kind::Leaf) return r.at(e.leaf.id);
    if (e.children.empty()) return true;
    bool acc = e.kind == ImportExpr::Kind::All;
    for (const auto& c : e.children) acc = e.kind == ImportExpr::Kind::All ? (acc && naive(c, r)) : (acc || naive(c, r));
    return acc;
}

}  // namespace

TEST_CASE("evaluate_expr matches a naive evaluator and is monotone") {
    std::mt19937 rng(7);
    for (int round = 0; round < 500; ++round) {
        int ids = 0;
        const auto e = random_expr(rng, 0, true, ids);
        CHECK(alternates(e));
        std::map<int, bool> r;
        for (int i = 0; i < ids; ++i) r[i] = rng() % 3 != 0;
        const bool value = evaluate_expr(e, r);
        CHECK(value == naive(e, r));
        for (int i = 0; i < ids; ++i) {
            if (r[i]) continue;
            auto flipped = r;
            flipped[i] = true;
            if (value) CHECK(evaluate_expr(e, flipped));
        }
    }
}

TEST_CASE("build_import_expr agrees with the frozen walker output") {
    const auto start = std::chrono::steady_clock::now();
    const auto result = testing::run_import_oracle(testing::fixture("import_blocks"));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(result.files >= 200);
    CHECK(result.mismatches.empty());
    if (!result.mismatches.empty()) MESSAGE(result.mismatches.front());
    CHECK(result.matched == result.files);
    CHECK(secs < 10.0);
}

TEST_CASE("dynamic imports are reported") {
    auto w = dynamic_import_warnings(parse("m = importlib.import_module('plugins.x')\n__import__(name)\n"), "a.py");
    REQUIRE(w.size() == 2);
    CHECK(w[0] == "a.py:1: dynamic import importlib.import_module('plugins.x') not analyzed");
}
