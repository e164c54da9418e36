#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistrb/corpus.hpp"
#include "twistrb/errors.hpp"

#include <map>

using namespace twistrb;

namespace {

std::string corpus_path(const std::string& file)
{
    return std::string(CORPUS_DIR) + "/" + file;
}

// The field named by the ParseError thrown for `text`.
std::string error_field(const std::string& text)
{
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.where();
    }
    return "<no error>";
}

const char* const kReynolds = R"({"algebra": {"dim": 1, "mul": [[1, 1, 1, "1"]]}, "R": [[1, 1, "1"]]})";

} // namespace

TEST_CASE("FNV-1a reference values")
{
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("shipped corpus files are the canonical serializations")
{
    for (const auto& e : corpus()) {
        CAPTURE(e.file);
        const std::string text = read_text(corpus_path(e.file));
        CHECK(serialize_instance(e.instance) == text);
        CHECK(load_instance(corpus_path(e.file)) == e.instance);
        CHECK(parse_instance(text) == e.instance);
        CHECK(serialize_instance(parse_instance(text)) == text);
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
        CHECK(instance_digest(e.instance) == hex);
    }
}

TEST_CASE("digests are stable")
{
    const std::map<std::string, std::string> pinned{
        {"zero_operator.json", "dd69dce05c5c04f4"},         {"nijenhuis_example.json", "d5a8378beb6ecc88"},
        {"multiplication_map.json", "d104246062e61628"},    {"inverse_example.json", "3363760b108fc894"},
        {"rb_deformation_order1.json", "d43e1fe98f13edb8"}, {"rb_deformation_order2.json", "bf6c340ff2f4a9f5"},
        {"ns_deformation_order1.json", "94a62c06d52f30c9"},
    };
    for (const auto& e : corpus()) {
        auto it = pinned.find(e.file);
        if (it != pinned.end())
            CHECK(instance_digest(e.instance) == it->second);
    }
}

TEST_CASE("key order and whitespace do not change the parsed instance")
{
    const Instance a = parse_instance(kReynolds);
    const Instance b = parse_instance(R"({ "R": [[1,1,"2/2"]],
        "algebra": {"mul": [[1,1,1,"1"]], "dim": 1} })");
    CHECK(a == b);
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(a.op_kind == OperatorKind::R);
    CHECK(is_twisted_rb(instance_context(a)));
}

TEST_CASE("defaults: adjoint bimodule and zero cocycle")
{
    const Instance inst = parse_instance(R"({"algebra": {"dim": 2, "mul": [[1,1,1,"1"],[1,2,2,"1"]]}, "T": []})");
    const TrbContext ctx = instance_context(inst);
    CHECK(ctx.module == adjoint_bimodule(ctx.algebra));
    CHECK(ctx.twist.is_zero());
    CHECK(ctx.op.is_zero());
}

TEST_CASE("parse errors name the offending field")
{
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": []}, "T": [], "bogus": 1})") == "bogus");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": [[1, 1, 1, "x"]]}, "T": []})") == "algebra.mul[1]");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": [[1, 1, 1, 1]]}, "T": []})") == "algebra.mul[1]");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": [[1, 2, 1, "1"]]}, "T": []})") == "algebra.mul[1]");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": [[1, 1, 1, "1"], [1, 1, 1, "2"]]}, "T": []})") ==
          "algebra.mul[2]");
    CHECK(error_field(R"({"algebra": {"mul": []}, "T": []})") == "algebra.dim");
    CHECK(error_field(R"({"algebra": {"dim": 0, "mul": []}, "T": []})") == "algebra.dim");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": []}, "T": [[1, 1, "1/0"]]})") == "T[1]");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": []}, "T": [], "R": []})") == "R");
    CHECK(error_field(R"({"field": "R", "algebra": {"dim": 1, "mul": []}})") == "field");
    CHECK(error_field(R"({"T": []})") == "T");
    CHECK(error_field(R"({"dim": 1, "prec": [], "succ": [], "vee": [], "ns": {}})") == "ns");
    CHECK(error_field(R"({"algebra": {"dim": 1, "mul": []}, "bimodule": {"dim": 1, "left": [], "right": []},
                          "N": []})") == "N");
    CHECK(error_field("{\"algebra\": {\"dim\": 1,\n  \"mul\": [}") == "line 2, column 11");
    CHECK(error_field("[1, 2]") == "(top level)");
}

TEST_CASE("load_instance prefixes the path")
{
    try {
        load_instance("/nonexistent/x.json");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.where().find("/nonexistent/x.json") != std::string::npos);
    }
}

TEST_CASE("side files")
{
    const Cochain b = parse_map_file(R"({"B": [[1, 1, "1"], [2, 2, "2"]]})", "B", 2, 2);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 1) == 2);
    CHECK_THROWS_AS(parse_map_file(R"({"B": [[3, 1, "1"]]})", "B", 2, 2), ParseError);
    CHECK_THROWS_AS(parse_map_file(R"({"h": []})", "B", 2, 2), ParseError);
    const auto c = parse_candidates_file(R"({"candidates": [["1", "-1/2"], ["0", "0"]]})", 2);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Vector{1, Rational(-1, 2)});
    CHECK_THROWS_AS(parse_candidates_file(R"({"candidates": [["1"]]})", 2), ParseError);
}

TEST_CASE("instances with side data round-trip")
{
    Instance inst = corpus().at(1).instance;
    Cochain b(1, 2, 2);
    b.at(0, 0) = 1;
    b.at(1, 1) = 2;
    inst.gauge = b;
    inst.candidates = std::vector<Vector>{{1, 0}, {Rational(-1, 3), 2}};
    CHECK(parse_instance(serialize_instance(inst)) == inst);
}
