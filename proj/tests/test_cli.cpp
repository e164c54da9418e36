#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "commands.hpp"

#include "twistrb/corpus.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace twistrb;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::string& command, cli::Options opts)
{
    std::ostringstream out, err;
    const int code = cli::run(command, opts, out, err);
    return {code, out.str(), err.str()};
}

cli::Options on(const std::string& file)
{
    cli::Options o;
    o.files = {std::string(CORPUS_DIR) + "/" + file};
    return o;
}

std::string data(const std::string& file)
{
    return std::string(DATA_DIR) + "/" + file;
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("twistrb_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("every corpus file passes its validating command")
{
    for (const auto& e : corpus()) {
        CAPTURE(e.file);
        const Result r = run(e.command, on(e.file));
        CHECK(r.code == cli::Pass);
        CHECK(r.out.find("verdict: PASS") != std::string::npos);
    }
}

TEST_CASE("corpus index, write and check")
{
    const Result idx = run("corpus", {});
    CHECK(idx.code == cli::Pass);
    for (const auto& e : corpus())
        CHECK(idx.out.find(e.file) != std::string::npos);

    cli::Options check;
    check.check_dir = CORPUS_DIR;
    CHECK(run("corpus", check).code == cli::Pass);

    const fs::path dir = scratch_dir("corpus");
    cli::Options w;
    w.write_dir = dir.string();
    REQUIRE(run("corpus", w).code == cli::Pass);
    check.check_dir = dir.string();
    CHECK(run("corpus", check).code == cli::Pass);
    write(dir / "reynolds_1.json", R"({"algebra": {"dim": 1, "mul": [[1, 1, 1, "1"]]}, "R": [[1, 1, "2"]]})");
    CHECK(run("corpus", check).code == cli::MalformedInput);
    write(dir / "reynolds_1.json", "{\"algebra\": ");
    const Result corrupt = run("corpus", check);
    CHECK(corrupt.code == cli::MalformedInput);
    CHECK(corrupt.out.find("reynolds_1.json: ") != std::string::npos);
    CHECK(corrupt.out.find("invalid JSON") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("zero NS cohomology in dimension 1")
{
    cli::Options o = on("zero_ns_dim1.json");
    o.nmax = 3;
    const Result r = run("cohomology-ns", o);
    CHECK(r.code == cli::Pass);
    CHECK(r.out.find("dims: [1, 3, 4]") != std::string::npos);
    o.json = true;
    const auto doc = nlohmann::json::parse(run("cohomology-ns", o).out);
    CHECK(doc["details"]["dims"] == nlohmann::json::array({1, 3, 4}));
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["digest"] == instance_digest(corpus().at(7).instance));
}

TEST_CASE("exit codes: mathematical failure and malformed input")
{
    const fs::path dir = scratch_dir("exit");
    write(dir / "reynolds_2.json", R"({"algebra": {"dim": 1, "mul": [[1, 1, 1, "1"]]}, "R": [[1, 1, "2"]]})");
    cli::Options o;
    o.files = {(dir / "reynolds_2.json").string()};
    const Result fail = run("reynolds", o);
    CHECK(fail.code == cli::MathFailure);
    CHECK(fail.out.find("verdict: FAIL") != std::string::npos);

    o.files = {data("malformed.json")};
    const Result bad = run("check-trb", o);
    CHECK(bad.code == cli::MalformedInput);
    CHECK(bad.err.find("line") != std::string::npos);

    o.files = {(dir / "missing.json").string()};
    CHECK(run("check-trb", o).code == cli::MalformedInput);

    write(dir / "bad_index.json", R"({"algebra": {"dim": 1, "mul": [[1, 1, 3, "1"]]}, "T": []})");
    o.files = {(dir / "bad_index.json").string()};
    const Result idx = run("check-trb", o);
    CHECK(idx.code == cli::MalformedInput);
    CHECK(idx.err.find("algebra.mul[1]") != std::string::npos);

    CHECK(run("no-such-command", {}).code == cli::MalformedInput);
    fs::remove_all(dir);
}

TEST_CASE("gauge and shift side files")
{
    cli::Options o = on("nijenhuis_example.json");
    o.b_file = data("gauge_nijenhuis.json");
    const Result g = run("gauge", o);
    CHECK(g.code == cli::Pass);
    CHECK(g.out.find("admissible: true") != std::string::npos);
    CHECK(g.out.find(R"([1, 1, "1/2"])") != std::string::npos);
    CHECK(g.out.find(R"([2, 2, "1/3"])") != std::string::npos);

    o.b_file = data("gauge_not_cocycle.json");
    CHECK(run("gauge", o).code == cli::MathFailure);
    o.b_file = data("malformed.json");
    CHECK(run("gauge", o).code == cli::MalformedInput);

    cli::Options s = on("nijenhuis_example.json");
    s.h_file = data("shift_nijenhuis.json");
    const Result sh = run("shift", s);
    CHECK(sh.code == cli::Pass);
    CHECK(sh.out.find("cocycle_H") != std::string::npos);
}

TEST_CASE("Nijenhuis candidates")
{
    cli::Options o = on("nijenhuis_example.json");
    o.candidates_file = data("candidates.json");
    const Result r = run("nijenhuis", o);
    CHECK(r.code == cli::Pass);
    CHECK(r.out.find("tested: 3") != std::string::npos);
    CHECK(r.out.find("count: 3") != std::string::npos);
    const Result grid = run("nijenhuis", on("nijenhuis_example.json"));
    CHECK(grid.out.find("count: 9") != std::string::npos);
}

TEST_CASE("L-infinity audit")
{
    cli::Options o = on("nijenhuis_example.json");
    o.samples = 5;
    CHECK(run("linfty-audit", o).code == cli::Pass);
    o.twisted = true;
    CHECK(run("linfty-audit", o).code == cli::Pass);
    o.twisted = false;
    o.max_degree = 2;
    o.nmax = 4;
    CHECK(run("linfty-audit", o).code == cli::MathFailure);
    o.form = "derived";
    CHECK(run("linfty-audit", o).code == cli::Pass);
    o.twisted = true;
    CHECK(run("linfty-audit", o).code == cli::Pass);
    o.nmax = 6;
    CHECK(run("linfty-audit", o).code == cli::MalformedInput);
}

TEST_CASE("seeded output is reproducible")
{
    cli::Options o = on("inverse_example.json");
    o.json = true;
    o.samples = 4;
    o.seed = 99;
    const Result a = run("linfty-audit", o), b = run("linfty-audit", o);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["seed"] == 99);
}

TEST_CASE("deformation commands")
{
    CHECK(run("deform-rb", on("rb_deformation_order1.json")).code == cli::Pass);
    const Result rigid = run("deform-rb", on("rb_deformation_order2.json"));
    CHECK(rigid.code == cli::Pass);
    CHECK(rigid.out.find("rigidified T'_1 = 0: true") != std::string::npos);
    const Result ob = run("obstruction", on("ns_deformation_order1.json"));
    CHECK(ob.code == cli::Pass);
    CHECK(ob.out.find("class: trivial") != std::string::npos);
    const Result ext = run("extend", on("ns_deformation_order1.json"));
    CHECK(ext.code == cli::Pass);
    CHECK(ext.out.find("\"deformation\"") != std::string::npos);
    CHECK(run("deform-ns", on("ns_deformation_order1.json")).code == cli::Pass);
}
