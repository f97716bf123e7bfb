#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mtl/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = mtl::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MTL_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << contents;
    return path;
}

nlohmann::ordered_json parse(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("help and usage errors", "[cli]") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"symchar", "report", "--n", "4", "--unknown"}).code == 2);
    CHECK(run({"symchar", "report"}).code == 2);
    CHECK(run({"symchar", "report", "--n", "0"}).code == 2);
    CHECK(run({"zeta", "--rs-terms", "3", "moments", "--T", "0", "--H", "10"}).code == 2);
    CHECK(run({"--output", "xml", "symchar", "report", "--n", "3"}).code == 2);
}

TEST_CASE("theorem check", "[cli]") {
    const auto r = run({"theorem", "check", "--input", data("two_point.csv"), "--b", "1.0"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["a"] == 2.0);
    CHECK(j["checks"][0]["holds"] == true);
    CHECK(run({"--assert", "theorem", "check", "--input", data("two_point.csv")}).code == 0);
}

TEST_CASE("theorem check input errors", "[cli]") {
    CHECK(run({"theorem", "check", "--input", data("missing.csv")}).code == 2);
    const auto bad = temp_file("mtl_bad.csv", "value,weight\n1,1\n2,oops\n");
    const auto r = run({"theorem", "check", "--input", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    const auto zero = temp_file("mtl_zero.csv", "value,weight\n0,1\n");
    CHECK(run({"theorem", "check", "--input", zero.string()}).code == 2);
}

TEST_CASE("symchar report and table", "[cli]") {
    const auto r = run({"symchar", "report", "--n", "4"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["sum_degree_squares"] == "24");
    CHECK(j["sum_degrees"] == "10");
    CHECK(j["theorem_bound_holds"] == true);
    const auto t = run({"symchar", "table", "--n", "3"});
    CHECK(t.out == "partition,degree\n3,1\n2-1,2\n1-1-1,1\n");
    CHECK(run({"--assert", "symchar", "report", "--n", "20", "--eps", "0.1"}).code == 0);
}

TEST_CASE("skewdet commands", "[cli]") {
    const auto odd = run({"skewdet", "enum", "--n", "3"});
    REQUIRE(odd.code == 0);
    const auto j = parse(odd);
    CHECK(j["s1"] == 0.0);
    CHECK(j["theorem_bound"].is_null());
    CHECK(j.contains("note"));
    CHECK(run({"skewdet", "enum", "--n", "9"}).code == 2);
    const auto unit = parse(run({"skewdet", "--convention", "unit", "enum", "--n", "4"}));
    CHECK(unit["max_abs_det"] == "16");
    CHECK(run({"--assert", "skewdet", "mc", "--n", "6", "--samples", "2000"}).code == 0);
    CHECK(run({"skewdet", "mc", "--n", "6", "--samples", "10"}).code == 2);
    const auto s = parse(run({"--seed", "3", "skewdet", "search", "--n", "4", "--budget", "200"}));
    CHECK(s["best_abs_det"] == "9");
}

TEST_CASE("zeta commands", "[cli]") {
    const auto m = run({"zeta", "moments", "--T", "0", "--H", "50", "--k", "2"});
    REQUIRE(m.code == 0);
    CHECK(parse(m).contains("ingham_main"));
    CHECK(run({"zeta", "moments", "--T", "0", "--H", "0"}).code == 2);
    const auto t = run({"--assert", "zeta", "tail", "--T", "200", "--H", "100"});
    CHECK(t.code == 0);
    CHECK(parse(t)["holds"] == true);
}

TEST_CASE("output formats", "[cli]") {
    const auto csv = run({"--output", "csv", "symchar", "report", "--n", "3"});
    CHECK(csv.out.rfind("key,value\n", 0) == 0);
    CHECK(csv.out.find("sum_degree_squares,6\n") != std::string::npos);
    const auto human = run({"--output", "human", "symchar", "report", "--n", "3"});
    CHECK(human.out.find("sum_degree_squares: 6\n") != std::string::npos);
    const auto path = std::filesystem::temp_directory_path() / "mtl_report.json";
    std::filesystem::remove(path);
    CHECK(run({"--out", path.string(), "symchar", "report", "--n", "3"}).code == 0);
    CHECK(std::filesystem::file_size(path) > 0);
}

TEST_CASE("seeded commands are byte-identical across runs and worker counts", "[cli][determinism]") {
    const std::vector<std::vector<std::string>> commands{
        {"skewdet", "mc", "--n", "8", "--samples", "9000"},
        {"skewdet", "search", "--n", "10", "--budget", "300"},
        {"zeta", "tail", "--T", "300", "--H", "60"},
        {"symchar", "report", "--n", "30"},
    };
    for (const auto& cmd : commands) {
        std::vector<std::string> base{"--seed", "11", "--threads", "1"};
        base.insert(base.end(), cmd.begin(), cmd.end());
        const auto first = run(base);
        REQUIRE(first.code == 0);
        CHECK(run(base).out == first.out);
        base[3] = "3";
        CHECK(run(base).out == first.out);
    }
}
