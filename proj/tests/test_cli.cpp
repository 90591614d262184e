#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtkit/cli.hpp"

#include <json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gtkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
    CHECK(run({"invariants", "count", "--n", "3"}).out == "7\n");
    CHECK(run({"pattern", "conjugate", "1,0,0;1,0;1"}).out == "1,1,0;1,0;0\n");
    CHECK(run({"su2", "threej", "--j", "0", "0", "0", "--m", "0", "0", "0"}).out == "+1\n");
    CHECK(run({"su2", "threej", "--j", "1/2", "1/2", "1", "--m", "1/2", "1/2", "-1"}).out == "-1/3*sqrt(3)\n");
    CHECK(run({"bfr", "phi", "100"}).out == "y(2,1)*y(3,1)\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"invariants", "count"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    Result bad = run({"pattern", "conjugate", "2,1,1;2,1;1"});
    CHECK(bad.code == 1);
    CHECK(!bad.err.empty());
    CHECK(run({"su3", "isoscalar", "--rep1", "1", "0", "--rep2", "1", "0", "--rep3", "1", "0", "--state", "1/2", "1",
               "1/2", "1", "1/2", "1"})
              .code == 1);
    CHECK(run({"su3", "isoscalar", "--rep1", "1", "0", "--rep2", "1", "0", "--rep3", "2", "0", "--state", "1/2"}).code ==
          2);
}

TEST_CASE("json output parses and carries exact fields") {
    Result r = run({"su2", "threej", "--j", "1/2", "1/2", "1", "--m", "1/2", "-1/2", "0", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["sign"] == 1);
    CHECK(j["value"]["num"] == 1);
    CHECK(j["value"]["den"] == 6);
    CHECK(j["value"]["rad_num"] == 6);
    CHECK(j["value"]["rad_den"] == 1);
    CHECK(j["decimal"] == "0.408248290463863");

    Result t = run({"su3", "table", "--rep1", "1", "0", "--rep2", "1", "1", "--format", "json"});
    REQUIRE(t.code == 0);
    auto rows = nlohmann::json::parse(t.out);
    REQUIRE(rows.is_array());
    CHECK(rows.size() > 5);
    for (const auto& row : rows) {
        CHECK(row.contains("query"));
        CHECK(row["value"]["den"].get<long>() > 0);
    }
}

TEST_CASE("output is deterministic across runs and worker counts") {
    std::vector<std::string> base{"su3", "table", "--rep1", "2", "0", "--rep2", "1", "1", "--format", "csv"};
    Result a = run(base);
    Result b = run(base);
    auto par = base;
    par.insert(par.end(), {"--jobs", "4"});
    Result c = run(par);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.rfind("lambda3,mu3,", 0) == 0);
}

TEST_CASE("other subcommands") {
    CHECK(run({"pattern", "validate", "2,0;1"}).code == 0);
    CHECK(run({"pattern", "dim", "2,1,0"}).out == "8\n");
    CHECK(run({"pattern", "phase", "2,0;1"}).out == "1\n");
    Result e = run({"pattern", "enumerate", "1,0,0"});
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 3);
    CHECK(run({"bfr", "list", "--n", "4", "--m", "3"}).out == "1110\n1101\n1011\n0111\n");
    CHECK(run({"bfr", "complement", "1010"}).out == "0101\n");
    Result l = run({"invariants", "list", "--n", "4"});
    CHECK(l.out.find("100|111|000") != std::string::npos);
    CHECK(run({"invariants", "ktable", "--rep1", "1", "0", "--rep2", "1", "0", "--rep3", "0", "1"}).code == 0);
    Result w = run({"su3", "wigner", "--rep1", "1", "0", "--rep2", "1", "0", "--rep3", "0", "1", "--state", "1/2", "1",
                    "1/2", "1", "0", "2", "--tz", "1/2", "-1/2", "0"});
    CHECK(w.code == 0);
    CHECK(w.out == "+1/6*sqrt(6)\n");
}
