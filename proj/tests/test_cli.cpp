#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gadic::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("worked example through the CLI") {
    const auto r = run({"length", "46", "--base", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("lambda lookup") {
    const auto r = run({"lambda", "--base", "2", "--k", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "11\n");
}

TEST_CASE("expansions, including zero and negatives") {
    CHECK(run({"expand", "0", "--base", "7"}).out == "[]\n");
    CHECK(run({"expand", "46", "--base", "5"}).out == "[1, -1, 2]\n");
    CHECK(run({"expand", "-46", "--base", "5"}).out == "[-1, 1, -2]\n");
}

TEST_CASE("usage errors carry distinct messages and exit 1") {
    const auto unknown = run({"frobnicate"});
    CHECK(unknown.exit_code == 1);
    CHECK(!unknown.err.empty());

    const auto malformed = run({"length", "4x6", "--base", "5"});
    CHECK(malformed.exit_code == 1);
    CHECK(malformed.err.find("malformed integer") != std::string::npos);

    const auto bad_base = run({"lambda", "--base", "1", "--k", "2"});
    CHECK(bad_base.exit_code == 1);
    CHECK(bad_base.err.find("base") != std::string::npos);

    CHECK(run({}).exit_code == 1);
}

TEST_CASE("computational failures exit 2") {
    // 2 alone cannot reach odd integers, whatever the margin.
    const auto r = run({"oracle", "--set", "list:2", "--window", "-4:4"});
    CHECK(r.exit_code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("oracle table output") {
    const auto r = run({"oracle", "--set", "g:2", "--window", "-16:16", "--margin", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,length\n") == 0);
    CHECK(r.out.find("\n3,2\n") != std::string::npos);
    CHECK(r.out.find("\n11,3\n") != std::string::npos);
    CHECK(r.out.find("\n-11,3\n") != std::string::npos);
}

TEST_CASE("oracle lambda output") {
    CHECK(run({"oracle-lambda", "--set", "g:2", "--k", "4", "--bound", "100"}).out == "43\n");
    CHECK(run({"oracle-lambda", "--set", "g:2", "--k", "9", "--bound", "100"}).out ==
          "not-found\n");
}

TEST_CASE("plength report") {
    const auto r = run({"plength", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("upper bound: 1\n") != std::string::npos);
    CHECK(r.out.find("status: exact\n") != std::string::npos);

    const auto frontier = run({"plength", "58164433", "--cap", "64"});
    CHECK(frontier.exit_code == 0);
    CHECK(frontier.out.find("upper bound: 3\n") != std::string::npos);
    CHECK(frontier.out.find("candidate") != std::string::npos);
    CHECK(frontier.out.find("two-power cap: 64\n") != std::string::npos);
}

TEST_CASE("pair and triple decompositions") {
    CHECK(run({"goldbach", "28"}).out == "28 = 5 + 23\n");
    CHECK(run({"three-primes", "11"}).out == "11 = 3 + 3 + 5\n");
    CHECK(run({"goldbach", "7"}).exit_code == 1);
}

TEST_CASE("class membership and verification") {
    CHECK(run({"sun-member", "47867742232066880047611079"}).out == "true\n");
    CHECK(run({"sun-member", "47867742232066880047611080"}).out == "false\n");
}

TEST_CASE("candidate sieve over a tiny window") {
    const auto r = run({"sieve3", "--lo", "3", "--hi", "99", "--cap", "12"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("survivors: 0") != std::string::npos);
}

TEST_CASE("b-file output") {
    CHECK(run({"bfile", "--base", "2", "--count", "3"}).out == "1 1\n2 3\n3 11\n");
}

TEST_CASE("figure datasets") {
    const auto fig2 = run({"fig2", "--n", "99", "--gmax", "20"});
    CHECK(fig2.exit_code == 0);
    CHECK(fig2.out.find("g,length\n") == 0);

    const auto fig3 = run({"fig3", "--base", "2", "--nmax", "3"});
    CHECK(fig3.out ==
          "series,x,y\n"
          "length,1,1\n"
          "length,2,1\n"
          "length,3,2\n"
          "lambda,1,1\n"
          "lambda,2,3\n");
}

TEST_CASE("dataset commands write files on request") {
    const std::string path = "test_cli_tmp_output.csv";
    const auto r = run({"bfile", "--base", "3", "--count", "2", "--output", path});
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "1 1\n2 2\n");
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args{"plength", "99", "--cap", "32"};
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("expand") != std::string::npos);
}
