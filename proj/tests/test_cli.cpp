#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cliffrep::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rep") {
    auto r = run({"rep", "--sig", "0,1", "1+2*eps1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(0,1) route real2\nR(2)\n[ 1 -2 ]\n[ 2  1 ]\n");
    r = run({"rep", "--sig", "2,0", "e1"});
    CHECK(r.out == "(2,0) route explicit\nR(2)\n[ 1  0 ]\n[ 0 -1 ]\n");
    r = run({"rep", "--sig", "0,1", "0"});
    CHECK(r.out == "(0,1) route real2\nR(2)\n[ 0 0 ]\n[ 0 0 ]\n");
    r = run({"rep", "--sig", "2,0", "-", "--format", "records"}, "e1+e12\n");
    CHECK(r.out == "{\"signature\":\"(2,0)\",\"route\":\"explicit\",\"ring\":\"R\",\"size\":2,\"blocks\":[[[\"1\",\"1\"],[\"-1\",\"-1\"]]]}\n");
}

TEST_CASE("exit codes") {
    auto r = run({"rep", "--sig", "0,1", "1+e1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position") != std::string::npos);
    CHECK(run({"rep", "--sig", "x", "1"}).code == 2);
    r = run({"rep", "--sig", "3,5", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find("nearest") != std::string::npos);
    CHECK(run({"verify", "--sig", "3,5"}).code == 3);
    CHECK(run({}).code == 2);
}

TEST_CASE("inverse") {
    CHECK(run({"inverse", "--sig", "1,0", "1+e1"}).out == "non-invertible\n");
    CHECK(run({"inverse", "--sig", "0,1", "eps1"}).out == "-1*eps1\n");
    CHECK(run({"inverse", "--sig", "0,2", "1+eps1"}).out == "1/2 - 1/2*eps1\n");
}

TEST_CASE("classify and table") {
    CHECK(run({"classify", "--sig", "2,2"}).out == "(2,2) R(4)\n");
    auto t = run({"table", "--max-n", "3"}).out;
    CHECK(t.find("n=2: R(2)* R(2)* H*\n") != std::string::npos);
    CHECK(t.find("n=3: C(2)* 2R(2)* C(2)* 2H*\n") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--sig", "9,0", "--trials", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
    r = run({"verify", "--sig", "1,1", "--seed", "3", "--format", "records"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(run({"verify", "--sig", "1,1", "--seed", "3", "--format", "records"}).out == r.out);
}

TEST_CASE("catalog") {
    auto r = run({"catalog"});
    CHECK(r.out.find("(3,1) explicit R(4)") != std::string::npos);
    r = run({"catalog", "--corrections"});
    CHECK(r.out.rfind("# Corrections", 0) == 0);
}
