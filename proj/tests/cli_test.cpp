#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "zlam/beta.hpp"
#include "zlam/syntax.hpp"

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ZLAM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("bullet command") {
    auto r = run("bullet \"((\\x. x) (\\y. y)) z\"");
    CHECK(r.status == 0);
    CHECK(r.out == "z\n");
    CHECK(run("bullet \"y\"").out == "y\n");
    CHECK(run("bullet \"(\\x. x x) (\\x. x x)\"").out == "(\\x. x x) (\\x. x x)\n");
    auto bad = run("bullet \"(\\x. x\"");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("parse error") != std::string::npos);
}

TEST_CASE("trace command emits validating traces") {
    auto r = run("trace self \"((\\x. x) (\\y. y)) z\"");
    CHECK(r.status == 0);
    auto trace = zlam::parse_trace(r.out);
    REQUIRE(trace.size() == 3);
    CHECK(zlam::validate_seq(zlam::ReductionSeq(trace)));
    CHECK(zlam::print(trace.back()) == "z");

    CHECK(run("trace self \"y\"").out == "y\n");

    auto zl = run("trace z-left \"(\\x. x x) ((\\y. y) (\\y. y))\" "
                  "--to \"(\\x. x x) (\\y. y)\"");
    CHECK(zl.status == 0);
    auto zt = zlam::parse_trace(zl.out);
    CHECK(zlam::validate_seq(zlam::ReductionSeq(zt)));
    CHECK(zlam::alpha_eq(zt.front(), zlam::parse("(\\x. x x) (\\y. y)")));
    CHECK(zlam::alpha_eq(zt.back(), zlam::parse("(\\y. y) (\\y. y)")));

    auto notstep = run("trace z-left \"x\" --to \"y\"");
    CHECK(notstep.status == 2);

    auto rhs = run("trace rhs \"x x\" --var x --sub \"\\x. x\"");
    CHECK(rhs.status == 0);
    auto rt = zlam::parse_trace(rhs.out);
    CHECK(zlam::validate_seq(zlam::ReductionSeq(rt)));
}

TEST_CASE("join command") {
    write_file("left.trace", "(\\x. x) ((\\y. y) z)\n(\\y. y) z\n");
    write_file("right.trace", "(\\x. x) ((\\y. y) z)\n(\\x. x) z\n");
    auto r = run("join left.trace right.trace");
    CHECK(r.status == 0);
    CHECK(r.out.find("common reduct: z") != std::string::npos);

    write_file("bad.trace", "y\nx\n");
    CHECK(run("join left.trace bad.trace").status == 2);
}

TEST_CASE("check command, json report shape and exit status") {
    auto r = run("check self --max-size 3 --vars 2 --json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("suite") == "self");
    CHECK(j.at("violations") == 0);
    CHECK(j.at("first_violation").is_null());
    CHECK(j.at("checked").get<long>() > 0);
    CHECK(j.at("params").at("max_size") == "3");
    // stable across runs
    CHECK(run("check self --max-size 3 --vars 2 --json").out == r.out);

    CHECK(run("check z --max-size 4 --vars 1").status == 0);
    CHECK(run("check angle --seed 0 --count 20 --depth 6").status == 0);
    CHECK(run("check bogus").status == 2);
}

TEST_CASE("ars command") {
    write_file("good.ars.json",
               R"({"elements": ["0","1","2"],
                   "edges": [["0","1"],["0","2"],["1","2"]],
                   "bullet": {"0":"2","1":"2","2":"2"}})");
    auto r = run("ars good.ars.json check-z");
    CHECK(r.status == 0);
    CHECK(r.out == "ok\n");
    CHECK(run("ars good.ars.json check-angle").status == 0);

    auto join = run("ars good.ars.json join --from 0 --left 1 --right 2");
    CHECK(join.status == 0);
    CHECK(join.out.find("common reduct:") != std::string::npos);

    write_file("bad.ars.json",
               R"({"elements": ["0","1","2"],
                   "edges": [["0","1"],["0","2"]],
                   "bullet": {"0":"0","1":"1","2":"2"}})");
    auto v = run("ars bad.ars.json check-z");
    CHECK(v.status == 1);
    CHECK(v.out.find("violation") != std::string::npos);
    CHECK(v.out.find("0") != std::string::npos);

    CHECK(run("ars missing.json check-z").status == 2);
}
