#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

// ARIMAT_CLI is injected by the build as the absolute path of the tool.

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

void ensure_fixtures();

RunResult run(const std::string& args) {
    ensure_fixtures();
    std::string cmd = std::string(ARIMAT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

void ensure_fixtures() {
    static const bool once = [] {
        write_file("cli_m1.json", R"({"ambient_rank": 2, "generators": [[2, 0], [0, 1]]})");
        write_file("cli_m2.json", R"({"ambient_rank": 2, "generators": [[1, 1], [1, -1]]})");
        write_file("cli_m3.json",
                   R"({"ambient_rank": 2, "generators": [[1, 1], [1, -1], [1, 0]]})");
        write_file("cli_n0.json", R"({"ambient_rank": 0, "generators": []})");
        write_file("cli_tors.json",
                   R"({"ambient_rank": 2, "relations": [[2, 0]], "generators": [[0, 1]]})");
        write_file("cli_short.txt", "2 0\n0 1\n");
        return true;
    }();
    (void)once;
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int n = 0;
    std::size_t pos = 0, nl;
    while (pos < text.size()) {
        nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        if (text.substr(pos, nl - pos).find(needle) != std::string::npos) ++n;
        pos = nl + 1;
    }
    return n;
}

} // namespace

TEST_CASE("info prints the header invariants") {
    RunResult r = run("info cli_m1.json");
    CHECK(r.status == 0);
    CHECK(r.out == "d(∅)=2 m(∅)=1 r=2 essential=true\n");
}

TEST_CASE("info --all lists every subset") {
    RunResult r = run("info cli_m3.json --all");
    CHECK(r.status == 0);
    CHECK(count_lines_with(r.out, "A=") == 8);
    CHECK(r.out.find("A={1,2} d=0 cork=2 m=2 independent=true\n") != std::string::npos);
    CHECK(r.out.find("A={1,2,3} d=0 cork=2 m=1 independent=false\n") != std::string::npos);
}

TEST_CASE("tutte golden outputs") {
    CHECK(run("tutte cli_m1.json").out == "x^2 + x\n");
    CHECK(run("tutte cli_m2.json").out == "x^2 + 1\n");
    CHECK(run("tutte cli_m3.json").out == "x^2 + x + y + 1\n");
    CHECK(run("tutte cli_m3.json --dual").out == "y^2 + y + x + 1\n");
    CHECK(run("tutte cli_n0.json").out == "1\n");
}

TEST_CASE("hilbert golden outputs") {
    CHECK(run("hilbert cli_m3.json").out == "(1 + t + 2*t^2) / (1 - t)^2\n");
    CHECK(run("hilbert cli_m3.json --dual").out == "(1 + 3*t) / (1 - t)^1\n");
    CHECK(run("hilbert cli_n0.json").out == "1\n");
    CHECK(run("hilbert cli_tors.json").out == "(2) / (1 - t)^1\n");
}

TEST_CASE("poset json schema and content") {
    RunResult r = run("poset cli_m1.json");
    CHECK(r.status == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["elements"].size() == 6);
    CHECK(doc["covers"].size() == 7);
    CHECK(doc["components"].size() == 1);
    CHECK(doc["f_vector_per_component"] == nlohmann::json::parse("[[1, 3, 2]]"));
    CHECK(doc["elements"][2]["character"] == nlohmann::json::parse(R"(["1/2"])"));
    CHECK(doc["elements"][2]["subset"] == nlohmann::json::parse("[1]"));
    CHECK(doc["elements"][5]["rank"] == 2);
}

TEST_CASE("poset dot format") {
    RunResult r = run("poset cli_m1.json --format dot");
    CHECK(r.status == 0);
    CHECK(r.out.find("rankdir=BT") != std::string::npos);
    CHECK(r.out.find("n0 -> n1;") != std::string::npos);
    CHECK(r.out.find("({1,2}; 1/2,0)") != std::string::npos);
}

TEST_CASE("matrix shorthand input") {
    CHECK(run("tutte cli_short.txt").out == "x^2 + x\n");
}

TEST_CASE("output is byte deterministic") {
    RunResult a = run("poset cli_m3.json");
    RunResult b = run("poset cli_m3.json");
    CHECK(a.out == b.out);
    CHECK(run("verify cli_m3.json").out == run("verify cli_m3.json").out);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run("info cli_missing.json").status == 2);
    write_file("cli_bad.json", "{\"ambient_rank\": 2");
    CHECK(run("info cli_bad.json").status == 2);
    CHECK(run("frobnicate cli_m1.json").status == 2);
}

TEST_CASE("verify passes on a sound realization") {
    RunResult r = run("verify cli_m1.json");
    CHECK(r.status == 0);
    CHECK(count_lines_with(r.out, "PASS ") == 12);
    CHECK(count_lines_with(r.out, "FAIL") == 0);
}

TEST_CASE("verify flags a corrupted cover list") {
    RunResult r = run("verify cli_m1.json --corrupt-cover");
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL simplicial-components") != std::string::npos);
}

TEST_CASE("output flag writes the file and keeps stdout quiet") {
    std::remove("cli_out.txt");
    RunResult r = run("tutte cli_m1.json --output cli_out.txt");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in("cli_out.txt");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "x^2 + x\n");
}

TEST_CASE("faceideal prints the presentation") {
    RunResult r = run("faceideal cli_m2.json");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "variables: x0:0 x1:1 x2:1 x3:2 x4:2\n"
          "x0 - 1\n"
          "x1*x2 - (x3 + x4)\n"
          "x3*x4\n");
}
