#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

// End-to-end exercise of the installed command-line surface: exit codes,
// output determinism, format contracts.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SCROLLCALC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("analyze") {
    auto r = run("analyze --e 2 --b 11 --k 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dim component = 662 (closed) = 662 (HRR)") != std::string::npos);

    r = run("analyze --e 2 --b 11 --k 11 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"dim_component\": 662") != std::string::npos);
    CHECK(r.out.find("\"schema\": \"scrollcalc/1\"") != std::string::npos);

    // byte-identical reruns
    auto again = run("analyze --e 2 --b 11 --k 11 --format json");
    CHECK(again.out == r.out);

    // inadmissible: exit 2 with the violated label
    r = run("analyze --e 2 --b 9 --k 6");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("k+e>b violated") != std::string::npos);

    r = run("analyze --e 1 --b 9 --k 6");
    CHECK(r.exit_code == 2);

    // audit-mode flag on example 3 only
    r = run("analyze --e 4 --b 18 --k 18 --format json");
    CHECK(r.out.find("paper-discrepancy") == std::string::npos);
    r = run("analyze --e 4 --b 18 --k 18 --format json --audit-mode");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("paper-discrepancy: d (printed 58, computed 54)") !=
          std::string::npos);
}

TEST_CASE("specialize") {
    auto r = run("specialize --from 5,5,5,3,3 --to 7,5,4,3,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run("specialize --from 7,5,4,3,2 --to 5,5,5,3,3");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("false") == 0);
    CHECK(r.out.find("violated twist") != std::string::npos);

    r = run("specialize --from 1,1 --to 2,1");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("degree mismatch 2 != 3") != std::string::npos);

    r = run("specialize --from 1,1 --to 1,1,0");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("rank mismatch") != std::string::npos);

    r = run("specialize --from 1,x --to 1,1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("audit-examples") {
    auto r = run("audit-examples");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("paper-internal-inconsistency") != std::string::npos);
    CHECK(r.out.find("| printed 58 | computed 54 | mismatch") != std::string::npos);

    r = run("audit-examples --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"schema\": \"scrollcalc/1\"") != std::string::npos);
}

TEST_CASE("scan") {
    auto r = run("scan --e 2 --b-min 7 --b-max 12");
    CHECK(r.exit_code == 0);
    // header plus 15 admissible rows
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 16);

    auto r4 = run("scan --e 2 --b-min 7 --b-max 12 --jobs 4");
    CHECK(r4.out == r.out);

    r = run("scan --e 2 --b-min 7 --b-max 7");
    CHECK(r.exit_code == 0);
    lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 1);  // header only

    r = run("scan --e 2 --b-min 9 --b-max 8");
    CHECK(r.exit_code == 2);

    r = run("scan --e 2 --b-min 10 --b-max 11 --format json-lines");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"schema\":\"scrollcalc/1\"") != std::string::npos);

    r = run("scan --e 2 --b-min 7 --b-max 8 --out /nonexistent-dir/x.tsv");
    CHECK(r.exit_code == 1);
}

TEST_CASE("hilbert-poly") {
    auto r = run("hilbert-poly --e 2 --b 11 --k 11 --eval 1 --eval 0 --eval -3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("P(T) = 37/6*T^3 + 12*T^2 + 41/6*T + 1") != std::string::npos);
    CHECK(r.out.find("P(1) = 26") != std::string::npos);
    CHECK(r.out.find("P(0) = 1") != std::string::npos);

    r = run("hilbert-poly --e 2 --b 9 --k 6");
    CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("analyze --e x --b 1 --k 1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
