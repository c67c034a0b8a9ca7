// Black-box contract tests for the command-line tool. The first argument is
// the path to the built binary; every scenario runs it through the shell and
// checks exit codes and byte-exact stdout (timings go to stderr, which is
// discarded).

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int g_failures = 0;

void expect(bool ok, const std::string& label) {
    std::cout << (ok ? "ok   " : "FAIL ") << label << "\n";
    if (!ok) ++g_failures;
}

void expect_stdout(const RunResult& r, const std::string& want, const std::string& label) {
    const bool ok = r.code == 0 && r.out == want;
    expect(ok, label);
    if (!ok)
        std::cout << "     exit " << r.code << "\n     got:  " << r.out
                  << "     want: " << want;
}

void expect_exit(const RunResult& r, int code, const std::string& label) {
    expect(r.code == code, label + " (exit " + std::to_string(r.code) + ", want " +
                               std::to_string(code) + ")");
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

size_t line_count(const std::string& text) {
    size_t n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

size_t occurrences(const std::string& text, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract /path/to/modulilab\n";
        return 2;
    }
    const std::string exe = "\"" + std::string(argv[1]) + "\"";

    // JSON output is byte-exact.
    expect_stdout(run_command(exe + " classify --gcoeffs 0,0,1,1 --json"),
                  "{\"stratum\":\"SixA1\"}\n", "classify json");
    expect_stdout(run_command(exe + " quotient --gcoeffs 1,-1,1,1 --json"),
                  "{\"wpoint\":[\"2\",\"2\",\"0\",\"0\"]}\n", "quotient json");
    expect_stdout(
        run_command(exe + " invariants --gcoeffs 1,-1,1,1 --json"),
        "{\"H\":\"2\",\"L\":\"-1\",\"M\":\"1\",\"D\":\"2\",\"R\":\"2\",\"S\":\"0\",\"T\":\"0\"}\n",
        "invariants json");
    expect_stdout(run_command(exe + " oracle-count --gcoeffs 0,0,1,1 --prime 7 --json"),
                  "{\"prime\":7,\"count\":6,\"per_chart\":{\"0000\":6}}\n",
                  "oracle-count json");
    expect_stdout(run_command(exe + " beta --preset divisor-E --json"),
                  "{\"preset\":\"divisor-E\",\"s\":\"5/6\",\"a\":\"2\",\"beta\":\"7/6\"}\n",
                  "beta json");
    expect_stdout(run_command(exe + " beta --preset delta-sextic-dP --json"),
                  "{\"preset\":\"delta-sextic-dP\",\"delta\":\"1\"}\n", "delta preset json");
    expect_stdout(run_command(exe + " fan --check multiplicities --json"),
                  "{\"rays\":[[1,2,3],[1,0,0],[0,1,0],[0,0,1],[-3,-4,-6]],"
                  "\"maximal_cones\":[[0,1,2],[0,1,3],[0,2,3],[4,1,2],[4,1,3],[4,2,3]],"
                  "\"multiplicities\":[3,2,1,6,4,3]}\n",
                  "fan json");
    expect_stdout(run_command(exe + " classify --cpoint 1,2,3,5 --json"),
                  "{\"gcoeffs\":[\"-165\",\"165\",\"1517\",\"173\"],"
                  "\"discriminants\":{\"d12\":\"165\",\"d13\":\"845\",\"d14\":\"168\","
                  "\"quadric_product\":\"-4901\"},\"stratum\":\"TwoA1\"}\n",
                  "configuration pipeline json");

    // Default table rendering.
    expect_stdout(run_command(exe + " classify --gcoeffs 0,0,1,1"), "stratum  SixA1\n",
                  "classify table");
    expect_stdout(run_command(exe + " quotient --gcoeffs 1,-1,1,1"),
                  "wpoint  [\"2\",\"2\",\"0\",\"0\"]\n", "quotient table");

    // Closed forms and the quadrilinear polynomial.
    {
        const auto r = run_command(exe + " invariants --symbolic");
        expect(r.code == 0 && line_count(r.out) == 7 &&
                   r.out.rfind("H  1/2*a^2 + 1/2*b^2 + 1/2*c^2 + 1/2*d^2\nL  a*b*c*d\n", 0) == 0,
               "symbolic invariants table");
    }
    {
        const auto r = run_command(exe + " invariants --symbolic --json");
        expect(r.code == 0 && contains(r.out, "\"H\":{\"terms\":[{\"coef\":\"1/2\"") &&
                   contains(r.out, "\"vars\":[\"a\",\"b\",\"c\",\"d\"]"),
               "symbolic invariants json");
    }
    expect_stdout(
        run_command(exe + " invariants --gcoeffs 0,0,1,1 --form --json"),
        "{\"H\":\"1\",\"L\":\"0\",\"M\":\"0\",\"D\":\"0\",\"R\":\"0\",\"S\":\"1/12\","
        "\"T\":\"1/216\",\"form\":{\"terms\":[{\"coef\":\"1/2\",\"exp\":[1,0,1,0,1,0,1,0]},"
        "{\"coef\":\"-1/2\",\"exp\":[1,0,1,0,0,1,0,1]},{\"coef\":\"1/2\",\"exp\":[1,0,0,1,1,0,0,1]},"
        "{\"coef\":\"-1/2\",\"exp\":[1,0,0,1,0,1,1,0]},{\"coef\":\"-1/2\",\"exp\":[0,1,1,0,1,0,0,1]},"
        "{\"coef\":\"1/2\",\"exp\":[0,1,1,0,0,1,1,0]},{\"coef\":\"-1/2\",\"exp\":[0,1,0,1,1,0,1,0]},"
        "{\"coef\":\"1/2\",\"exp\":[0,1,0,1,0,1,0,1]}],"
        "\"vars\":[\"x1\",\"y1\",\"x2\",\"y2\",\"x3\",\"y3\",\"x4\",\"y4\"]}}\n",
        "numeric invariants with the form polynomial");
    expect_exit(run_command(exe + " invariants --gcoeffs 1,2,3,5 --symbolic"), 2,
                "invariants rejects mixed input modes");
    expect_exit(run_command(exe + " invariants"), 2, "invariants requires an input mode");

    // Catalogued singular points ride along under --points.
    {
        const auto r = run_command(exe + " classify --gcoeffs 0,0,1,1 --points --json");
        expect(r.code == 0 && contains(r.out, "\"stratum\":\"SixA1\"") &&
                   occurrences(r.out, "[[\"1\",") == 6,
               "classify --points lists six catalogued points");
    }

    // Orbit and stabilizer shapes.
    {
        const auto r = run_command(exe + " orbit --gcoeffs 0,0,0,1 --json");
        expect(r.code == 0 && contains(r.out, "\"size\":12"), "corner orbit size 12");
        const auto again = run_command(exe + " orbit --gcoeffs 0,0,0,1 --json");
        expect(again.code == 0 && again.out == r.out, "orbit output is deterministic");
    }
    {
        const auto r = run_command(exe + " stabilizer --gcoeffs 0,0,0,1 --json");
        expect(r.code == 0 && contains(r.out, "\"order\":48"), "corner stabilizer order 48");
    }

    // Scan grid: header plus a 21 x 21 lattice.
    {
        const auto r = run_command(exe + " strata-scan");
        expect(r.code == 0 && r.out.rfind("a,d,stratum\n", 0) == 0 &&
                   line_count(r.out) == 442 && contains(r.out, "\n0,1,SixA1\n") &&
                   contains(r.out, "\n1,1,Red\n") && contains(r.out, "\n1/10,3/10,TwoA1\n"),
               "strata-scan grid");
    }

    // Verification suites: exit 0 on success, 1 on failure, stdout deterministic.
    {
        const auto r = run_command(exe + " verify --suite stability --json");
        expect(r.code == 0 && contains(r.out, "\"pass\":true"), "verify stability passes");
        const auto again = run_command(exe + " verify --suite stability --json");
        expect(again.out == r.out, "verify output is deterministic");
    }
    {
        const auto r =
            run_command("MODULILAB_FORCE_FAIL=1 " + exe + " verify --suite stability");
        expect(r.code == 1 && contains(r.out, "forced-failure") &&
                   contains(r.out, "some checks FAILED"),
               "MODULILAB_FORCE_FAIL turns verify into exit 1");
    }
    {
        const auto r = run_command("MODULILAB_SEED=424242 " + exe +
                                   " verify --suite invariants --json");
        expect(r.code == 0 && contains(r.out, "\"pass\":true"),
               "verify invariants passes under a reseeded run");
    }
    expect_exit(run_command("MODULILAB_SEED=abc " + exe + " verify --suite stability"), 2,
                "malformed MODULILAB_SEED");

    // Usage errors exit 2.
    expect_exit(run_command(exe + " frobnicate"), 2, "unknown verb");
    expect_exit(run_command(exe + " quotient --gcoeffs 1,2,3,4 --bogus"), 2, "unknown flag");
    expect_exit(run_command(exe + " quotient"), 2, "missing required flag");
    expect_exit(run_command(exe + " classify --gcoeffs 1,2,x,4"), 2, "malformed rational");
    expect_exit(run_command(exe + " classify --gcoeffs 1,2,3"), 2, "wrong coefficient count");
    expect_exit(run_command(exe + " classify --gcoeffs 1,2,3,4 --ecoeffs 1,2,3"), 2,
                "conflicting inputs");
    expect_exit(run_command(exe + " oracle-count --gcoeffs 1,2,3,5 --prime 9"), 2,
                "composite prime");
    expect_exit(run_command(exe + " oracle-count --gcoeffs 1,2,3,5 --prime 2"), 2,
                "even prime");
    expect_exit(run_command(exe + " beta --preset no-such-profile"), 2, "unknown preset");
    expect_exit(run_command(exe + " verify --suite no-such-suite"), 2, "unknown suite");

    // Domain errors (valid usage, impossible computation) exit 1.
    expect_exit(run_command(exe + " oracle-count --gcoeffs 1/5,-1/5,1,1 --prime 5"), 1,
                "bad reduction at p");
    expect_exit(run_command(exe + " classify --gcoeffs 1,-1,1,2 --points"), 1,
                "uncatalogued points request");

    std::cout << (g_failures == 0 ? "cli contract clean" : "cli contract FAILURES") << "\n";
    return g_failures == 0 ? 0 : 1;
}
