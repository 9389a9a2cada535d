// Black-box checks of the fareybary CLI: golden outputs, exit codes, and
// deterministic render files. Takes the binary path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        std::cerr << "[FAIL] popen: " << cmd << "\n";
        std::exit(1);
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "[ok] " << what << "\n";
    } else {
        ++failures;
        std::cout << "[FAIL] " << what << "\n";
    }
}

void expect_contains(const RunResult& r, const std::string& needle, const std::string& what) {
    expect(r.exit_code == 0 && r.out.find(needle) != std::string::npos,
           what + " (exit " + std::to_string(r.exit_code) + ", got: " + r.out.substr(0, 200) + ")");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-fareybary>\n";
        return 1;
    }
    std::string bin = argv[1];

    expect_contains(run(bin + " delta --point 3/5,1/5 --depth 2"), "\"value\":\"5/9,1/9\"",
                    "delta --depth 2 hits the stage-2 golden value");
    expect_contains(run(bin + " delta --point 777078835884/1006781585533,"
                              "10562230626642/25169539638325 --tol 1/1000000"),
                    "\"exact\":false", "delta limit mode reports a certified inexact value");
    expect_contains(run(bin + " inverse --point 5/9,1/9 --tol 1/1000000"), "\"value\":\"3/5,1/5\"",
                    "inverse lands exactly on the stage-2 preimage");
    expect_contains(run(bin + " expand --point 2/3,1/3"), "\"termination\":\"vertex_hit\"",
                    "expand reports the vertex hit");
    expect_contains(run(bin + " expand --point 5/6,1/2 --partition bary --depth 6"),
                    "\"steps\":\"1(II),1(II),1(II),1(II),1(II),1(II)\"",
                    "bary expansion of the 1(II) fixed point");
    expect_contains(run(bin + " periodic-rational --period \"1(II)\""), "\"value\":\"5/6,1/2\"",
                    "periodic-rational fixed point");
    expect_contains(run(bin + " periodic-cubic --period \"1(II)\""),
                    "\"text\":\"x^3 - x^2 - x - 1\"", "periodic-cubic field polynomial");
    expect_contains(run(bin + " ratio --seq \"1(II),1(II),1(II)\""), "\"ratio\":\"5/3\"",
                    "ratio series emits exact rationals (radii 1,3,5 against 3^2)");
    expect_contains(run(bin + " question --x 1/3 --depth 8"), "\"value\":\"1/4\"",
                    "classical oracle value");
    expect_contains(run(bin + " lemma --tuple 1,2,3,5"), "\"holds\":true", "lemma tuple check");

    // exit codes: domain errors -> 2, missing dominance -> 3
    expect(run(bin + " delta --point 2,0").exit_code == 2, "outside point exits 2");
    expect(run(bin + " delta --point nonsense").exit_code == 2, "malformed rational exits 2");
    expect(run(bin + " expand --point 1/2,1/6 --partition hex").exit_code == 2,
           "unknown partition exits 2");
    expect(run(bin + " periodic-cubic --period \"1(I)\"").exit_code == 3,
           "unipotent period exits 3");
    expect(run(bin + " ratio --seq \"0(II)\"").exit_code == 2, "illegal sequence exits 2");
    expect_contains(run(bin + " ratio --seq \"2(III),1(II),1(I)\""), "\"s_n\":\"4\"",
                    "written-out trailing I-run is accepted and folded");

    // deterministic render output
    std::string svg1 = "/tmp/fareybary_cli_a.svg", svg2 = "/tmp/fareybary_cli_b.svg";
    expect_contains(run(bin + " render --kind farey --depth 2 --out " + svg1), "\"triangles\":9",
                    "render reports the leaf count");
    run(bin + " render --kind farey --depth 2 --out " + svg2);
    expect(!slurp(svg1).empty() && slurp(svg1) == slurp(svg2), "render output is byte-identical");
    std::remove(svg1.c_str());
    std::remove(svg2.c_str());

    // mc config file with flag overrides
    std::string cfg = "/tmp/fareybary_cli_mc.cfg";
    {
        std::ofstream out(cfg);
        out << "samples=32\ndepth=16\nseed=5\n";
    }
    RunResult mc_file = run(bin + " mc --config " + cfg);
    expect_contains(mc_file, "\"samples\":32", "mc reads the config file");
    RunResult mc_flags = run(bin + " mc --samples 32 --depth 16 --seed 5");
    expect(mc_file.out == mc_flags.out, "mc config file and flags agree");
    RunResult mc_override = run(bin + " mc --config " + cfg + " --seed 6");
    expect(mc_override.exit_code == 0 && mc_override.out != mc_file.out,
           "mc flag overrides the config seed");
    std::remove(cfg.c_str());

    if (failures) {
        std::cout << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
