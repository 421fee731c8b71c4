// Drives the sgraph binary end to end: exit-code discipline (0 pass,
// 1 negative result, 2 usage/parse), the family -> analyze round trip, and
// a seeded corpus of malformed files that must never exit 0 or 1.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "sgi/families.hpp"
#include "sgi/inertia.hpp"
#include "sgi/random.hpp"
#include "sgi/sg_format.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace sgi;

namespace {

int g_failures = 0;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

void expect_exit(const std::string& cmd, int want) {
    const auto r = run_command(cmd);
    expect(r.exit_code == want,
           cmd + " exited " + std::to_string(r.exit_code) + ", want " + std::to_string(want));
}

std::string write_file(const fs::path& dir, const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) cli = argv[++i];
    if (cli.empty()) {
        std::cerr << "usage: cli_test --cli <sgraph binary>\n";
        return 2;
    }
    const fs::path dir = fs::temp_directory_path() / ("sgi-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    const std::string c4 = write_file(dir, "c4.sg", to_sg(make_cycle({4, true})));
    const std::string bowtie = write_file(dir, "bowtie.sg", to_sg(test::bowtie()));
    const std::string two_parts = write_file(dir, "parts.sg", "4 2\n0 1 +\n2 3 -\n");

    expect_exit(cli + " analyze " + c4, 0);
    expect_exit(cli + " analyze " + c4 + " --machine", 0);
    expect_exit(cli + " analyze " + dir.string() + "/does-not-exist.sg", 2);
    expect_exit(cli + " analyze " + write_file(dir, "loop.sg", "2 1\n0 0 +\n"), 2);

    expect_exit(cli + " contract " + c4, 0);
    expect_exit(cli + " contract " + bowtie, 1);     // cycles share a vertex
    expect_exit(cli + " contract " + two_parts, 1);  // disconnected

    expect_exit(cli + " family cycle 2", 2);
    expect_exit(cli + " family path 0", 2);
    expect_exit(cli + " family path 1", 0);
    expect_exit(cli + " family path 1 --unbalanced", 2);
    expect_exit(cli + " family wheel 5", 2);

    expect_exit(cli + " verify --max-n 9", 2);
    expect_exit(cli + " verify --max-n 1", 2);
    expect_exit(cli + " verify --max-n 8", 2);  // needs --include-n8
    expect_exit(cli + " verify --max-n 3 --union-samples 4", 0);
    expect_exit(cli + " verify --max-n 2 --union-samples 0", 0);
    expect_exit(cli + " nonsense", 2);
    expect_exit(cli, 2);

    // analyze spot values on P5
    const std::string p5 = write_file(dir, "p5.sg", to_sg(make_path(5)));
    const auto p5_run = run_command(cli + " analyze --machine " + p5);
    expect(p5_run.exit_code == 0, "analyze p5");
    for (const std::string want :
         {" ipos=2 ", " ineg=2 ", " eta=1 ", " theta=0 ", " p=2 ", " strict_applicable=1 "})
        expect(p5_run.output.find(want) != std::string::npos, "p5 record lacks" + want);

    // family output is itself a valid .sg file and analyze reproduces the
    // inertia printed by family
    for (const std::string spec : {"cycle 5", "cycle 6 --unbalanced", "path 7"}) {
        const auto fam = run_command(cli + " family " + spec);
        expect(fam.exit_code == 0, "family " + spec);
        const std::string file = write_file(dir, "family.sg", fam.output);
        const auto ana = run_command(cli + " analyze --machine " + file);
        expect(ana.exit_code == 0, "re-analyze of family " + spec);
        const auto tag = fam.output.find("# computed inertia: ");
        const auto inertia_text = fam.output.substr(tag + 20, fam.output.find('\n', tag) - tag - 20);
        SignedGraph g = parse_sg(fam.output);
        expect(to_string(graph_inertia(g)) == inertia_text, "round trip inertia of family " + spec);
    }

    // malformed corpus: mutations of a valid file must exit 2 whenever the
    // parser rejects them, and never crash
    SplitMix64 rng(77);
    const std::string base = to_sg(test::bowtie(-1, 1));
    const char alphabet[] = "0123456789+- #\nxy";
    for (int trial = 0; trial < 60; ++trial) {
        std::string text = base;
        for (int e = 0; e < 3; ++e) {
            const auto pos = rng.below(text.size());
            if (rng.coin())
                text[pos] = alphabet[rng.below(sizeof(alphabet) - 1)];
            else
                text.insert(pos, 1, alphabet[rng.below(sizeof(alphabet) - 1)]);
        }
        bool valid = true;
        try {
            parse_sg(text);
        } catch (const ParseError&) {
            valid = false;
        }
        const std::string file = write_file(dir, "fuzz.sg", text);
        const auto r = run_command(cli + " analyze " + file);
        if (valid)
            expect(r.exit_code == 0 || r.exit_code == 1, "valid mutant rejected: " + text);
        else
            expect(r.exit_code == 2, "garbage accepted (exit " + std::to_string(r.exit_code) + ")");
    }

    fs::remove_all(dir);
    if (g_failures == 0) {
        std::cout << "cli_test: all checks passed\n";
        return 0;
    }
    std::cout << "cli_test: " << g_failures << " failures\n";
    return 1;
}
