// End-to-end checks of the installed command surface: output bytes and exit
// codes. Takes the binary path as its only argument.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;
std::string g_binary;
std::filesystem::path g_dir;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string command = env + " " + g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    RunResult result;
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

void expect(bool ok, const std::string& label) {
    if (ok) {
        std::cout << "ok: " << label << "\n";
    } else {
        std::cout << "FAILED: " << label << "\n";
        ++g_failures;
    }
}

std::string write_graph(const std::string& name, const std::string& text) {
    auto path = g_dir / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <binary>\n";
        return 1;
    }
    g_binary = argv[1];
    g_dir = std::filesystem::temp_directory_path() / "causalpersuade_cli_tests";
    std::filesystem::create_directories(g_dir);

    std::string chain =
        write_graph("chain.json", R"({"variables":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
    std::string fig2a = write_graph(
        "fig2a.json",
        R"({"variables":["a","e","s","t","w"],"edges":[["a","e"],["a","w"],["s","e"],["s","w"],["t","w"]]})");
    std::string fig6a = write_graph(
        "fig6a.json",
        R"({"variables":["a","b","c","d","e"],"edges":[["a","b"],["a","d"],["b","d"],["c","a"],["c","d"],["d","e"]]})");
    std::string prior_we =
        write_graph("prior_we.json", R"({"variables":["e","w"],"edges":[["w","e"]]})");
    std::string reversed =
        write_graph("reversed.json", R"({"variables":["x","y"],"edges":[["y","x"]]})");
    std::string bad = write_graph("bad.json", "{");

    auto dsep = run("dsep --graph " + chain + " --a a --b c --given b");
    expect(dsep.exit_code == 0 && dsep.output == "true\n", "dsep true, exit 0");

    auto dsep2 = run("dsep --graph " + chain + " --a a --b c");
    expect(dsep2.exit_code == 0 && dsep2.output == "false\n", "dsep false, exit 0");

    auto dsep_bad = run("dsep --graph " + chain + " --a a --b zz");
    expect(dsep_bad.exit_code == 2, "dsep precondition violation exits 2");

    auto parse_bad = run("dsep --graph " + bad + " --a a --b c");
    expect(parse_bad.exit_code == 2, "unparsable graph exits 2");

    auto usage = run("frobnicate");
    expect(usage.exit_code == 2, "unknown subcommand exits 2");

    auto cpdag = run("cpdag --graph " + fig6a);
    expect(cpdag.exit_code == 0 &&
               cpdag.output ==
                   "{\"conflict\":false,\"directed\":[[\"a\",\"d\"],[\"b\",\"d\"],"
                   "[\"c\",\"d\"],[\"d\",\"e\"]],\"undirected\":[[\"a\",\"b\"],[\"a\",\"c\"]]}\n",
           "cpdag golden json");

    auto cpdag_again = run("cpdag --graph " + fig6a);
    expect(cpdag_again.output == cpdag.output, "cpdag output is byte-stable");

    auto cpdag_dot = run("--output dot cpdag --graph " + fig6a);
    expect(cpdag_dot.exit_code == 0 &&
               cpdag_dot.output.find("a -> d;") != std::string::npos &&
               cpdag_dot.output.find("a -- b;") != std::string::npos,
           "cpdag dot mixes -> and --");

    auto enumerate = run("enumerate --graph " + chain);
    expect(enumerate.exit_code == 0 &&
               enumerate.output ==
                   "{\"edges\":[[\"a\",\"b\"],[\"b\",\"c\"]],\"variables\":[\"a\",\"b\",\"c\"]}\n"
                   "{\"edges\":[[\"b\",\"a\"],[\"b\",\"c\"]],\"variables\":[\"a\",\"b\",\"c\"]}\n"
                   "{\"edges\":[[\"b\",\"a\"],[\"c\",\"b\"]],\"variables\":[\"a\",\"b\",\"c\"]}\n",
           "enumerate prints one model per line");

    auto analyze = run("analyze --graph " + fig2a + " --pair e,w");
    expect(analyze.exit_code == 0 &&
               analyze.output.find("\"simple\":true") != std::string::npos &&
               analyze.output.find("\"rich\":true") != std::string::npos,
           "analyze reports the world profile");

    auto persuade = run("persuade --graph " + fig2a + " --x e --y w --receiver naive");
    expect(persuade.exit_code == 0 &&
               persuade.output.find("\"verdict\":\"accepted\"") != std::string::npos &&
               persuade.output.find("\"new_variables\":0") != std::string::npos,
           "naive persuasion accepted, exit 0");

    auto soph = run("persuade --graph " + fig2a + " --x w --y e --receiver sophisticated");
    expect(soph.exit_code == 3 &&
               soph.output.find("\"verdict\":\"infeasible\"") != std::string::npos,
           "hopeless sophisticated persuasion exits 3");

    auto budget = run("persuade --graph " + fig2a +
                      " --x e --y w --receiver sophisticated --budget 3");
    expect(budget.exit_code == 4, "budget exhaustion exits 4");

    auto env_budget =
        run("persuade --graph " + fig2a + " --x e --y w --receiver sophisticated",
            "CP_BUDGET=3");
    expect(env_budget.exit_code == 4, "CP_BUDGET env variable is honored");

    auto env_override = run("persuade --graph " + fig2a +
                                " --x e --y w --receiver sophisticated --budget 12",
                            "CP_BUDGET=3");
    expect(env_override.exit_code == 0, "explicit --budget wins over CP_BUDGET");

    auto debunk = run("debunk --graph " + fig2a + " --prior " + prior_we + " --link w,e");
    expect(debunk.exit_code == 0 &&
               debunk.output.find("\"new_variables\":1") != std::string::npos &&
               debunk.output.find("\"disclosure\":[\"e\",\"t\",\"w\"]") != std::string::npos,
           "revealing tenure debunks the selection story");

    auto dissuade = run("dissuade --graph " + fig2a + " --prior " + prior_we +
                        " --x e --y w --receiver sophisticated");
    expect(dissuade.exit_code == 0 &&
               dissuade.output.find("\"disclosure\":[\"a\",\"e\",\"s\",\"w\"]") !=
                   std::string::npos,
           "dissuasion demands all confounders");

    auto human = run("--output human dissuade --graph " + fig2a + " --prior " + prior_we +
                     " --x e --y w --receiver sophisticated");
    expect(human.exit_code == 0 && human.output.find("reasoning:") != std::string::npos &&
               human.output.find("1. ") != std::string::npos,
           "human output renders numbered reasoning");

    std::string fig15 = write_graph(
        "fig15.json",
        R"({"variables":["c1","x","y","z"],"edges":[["c1","x"],["c1","y"],["z","y"]]})");
    auto deceive = run("persuade --graph " + fig15 + " --x x --y y --prior " + reversed +
                       " --receiver sophisticated");
    expect(deceive.exit_code == 0 &&
               deceive.output.find("\"disclosure\":[\"x\",\"y\",\"z\"]") != std::string::npos,
           "the defective flip needs only one new variable");
    auto honest = run("persuade --graph " + fig15 + " --x x --y y --prior " + reversed +
                      " --receiver sophisticated --truthful-only");
    expect(honest.exit_code == 3, "--truthful-only rules the defective flip out");

    auto fixtures = run("fixtures --list");
    expect(fixtures.exit_code == 0 && fixtures.output.find("fig12(n)\n") != std::string::npos,
           "fixtures --list");

    auto emit = run("fixtures --emit fig12 --n 3");
    expect(emit.exit_code == 0 && emit.output.find("\"c3\"") != std::string::npos,
           "fixtures --emit fig12 --n 3");

    auto emit_dot = run("--output dot fixtures --emit fig4a");
    expect(emit_dot.exit_code == 0 && emit_dot.output.find("a -> b;") != std::string::npos,
           "fixtures dot output");

    auto version = run("--version");
    expect(version.exit_code == 0 && version.output.find("1.0.0") != std::string::npos,
           "--version");

    auto help = run("--help");
    expect(help.exit_code == 0 && help.output.find("persuade") != std::string::npos,
           "--help lists the subcommands");

    auto plan_a = run("dissuade --graph " + fig2a + " --prior " + prior_we +
                      " --x e --y w --receiver sophisticated");
    auto plan_b = run("dissuade --graph " + fig2a + " --prior " + prior_we +
                      " --x e --y w --receiver sophisticated");
    expect(plan_a.output == plan_b.output && !plan_a.output.empty(),
           "plan output is byte-stable across runs");

    auto persuade_prior = run("persuade --graph " + fig2a + " --x e --y w --prior " + prior_we +
                              " --receiver naive");
    expect(persuade_prior.exit_code == 0 &&
               persuade_prior.output.find("\"disclosure\":[\"e\",\"t\",\"w\"]") !=
                   std::string::npos,
           "the campaign flips the selection prior by revealing tenure");

    if (g_failures) {
        std::cout << g_failures << " cli check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
