// Command-line front end. All graph work goes through the C API in
// causalpersuade.h; this file only handles argument parsing, file I/O and
// output formatting.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "causalpersuade.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

struct GraphHandle {
    cp_graph* ptr = nullptr;
    ~GraphHandle() { cp_graph_free(ptr); }
};

struct CString {
    char* ptr = nullptr;
    ~CString() { cp_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die(cp_status status) {
    std::cerr << "error: " << cp_last_error() << "\n";
    std::exit(status == CP_ERR_BUDGET ? kExitBudget : kExitInput);
}

void require_ok(cp_status status) {
    if (status != CP_OK) die(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitInput);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void load_graph(const std::string& path, GraphHandle& out) {
    require_ok(cp_graph_parse(read_file(path).c_str(), &out.ptr));
}

int default_budget() {
    if (const char* env = std::getenv("CP_BUDGET")) {
        try {
            return std::stoi(env);
        } catch (...) {
            std::cerr << "error: CP_BUDGET is not an integer\n";
            std::exit(kExitInput);
        }
    }
    return 12;
}

std::string graph_dot(const json& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& e : g.at("edges")) out << "  " << e[0].get<std::string>() << " -> "
                                            << e[1].get<std::string>() << ";\n";
    out << "}";
    return out.str();
}

std::string pattern_dot(const json& p) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& e : p.at("directed")) out << "  " << e[0].get<std::string>() << " -> "
                                               << e[1].get<std::string>() << ";\n";
    for (const auto& e : p.at("undirected")) out << "  " << e[0].get<std::string>() << " -- "
                                                 << e[1].get<std::string>() << ";\n";
    out << "}";
    return out.str();
}

std::string graph_human(const json& g) {
    std::ostringstream out;
    bool first = true;
    for (const auto& e : g.at("edges")) {
        if (!first) out << "; ";
        out << e[0].get<std::string>() << " -> " << e[1].get<std::string>();
        first = false;
    }
    if (first) out << "(no edges)";
    return out.str();
}

void print_plan(const std::string& plan_text, const std::string& format) {
    json plan = json::parse(plan_text);
    if (format == "json") {
        std::cout << plan.dump() << "\n";
    } else if (format == "dot") {
        if (plan.at("proposal").is_null())
            std::cout << "digraph {\n}\n";
        else
            std::cout << graph_dot(plan["proposal"]) << "\n";
    } else {
        std::cout << "verdict: " << plan.at("verdict").get<std::string>() << "\n";
        std::cout << "disclosure: ";
        bool first = true;
        for (const auto& v : plan.at("disclosure")) {
            if (!first) std::cout << ", ";
            std::cout << v.get<std::string>();
            first = false;
        }
        if (first) std::cout << "(none)";
        std::cout << "\n";
        std::cout << "proposal: "
                  << (plan.at("proposal").is_null() ? "(none)" : graph_human(plan["proposal"]))
                  << "\n";
        std::cout << "new variables: " << plan.at("new_variables").get<int>() << "\n";
        std::cout << "reasoning:\n";
        int step = 1;
        for (const auto& line : plan.at("trace"))
            std::cout << "  " << step++ << ". " << line.get<std::string>() << "\n";
    }
    std::string verdict = plan.at("verdict").get<std::string>();
    std::exit(verdict == "accepted" ? kExitOk : kExitInfeasible);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal model discovery and persuasion planning"};
    app.set_version_flag("--version", std::string(cp_version()));
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "json";
    app.add_option("--output", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "human"}))
        ->capture_default_str();

    const int env_budget = default_budget();

    // dsep
    std::string graph_path, a_var, b_var, given;
    auto* dsep = app.add_subcommand("dsep", "test d-separation in a graph");
    dsep->add_option("--graph", graph_path)->required();
    dsep->add_option("--a", a_var)->required();
    dsep->add_option("--b", b_var)->required();
    dsep->add_option("--given", given, "comma-separated conditioning set");

    // cpdag
    std::string scope;
    int budget = env_budget;
    auto* cpdag = app.add_subcommand("cpdag", "run the discovery algorithm, print the pattern");
    cpdag->add_option("--graph", graph_path)->required();
    cpdag->add_option("--scope", scope, "comma-separated disclosed variables");
    cpdag->add_option("--budget", budget);

    auto* enumerate = app.add_subcommand("enumerate", "print every consistent model");
    enumerate->add_option("--graph", graph_path)->required();
    enumerate->add_option("--scope", scope);
    enumerate->add_option("--budget", budget);

    std::string pair;
    auto* analyze = app.add_subcommand("analyze", "world profile and cause catalog");
    analyze->add_option("--graph", graph_path)->required();
    analyze->add_option("--pair", pair, "x,y pair for the cause catalog");
    analyze->add_option("--budget", budget);

    std::string x_var, y_var, receiver = "naive", prior_path, link;
    bool truthful_only = false;
    auto* persuade = app.add_subcommand("persuade", "plan a persuasive disclosure");
    persuade->add_option("--graph", graph_path)->required();
    persuade->add_option("--x", x_var)->required();
    persuade->add_option("--y", y_var)->required();
    persuade->add_option("--receiver", receiver)
        ->required()
        ->check(CLI::IsMember({"naive", "sophisticated"}));
    persuade->add_option("--prior", prior_path, "receiver's pre-existing model");
    persuade->add_flag("--truthful-only", truthful_only, "forbid defective proposals");
    persuade->add_option("--budget", budget);

    auto* debunk = app.add_subcommand("debunk", "plan a minimal debunking disclosure");
    debunk->add_option("--graph", graph_path)->required();
    debunk->add_option("--prior", prior_path)->required();
    debunk->add_option("--link", link, "prior link A,B to debunk")->required();
    debunk->add_option("--budget", budget);

    auto* dissuade = app.add_subcommand("dissuade", "persuade that no causal link exists");
    dissuade->add_option("--graph", graph_path)->required();
    dissuade->add_option("--prior", prior_path)->required();
    dissuade->add_option("--x", x_var)->required();
    dissuade->add_option("--y", y_var)->required();
    dissuade->add_option("--receiver", receiver)
        ->required()
        ->check(CLI::IsMember({"naive", "sophisticated"}));
    dissuade->add_option("--budget", budget);

    bool list_fixtures = false;
    std::string emit_id;
    int emit_n = 1;
    auto* fixtures = app.add_subcommand("fixtures", "canonical graphs from the catalog");
    fixtures->add_flag("--list", list_fixtures);
    fixtures->add_option("--emit", emit_id, "fixture id to print");
    fixtures->add_option("--n", emit_n, "parameter for parametric fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitInput;
    }

    if (dsep->parsed()) {
        GraphHandle g;
        load_graph(graph_path, g);
        int result = 0;
        require_ok(cp_dsep(g.ptr, a_var.c_str(), b_var.c_str(), given.c_str(), &result));
        std::cout << (result ? "true" : "false") << "\n";
        return kExitOk;
    }

    if (cpdag->parsed()) {
        GraphHandle g;
        load_graph(graph_path, g);
        CString out;
        require_ok(cp_cpdag(g.ptr, scope.c_str(), budget, &out.ptr));
        if (format == "dot")
            std::cout << pattern_dot(json::parse(out.str())) << "\n";
        else
            std::cout << out.str() << "\n";
        return kExitOk;
    }

    if (enumerate->parsed()) {
        GraphHandle g;
        load_graph(graph_path, g);
        CString out;
        require_ok(cp_enumerate(g.ptr, scope.c_str(), budget, &out.ptr));
        json doc = json::parse(out.str());
        for (const auto& model : doc.at("models")) {
            if (format == "dot")
                std::cout << graph_dot(model) << "\n";
            else if (format == "human")
                std::cout << graph_human(model) << "\n";
            else
                std::cout << model.dump() << "\n";
        }
        return kExitOk;
    }

    if (analyze->parsed()) {
        GraphHandle g;
        load_graph(graph_path, g);
        std::string x, y;
        if (!pair.empty()) {
            auto comma = pair.find(',');
            if (comma == std::string::npos) {
                std::cerr << "error: --pair expects x,y\n";
                return kExitInput;
            }
            x = pair.substr(0, comma);
            y = pair.substr(comma + 1);
        }
        CString out;
        require_ok(cp_analyze(g.ptr, pair.empty() ? nullptr : x.c_str(),
                              pair.empty() ? nullptr : y.c_str(), budget, &out.ptr));
        std::cout << out.str() << "\n";
        return kExitOk;
    }

    if (persuade->parsed()) {
        GraphHandle g, prior;
        load_graph(graph_path, g);
        if (!prior_path.empty()) load_graph(prior_path, prior);
        CString out;
        require_ok(cp_persuade(g.ptr, prior.ptr, x_var.c_str(), y_var.c_str(),
                               receiver == "sophisticated", truthful_only, budget, &out.ptr));
        print_plan(out.str(), format);
    }

    if (debunk->parsed()) {
        GraphHandle g, prior;
        load_graph(graph_path, g);
        load_graph(prior_path, prior);
        auto comma = link.find(',');
        if (comma == std::string::npos) {
            std::cerr << "error: --link expects A,B\n";
            return kExitInput;
        }
        CString out;
        require_ok(cp_debunk(g.ptr, prior.ptr, link.substr(0, comma).c_str(),
                             link.substr(comma + 1).c_str(), budget, &out.ptr));
        print_plan(out.str(), format);
    }

    if (dissuade->parsed()) {
        GraphHandle g, prior;
        load_graph(graph_path, g);
        load_graph(prior_path, prior);
        CString out;
        require_ok(cp_dissuade(g.ptr, prior.ptr, x_var.c_str(), y_var.c_str(),
                               receiver == "sophisticated", budget, &out.ptr));
        print_plan(out.str(), format);
    }

    if (fixtures->parsed()) {
        if (list_fixtures) {
            CString out;
            require_ok(cp_fixture_list(&out.ptr));
            std::cout << out.str();
            return kExitOk;
        }
        if (emit_id.empty()) {
            std::cerr << "error: fixtures needs --list or --emit <id>\n";
            return kExitInput;
        }
        GraphHandle g;
        require_ok(cp_graph_fixture(emit_id.c_str(), emit_n, &g.ptr));
        CString out;
        require_ok(cp_graph_to_json(g.ptr, &out.ptr));
        if (format == "dot")
            std::cout << graph_dot(json::parse(out.str())) << "\n";
        else
            std::cout << out.str() << "\n";
        return kExitOk;
    }

    return kExitOk;
}
