#include "causalpersuade.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"

#include "causalpersuade/fixtures.hpp"
#include "causalpersuade/planner.hpp"

using nlohmann::json;

struct cp_graph {
    cp::Dag dag;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cp_status fail(cp_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
cp_status guarded(Fn&& fn) {
    try {
        fn();
        return CP_OK;
    } catch (const cp::BudgetError& e) {
        return fail(CP_ERR_BUDGET, e.what());
    } catch (const cp::InputError& e) {
        return fail(CP_ERR_INPUT, e.what());
    } catch (const std::exception& e) {
        return fail(CP_ERR_INTERNAL, e.what());
    }
}

std::vector<cp::VariableId> split_list(const char* text) {
    std::vector<cp::VariableId> out;
    if (!text) return out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

cp::IndependenceOracle scoped_oracle(const cp::Dag& g, const char* scope) {
    auto oracle = cp::IndependenceOracle::full(g);
    auto names = split_list(scope);
    if (names.empty()) return oracle;
    return oracle.restrict(names);
}

json graph_json(const cp::Dag& g) { return json::parse(g.to_json()); }

json plan_json(const cp::Plan& plan) {
    json doc;
    doc["disclosure"] = plan.disclosure;
    doc["proposal"] = plan.proposal ? graph_json(*plan.proposal) : json(nullptr);
    switch (plan.verdict) {
        case cp::Plan::Verdict::accepted: doc["verdict"] = "accepted"; break;
        case cp::Plan::Verdict::rejected: doc["verdict"] = "rejected"; break;
        case cp::Plan::Verdict::infeasible: doc["verdict"] = "infeasible"; break;
    }
    doc["new_variables"] = plan.new_variable_count;
    doc["trace"] = plan.trace;
    return doc;
}

cp::Budget make_budget(int budget) {
    cp::Budget b;
    if (budget > 0) b.max_scope = budget;
    if (b.max_scope < 2) throw cp::InputError("budget must be at least 2");
    return b;
}

}  // namespace

extern "C" {

const char* cp_version(void) { return "1.0.0"; }

const char* cp_last_error(void) { return g_last_error.c_str(); }

void cp_string_free(char* s) { std::free(s); }

cp_status cp_graph_parse(const char* text, cp_graph** out) {
    if (!text || !out) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] { *out = new cp_graph{cp::Dag::from_json(text)}; });
}

cp_status cp_graph_fixture(const char* id, int n, cp_graph** out) {
    if (!id || !out) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] { *out = new cp_graph{cp::fixtures::build_fixture(id, n)}; });
}

cp_status cp_graph_to_json(const cp_graph* g, char** out_json) {
    if (!g || !out_json) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] { *out_json = dup_string(g->dag.to_json()); });
}

void cp_graph_free(cp_graph* g) { delete g; }

cp_status cp_dsep(const cp_graph* g, const char* a, const char* b, const char* given,
                  int* out) {
    if (!g || !a || !b || !out) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] { *out = cp::d_separates(g->dag, a, b, split_list(given)) ? 1 : 0; });
}

cp_status cp_cpdag(const cp_graph* g, const char* scope, int budget, char** out_json) {
    if (!g || !out_json) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] {
        auto b = make_budget(budget);
        auto oracle = scoped_oracle(g->dag, scope);
        if (oracle.scope_size() > b.max_scope)
            throw cp::BudgetError("scope exceeds the budget", b.max_scope);
        cp::PatternResult res = cp::ic_algorithm(oracle);
        json doc;
        auto pairs = json::array();
        for (const auto& [from, to] : res.pattern.directed_edges()) pairs.push_back({from, to});
        doc["directed"] = std::move(pairs);
        pairs = json::array();
        for (const auto& [u, v] : res.pattern.undirected_edges()) pairs.push_back({u, v});
        doc["undirected"] = std::move(pairs);
        doc["conflict"] = res.conflict;
        *out_json = dup_string(doc.dump());
    });
}

cp_status cp_enumerate(const cp_graph* g, const char* scope, int budget, char** out_json) {
    if (!g || !out_json) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] {
        auto oracle = scoped_oracle(g->dag, scope);
        auto models = cp::enumerate_consistent_dags(oracle, make_budget(budget));
        json doc;
        doc["models"] = json::array();
        for (const auto& m : models) doc["models"].push_back(graph_json(m));
        *out_json = dup_string(doc.dump());
    });
}

cp_status cp_analyze(const cp_graph* g, const char* x, const char* y, int budget,
                     char** out_json) {
    if (!g || !out_json) return fail(CP_ERR_INPUT, "null argument");
    if (!!x != !!y) return fail(CP_ERR_INPUT, "analyze needs both pair variables or neither");
    return guarded([&] {
        cp::WorldProfile profile = cp::world_profile(g->dag, make_budget(budget));
        json doc;
        doc["simple"] = profile.simple;
        doc["rich"] = profile.rich;
        doc["witness_nonsimple"] =
            profile.witness_nonsimple
                ? json({(*profile.witness_nonsimple)[0], (*profile.witness_nonsimple)[1],
                        (*profile.witness_nonsimple)[2]})
                : json(nullptr);
        doc["witness_nonrich"] =
            profile.witness_nonrich
                ? json({profile.witness_nonrich->first, profile.witness_nonrich->second})
                : json(nullptr);
        if (x && y) {
            cp::CauseCatalog causes = cp::cause_catalog(g->dag, x, y);
            json c;
            c["target"] = {causes.x, causes.y};
            c["obvious"] = causes.obvious;
            c["nonobvious"] = causes.nonobvious;
            c["confounders"] = causes.confounders;
            if (causes.nonobvious_note) c["nonobvious_note"] = *causes.nonobvious_note;
            doc["causes"] = std::move(c);
        }
        *out_json = dup_string(doc.dump());
    });
}

cp_status cp_persuade(const cp_graph* truth, const cp_graph* prior, const char* x,
                      const char* y, int sophisticated, int truthful_only, int budget,
                      char** out_json) {
    if (!truth || !x || !y || !out_json) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] {
        cp::ReceiverSpec receiver;
        receiver.kind = sophisticated ? cp::ReceiverSpec::Kind::sophisticated
                                      : cp::ReceiverSpec::Kind::naive;
        if (prior) receiver.prior = prior->dag;
        cp::Plan plan = cp::plan_persuade(truth->dag, receiver, x, y, make_budget(budget),
                                          truthful_only != 0);
        *out_json = dup_string(plan_json(plan).dump());
    });
}

cp_status cp_debunk(const cp_graph* truth, const cp_graph* prior, const char* link_from,
                    const char* link_to, int budget, char** out_json) {
    if (!truth || !prior || !link_from || !link_to || !out_json)
        return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] {
        cp::Plan plan = cp::plan_debunk(truth->dag, prior->dag, {link_from, link_to},
                                        make_budget(budget));
        *out_json = dup_string(plan_json(plan).dump());
    });
}

cp_status cp_dissuade(const cp_graph* truth, const cp_graph* prior, const char* x,
                      const char* y, int sophisticated, int budget, char** out_json) {
    if (!truth || !prior || !x || !y || !out_json) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] {
        auto kind = sophisticated ? cp::ReceiverSpec::Kind::sophisticated
                                  : cp::ReceiverSpec::Kind::naive;
        cp::Plan plan = cp::plan_dissuade(truth->dag, prior->dag, x, y, kind,
                                          make_budget(budget));
        *out_json = dup_string(plan_json(plan).dump());
    });
}

cp_status cp_fixture_list(char** out) {
    if (!out) return fail(CP_ERR_INPUT, "null argument");
    return guarded([&] {
        std::string text;
        for (const auto& id : cp::fixtures::fixture_ids()) {
            text += id;
            if (cp::fixtures::fixture_is_parametric(id)) text += "(n)";
            text += "\n";
        }
        *out = dup_string(text);
    });
}

}  // extern "C"
