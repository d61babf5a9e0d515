#include "doctest.h"

#include <map>
#include <set>

#include "brute.hpp"
#include "causalpersuade/fixtures.hpp"
#include "causalpersuade/ic.hpp"

using namespace cp;
using cp::fixtures::build_fixture;
using cp::fixtures::random_dag;

namespace {

using Edge = std::pair<VariableId, VariableId>;
using EdgeList = std::vector<Edge>;

IndependenceOracle oracle_of(const Dag& g) { return IndependenceOracle::full(g); }

IndependenceOracle oracle_of(const Dag& g, const std::vector<VariableId>& scope) {
    return IndependenceOracle::full(g).restrict(scope);
}

std::vector<EdgeList> edge_lists(const std::vector<Dag>& models) {
    std::vector<EdgeList> out;
    for (const auto& m : models) out.push_back(m.edges());
    return out;
}

std::set<std::tuple<VariableId, VariableId, VariableId>> unshielded_colliders(const Dag& g) {
    std::set<std::tuple<VariableId, VariableId, VariableId>> out;
    for (int b = 0; b < g.size(); ++b)
        for (Mask ma = g.parents(b); ma; ma &= ma - 1) {
            int a = lowest_bit(ma);
            for (Mask mc = ma & (ma - 1); mc; mc &= mc - 1) {
                int c = lowest_bit(mc);
                if (!g.adjacent(a, c)) out.insert({g.name(a), g.name(b), g.name(c)});
            }
        }
    return out;
}

}  // namespace

TEST_CASE("skeleton recovery") {
    Dag chain = build_fixture("fig4a");
    Pattern skel = ic_skeleton(oracle_of(chain));
    CHECK(skel.undirected_edges() == EdgeList{{"a", "b"}, {"b", "c"}});

    Dag fig6a = build_fixture("fig6a");
    Pattern skel6 = ic_skeleton(oracle_of(fig6a));
    CHECK(skel6.undirected_edges() ==
          EdgeList{{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});

    Dag two({"a", "b"}, {});
    CHECK(ic_skeleton(oracle_of(two)).undirected_edges().empty());
}

TEST_CASE("v-structure orientation on the rectangle fixture") {
    Dag fig6a = build_fixture("fig6a");
    auto oracle = oracle_of(fig6a);
    PatternResult res = ic_orient_vstructures(ic_skeleton(oracle), oracle);
    REQUIRE(res.vstructures.size() == 1);
    const auto& v = res.vstructures.front();
    CHECK(v.parent_a == "b");
    CHECK(v.center == "d");
    CHECK(v.parent_c == "c");
    CHECK(v.controls == std::vector<VariableId>{"a"});
    CHECK(v.direct);
    CHECK_FALSE(res.conflict);
    CHECK(res.pattern.directed_edges() == EdgeList{{"b", "d"}, {"c", "d"}});
}

TEST_CASE("no v-structures in a chain") {
    Dag chain = build_fixture("fig4a");
    auto oracle = oracle_of(chain);
    PatternResult res = ic_orient_vstructures(ic_skeleton(oracle), oracle);
    CHECK(res.vstructures.empty());
    CHECK(res.pattern.directed_count() == 0);
}

TEST_CASE("restricted scope finds the d->b<-a v-structure with control c") {
    Dag fig7a = build_fixture("fig7a");
    auto oracle = oracle_of(fig7a, {"a", "b", "c", "d"});
    PatternResult res = ic_orient_vstructures(ic_skeleton(oracle), oracle);
    REQUIRE(!res.vstructures.empty());
    const auto& v = res.vstructures.front();
    CHECK(v.parent_a == "a");
    CHECK(v.center == "b");
    CHECK(v.parent_c == "d");
    CHECK(v.controls == std::vector<VariableId>{"c"});
    CHECK(res.pattern.directed(res.pattern.index_of("a"), res.pattern.index_of("b")));
    CHECK(res.pattern.directed(res.pattern.index_of("d"), res.pattern.index_of("b")));
    // the second v-structure demands the reverse of a -> b
    CHECK(res.conflict);
    REQUIRE(!res.conflicts.empty());
}

TEST_CASE("meek closure on the rectangle: one rule fires on d-e, another on a-d") {
    Dag fig6a = build_fixture("fig6a");
    auto oracle = oracle_of(fig6a);
    PatternResult step2 = ic_orient_vstructures(ic_skeleton(oracle), oracle);
    PatternResult closed = meek_closure(step2.pattern);
    CHECK(closed.pattern.directed_edges() ==
          EdgeList{{"a", "d"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
    CHECK(closed.pattern.undirected_edges() == EdgeList{{"a", "b"}, {"a", "c"}});
    bool saw_r1 = false, saw_r3 = false;
    for (const auto& line : closed.trace) {
        if (line.rfind("R1: d -> e", 0) == 0) saw_r1 = true;
        if (line.rfind("R3: a -> d", 0) == 0) saw_r3 = true;
    }
    CHECK(saw_r1);
    CHECK(saw_r3);
}

TEST_CASE("meek closure records opposing rule demands as a conflict") {
    // u -> p and v -> q both fire on the undirected p - q edge
    Pattern p({"p", "q", "u", "v"});
    p.add_directed(p.index_of("u"), p.index_of("p"));
    p.add_directed(p.index_of("v"), p.index_of("q"));
    p.add_undirected(p.index_of("p"), p.index_of("q"));
    PatternResult closed = meek_closure(p);
    CHECK(closed.conflict);
    REQUIRE(!closed.conflicts.empty());
    CHECK(closed.pattern.fully_directed());  // first demand still applied
}

TEST_CASE("ic_algorithm flags the no-consistent-model subset") {
    Dag fig7a = build_fixture("fig7a");
    PatternResult res = ic_algorithm(oracle_of(fig7a, {"a", "b", "c", "d"}));
    CHECK(res.conflict);
    CHECK(res.pattern.directed(res.pattern.index_of("d"), res.pattern.index_of("b")));
}

TEST_CASE("meek closure leaves an all-undirected chain pattern unchanged") {
    Pattern p({"a", "b", "c"});
    p.add_undirected(p.index_of("a"), p.index_of("b"));
    p.add_undirected(p.index_of("b"), p.index_of("c"));
    PatternResult closed = meek_closure(p);
    CHECK(closed.pattern == p);
    CHECK(closed.trace.empty());
}

TEST_CASE("meek closure is idempotent and monotone on sampled patterns") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Dag g = random_dag(seed, 3 + static_cast<int>(seed % 5), 0.4);
        auto oracle = oracle_of(g);
        PatternResult step2 = ic_orient_vstructures(ic_skeleton(oracle), oracle);
        PatternResult once = meek_closure(step2.pattern);
        PatternResult twice = meek_closure(once.pattern);
        CHECK(once.pattern == twice.pattern);
        CHECK(twice.trace.empty());
        for (const auto& e : step2.pattern.directed_edges()) {
            CHECK(once.pattern.directed(once.pattern.index_of(e.first),
                                        once.pattern.index_of(e.second)));
        }
        CHECK(once.pattern.directed_count() >= step2.pattern.directed_count());
    }
}

TEST_CASE("ic_algorithm golden outputs") {
    Dag fig6a = build_fixture("fig6a");
    PatternResult res = ic_algorithm(oracle_of(fig6a));
    CHECK(res.pattern.directed_edges() == EdgeList{{"a", "d"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
    CHECK(res.pattern.undirected_edges() == EdgeList{{"a", "b"}, {"a", "c"}});
    CHECK_FALSE(res.conflict);

    Dag fig2a = build_fixture("fig2a");
    PatternResult campaign = ic_algorithm(oracle_of(fig2a, {"e", "w", "t"}));
    CHECK(campaign.pattern.directed_edges() == EdgeList{{"e", "w"}, {"t", "w"}});
    CHECK(campaign.pattern.undirected_count() == 0);
    CHECK_FALSE(campaign.conflict);

    Dag single({"a"}, {});
    PatternResult empty = ic_algorithm(oracle_of(single));
    CHECK(empty.pattern.directed_count() == 0);
    CHECK(empty.pattern.undirected_count() == 0);
}

TEST_CASE("consistency verdicts") {
    Dag chain = build_fixture("fig4a");
    auto oracle = oracle_of(chain);
    CHECK(is_consistent(chain, oracle).consistent);

    Dag reverse({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}});
    Dag fork({"a", "b", "c"}, {{"b", "a"}, {"b", "c"}});
    CHECK(is_consistent(reverse, oracle).consistent);
    CHECK(is_consistent(fork, oracle).consistent);

    Dag collider({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
    CHECK_FALSE(is_consistent(collider, oracle).consistent);

    Dag fig7a = build_fixture("fig7a");
    Dag fig7b({"a", "b", "c", "d"}, {{"a", "b"}, {"d", "b"}, {"b", "c"}, {"d", "c"}});
    auto v7 = is_consistent(fig7b, oracle_of(fig7a, {"a", "b", "c", "d"}));
    CHECK_FALSE(v7.consistent);
    REQUIRE(v7.violated_markov);
    CHECK(std::get<0>(*v7.violated_markov) == "a");
    CHECK(std::get<1>(*v7.violated_markov) == "d");
    CHECK(std::get<2>(*v7.violated_markov).empty());

    CHECK_THROWS_AS(is_consistent(chain, oracle_of(build_fixture("fig2a"))), InputError);
}

TEST_CASE("minimality violations are caught and reported") {
    Dag truth({"a", "b"}, {});
    Dag model({"a", "b"}, {{"a", "b"}});
    auto verdict = is_consistent(model, oracle_of(truth));
    CHECK_FALSE(verdict.consistent);
    REQUIRE(verdict.violated_minimality);
    CHECK(verdict.violated_minimality->first == Edge{"a", "b"});
}

TEST_CASE("enumeration golden outputs") {
    Dag chain = build_fixture("fig4a");
    auto models = enumerate_consistent_dags(oracle_of(chain));
    REQUIRE(models.size() == 3);
    CHECK(edge_lists(models) == std::vector<EdgeList>{{{"a", "b"}, {"b", "c"}},
                                                      {{"b", "a"}, {"b", "c"}},
                                                      {{"b", "a"}, {"c", "b"}}});

    Dag fig7a = build_fixture("fig7a");
    CHECK(enumerate_consistent_dags(oracle_of(fig7a, {"a", "b", "c", "d"})).empty());

    Dag collider({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
    auto only = enumerate_consistent_dags(oracle_of(collider));
    REQUIRE(only.size() == 1);
    CHECK(only.front() == collider);
}

TEST_CASE("enumeration budget is an explicit error") {
    Dag chain = build_fixture("fig4a");
    Budget tiny;
    tiny.max_scope = 2;
    CHECK_THROWS_AS(enumerate_consistent_dags(oracle_of(chain), tiny), BudgetError);
}

TEST_CASE("enumeration agrees with the brute-force route") {
    std::vector<std::pair<Dag, std::vector<VariableId>>> cases;
    cases.push_back({build_fixture("fig7a"), {"a", "b", "c", "d"}});
    cases.push_back({build_fixture("fig4a"), {"a", "b", "c"}});
    cases.push_back({build_fixture("fig2a"), {"e", "t", "w"}});
    cases.push_back({build_fixture("fig2a"), {"a", "e", "w"}});
    cases.push_back({build_fixture("fig8c"), {"a", "b", "c", "d"}});
    cases.push_back({build_fixture("fig11a"), {"w", "x", "y", "z"}});
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Dag g = random_dag(seed, 4, 0.5);
        cases.push_back({g, g.variables()});
    }
    for (const auto& [g, scope] : cases) {
        auto oracle = oracle_of(g, scope);
        auto fast = enumerate_consistent_dags(oracle);
        auto slow = brute::enumerate_consistent(g, g.mask_of(scope));
        CAPTURE(g.to_json());
        CHECK(edge_lists(fast) == edge_lists(slow));
    }
}

TEST_CASE("the truth is always among its own consistent models") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Dag g = random_dag(seed, 2 + static_cast<int>(seed % 5), 0.45);
        auto models = enumerate_consistent_dags(oracle_of(g));
        bool found = false;
        for (const auto& m : models) found = found || m == g;
        CHECK(found);
    }
}

TEST_CASE("all members share the skeleton and the unshielded colliders") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Dag g = random_dag(seed, 3 + static_cast<int>(seed % 4), 0.45);
        auto models = enumerate_consistent_dags(oracle_of(g));
        REQUIRE(!models.empty());
        auto skeleton = [](const Dag& d) {
            std::set<std::pair<VariableId, VariableId>> out;
            for (auto [u, v] : d.edges()) out.insert({std::min(u, v), std::max(u, v)});
            return out;
        };
        auto base_skel = skeleton(models.front());
        auto base_coll = unshielded_colliders(models.front());
        for (const auto& m : models) {
            CHECK(skeleton(m) == base_skel);
            CHECK(unshielded_colliders(m) == base_coll);
        }
    }
}

TEST_CASE("pattern output is invariant under variable renaming") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Dag g = random_dag(seed, 5, 0.4);
        std::map<VariableId, VariableId> rename;
        for (int i = 0; i < g.size(); ++i)
            rename[g.name(i)] = "w" + std::to_string(g.size() - 1 - i);
        std::vector<VariableId> vars;
        std::vector<Edge> edges;
        for (const auto& v : g.variables()) vars.push_back(rename[v]);
        for (const auto& [u, v] : g.edges()) edges.push_back({rename[u], rename[v]});
        Dag relabeled(vars, edges);

        PatternResult a = ic_algorithm(oracle_of(g));
        PatternResult b = ic_algorithm(oracle_of(relabeled));
        auto mapped = [&](EdgeList list) {
            for (auto& [u, v] : list) {
                u = rename[u];
                v = rename[v];
            }
            std::sort(list.begin(), list.end());
            return list;
        };
        auto norm = [&](EdgeList list) {
            for (auto& [u, v] : list)
                if (v < u) std::swap(u, v);
            std::sort(list.begin(), list.end());
            return list;
        };
        CHECK(mapped(a.pattern.directed_edges()) == b.pattern.directed_edges());
        CHECK(norm(mapped(a.pattern.undirected_edges())) == norm(b.pattern.undirected_edges()));
    }
}

TEST_CASE("uniquely consistent links: golden cases") {
    Dag chain = build_fixture("fig4a");
    CHECK_FALSE(uniquely_consistent_link(oracle_of(chain), "a", "b"));

    Dag fig2a = build_fixture("fig2a");
    CHECK(uniquely_consistent_link(oracle_of(fig2a, {"e", "t", "w"}), "e", "w"));

    Dag fig7a = build_fixture("fig7a");
    auto subset = oracle_of(fig7a, {"a", "b", "c", "d"});
    CHECK_FALSE(uniquely_consistent_link(subset, "a", "b"));
    CHECK_FALSE(uniquely_consistent_link(subset, "d", "b"));
    CHECK_FALSE(uniquely_consistent_link(subset, "b", "c"));
}

TEST_CASE("fast path agrees with enumeration across scopes") {
    auto sweep = [](const Dag& g, bool all_subsets) {
        Mask all = g.full_mask();
        for_each_subset(all, [&](Mask scope) {
            if (popcount(scope) < 2) return false;
            if (!all_subsets && scope != all) return false;
            auto oracle = IndependenceOracle::full(g).restrict(scope);
            IcSummary summary(oracle);
            auto models = enumerate_consistent_dags(oracle);
            auto names = g.names(scope);
            for (const auto& u : names)
                for (const auto& v : names) {
                    if (u == v) continue;
                    bool ground = !models.empty();
                    if (ground)
                        for (const auto& m : models) ground = ground && m.edge(u, v);
                    CAPTURE(g.to_json());
                    CAPTURE(u);
                    CAPTURE(v);
                    CHECK(summary.uniquely_consistent(u, v) == ground);
                }
            return false;
        });
    };
    // every unlabeled 4-node world with every scope down to pairs
    for (const Dag& g : cp::fixtures::enumerate_dags_up_to_iso(4)) sweep(g, true);
    // every unlabeled 5-node world with every scope down to pairs
    for (const Dag& g : cp::fixtures::enumerate_dags_up_to_iso(5)) sweep(g, true);
    // random 6-node worlds at full scope
    for (std::uint64_t seed = 0; seed < 25; ++seed) sweep(random_dag(seed, 6, 0.4), false);
    // random 4-5 node worlds over all scopes
    for (std::uint64_t seed = 0; seed < 12; ++seed)
        sweep(random_dag(seed + 100, 4 + static_cast<int>(seed % 2), 0.45), true);
}
