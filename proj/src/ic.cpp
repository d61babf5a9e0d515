#include "causalpersuade/ic.hpp"

#include <algorithm>

namespace cp {

namespace {

// Pattern indices run over the sorted scope names; oracle queries need masks
// over the truth graph, hence the translation table.
struct ScopeView {
    std::vector<VariableId> names;
    std::vector<int> to_truth;

    explicit ScopeView(const IndependenceOracle& o) {
        names = o.scope_names();
        for (const auto& n : names) to_truth.push_back(o.truth().index_of(n));
    }
    int size() const { return static_cast<int>(names.size()); }
    Mask truth_mask(Mask scope_mask) const {
        Mask out = 0;
        for (Mask m = scope_mask; m; m &= m - 1) out |= Mask{1} << to_truth[lowest_bit(m)];
        return out;
    }
};

bool independent(const IndependenceOracle& o, const ScopeView& sv, int a, int b, Mask s) {
    return o.is_independent(sv.to_truth[a], sv.to_truth[b], sv.truth_mask(s));
}

std::string set_text(const std::vector<VariableId>& names) {
    return "{" + join_names(names) + "}";
}

}  // namespace

Pattern ic_skeleton(const IndependenceOracle& o) {
    if (o.scope_size() == 0) throw InputError("ic_skeleton requires a nonempty scope");
    ScopeView sv(o);
    Pattern skel(sv.names);
    const int n = sv.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto sep = o.find_separating_set(sv.to_truth[a], sv.to_truth[b]);
            if (!sep) skel.add_undirected(a, b);
        }
    }
    return skel;
}

PatternResult ic_orient_vstructures(const Pattern& skeleton, const IndependenceOracle& o) {
    ScopeView sv(o);
    PatternResult out;
    out.pattern = skeleton;
    Pattern& p = out.pattern;
    const int n = p.size();

    // Unshielded triples a-b-c (a < c by name), scanned in canonical order.
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            if (p.adjacent(a, c)) continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || b == c) continue;
                if (!p.adjacent(a, b) || !p.adjacent(b, c)) continue;
                // Search controls in (cardinality, lexicographic) order.
                Mask pool = 0;
                for (int i = 0; i < n; ++i)
                    if (i != a && i != b && i != c) pool |= Mask{1} << i;
                std::optional<Mask> controls;
                for_each_subset(pool, [&](Mask s) {
                    if (independent(o, sv, a, c, s) &&
                        !independent(o, sv, a, c, s | (Mask{1} << b))) {
                        controls = s;
                        return true;
                    }
                    return false;
                });
                if (!controls) continue;

                VStructureWitness w;
                w.parent_a = p.name(a);
                w.center = p.name(b);
                w.parent_c = p.name(c);
                for (Mask m = *controls; m; m &= m - 1) w.controls.push_back(p.name(lowest_bit(m)));
                w.direct = !o.find_separating_set(sv.to_truth[a], sv.to_truth[b]) &&
                           !o.find_separating_set(sv.to_truth[b], sv.to_truth[c]);
                out.vstructures.push_back(w);
                out.trace.push_back("v-structure: " + w.parent_a + " -> " + w.center +
                                    " <- " + w.parent_c + " (controls " +
                                    set_text(w.controls) + ")");
                if (!w.direct) {
                    out.trace.back() += " [indirect; not oriented]";
                    continue;
                }
                for (int parent : {a, c}) {
                    if (p.directed(parent, b)) continue;
                    if (p.directed(b, parent)) {
                        out.conflict = true;
                        out.conflicts.push_back({p.name(parent), p.name(b),
                                                 "v-structure demands " + p.name(parent) +
                                                     " -> " + p.name(b) +
                                                     " against existing orientation"});
                        out.trace.push_back("conflict: edge " + p.name(parent) + " - " +
                                            p.name(b) + " demanded in both directions");
                        continue;
                    }
                    p.orient(parent, b);
                }
            }
        }
    }
    return out;
}

namespace {

struct RuleFire {
    int rule;
    int from, to;
    std::string detail;
};

// Looks for a rule instance concluding x -> y over the undirected x-y edge.
std::optional<RuleFire> find_rule(const Pattern& p, int x, int y) {
    const int n = p.size();
    // R1: z -> x, x - y, z and y nonadjacent.
    for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (p.directed(z, x) && !p.adjacent(z, y))
            return RuleFire{1, x, y, "from " + p.name(z) + " -> " + p.name(x)};
    }
    // R2: x -> z -> y, x - y.
    for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (p.directed(x, z) && p.directed(z, y))
            return RuleFire{2, x, y, "via " + p.name(x) + " -> " + p.name(z) + " -> " + p.name(y)};
    }
    // R3: x - z, x - w, z -> y, w -> y, z and w nonadjacent.
    for (int z = 0; z < n; ++z) {
        if (z == x || z == y || !p.undirected(x, z) || !p.directed(z, y)) continue;
        for (int w = z + 1; w < n; ++w) {
            if (w == x || w == y || !p.undirected(x, w) || !p.directed(w, y)) continue;
            if (!p.adjacent(z, w))
                return RuleFire{3, x, y,
                                "parents " + p.name(z) + ", " + p.name(w) + " of " + p.name(y)};
        }
    }
    // R4: x - z, z -> w, w -> y, z and y nonadjacent, x and w adjacent.
    for (int z = 0; z < n; ++z) {
        if (z == x || z == y || !p.undirected(x, z)) continue;
        for (int w = 0; w < n; ++w) {
            if (w == x || w == y || w == z) continue;
            if (p.directed(z, w) && p.directed(w, y) && !p.adjacent(z, y) && p.adjacent(x, w))
                return RuleFire{4, x, y,
                                "chain " + p.name(z) + " -> " + p.name(w) + " -> " + p.name(y)};
        }
    }
    return std::nullopt;
}

}  // namespace

void meek_closure_in_place(PatternResult& state) {
    Pattern& p = state.pattern;
    const int n = p.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n && !changed; ++u) {
            for (Mask m = p.undirected_neighbors(u); m && !changed; m &= m - 1) {
                int v = lowest_bit(m);
                if (v < u) continue;
                auto forward = find_rule(p, u, v);
                auto backward = find_rule(p, v, u);
                if (forward && backward) {
                    // Both directions demanded at once: no consistent model
                    // exists downstream. Keep the first demand for diagnostics.
                    state.conflict = true;
                    state.conflicts.push_back(
                        {p.name(v), p.name(u),
                         "R" + std::to_string(backward->rule) + " demands the reverse of " +
                             p.name(u) + " -> " + p.name(v)});
                    state.trace.push_back("conflict: edge " + p.name(u) + " - " + p.name(v) +
                                          " demanded in both directions");
                }
                auto fire = forward ? forward : backward;
                if (fire) {
                    p.orient(fire->from, fire->to);
                    state.trace.push_back("R" + std::to_string(fire->rule) + ": " +
                                          p.name(fire->from) + " -> " + p.name(fire->to) +
                                          " (" + fire->detail + ")");
                    changed = true;
                }
            }
        }
    }
}

PatternResult meek_closure(const Pattern& p) {
    PatternResult state;
    state.pattern = p;
    meek_closure_in_place(state);
    return state;
}

PatternResult ic_algorithm(const IndependenceOracle& o) {
    Pattern skel = ic_skeleton(o);
    PatternResult state = ic_orient_vstructures(skel, o);
    meek_closure_in_place(state);
    return state;
}

namespace {

// Markov, in its local form: each variable is independent of every
// non-descendant non-parent given its parents. Equivalent to checking all of
// the model's d-separations because both relations are DAG-generated.
std::optional<std::tuple<VariableId, VariableId, std::vector<VariableId>>> markov_violation(
    const Dag& model, const IndependenceOracle& o, const ScopeView& sv) {
    const int n = model.size();
    for (int a = 0; a < n; ++a) {
        Mask pa = model.parents(a);
        Mask skip = pa | model.descendant_mask(a) | (Mask{1} << a);
        for (int b = 0; b < n; ++b) {
            if ((skip >> b) & 1) continue;
            if (!independent(o, sv, a, b, pa))
                return std::tuple{model.name(a), model.name(b), model.names(pa)};
        }
    }
    return std::nullopt;
}

}  // namespace

ConsistencyVerdict is_consistent(const Dag& model, const IndependenceOracle& o) {
    ScopeView sv(o);
    if (model.variables() != sv.names)
        throw InputError("is_consistent: model variables must equal the oracle scope");
    ConsistencyVerdict verdict;
    verdict.violated_markov = markov_violation(model, o, sv);
    if (verdict.violated_markov) return verdict;
    for (const auto& [from, to] : model.edges()) {
        auto sep = o.find_separating_set(sv.to_truth[model.index_of(from)],
                                         sv.to_truth[model.index_of(to)]);
        if (sep) {
            verdict.violated_minimality = {{from, to}, o.truth().names(*sep)};
            return verdict;
        }
    }
    verdict.consistent = true;
    return verdict;
}

namespace {

// Depth-first orientation of the pattern's undirected edges. Prunes branches
// that create an unshielded collider; acyclicity and full consistency are
// checked on complete assignments.
struct Extender {
    const PatternResult& base;
    const IndependenceOracle& oracle;
    ScopeView sv;
    std::vector<std::pair<int, int>> und;
    std::vector<Mask> parents;  // pattern-space, accumulated
    std::vector<Dag> found;
    bool stop_at_first = false;

    Extender(const PatternResult& base_in, const IndependenceOracle& o)
        : base(base_in), oracle(o), sv(o) {
        const Pattern& p = base.pattern;
        parents.assign(p.size(), 0);
        for (int i = 0; i < p.size(); ++i) parents[i] = p.directed_parents(i);
        for (int u = 0; u < p.size(); ++u)
            for (Mask m = p.undirected_neighbors(u); m; m &= m - 1) {
                int v = lowest_bit(m);
                if (u < v) und.emplace_back(u, v);
            }
    }

    bool creates_unshielded_collider(int from, int to) const {
        const Pattern& p = base.pattern;
        for (Mask m = parents[to] & ~(Mask{1} << from); m; m &= m - 1) {
            int w = lowest_bit(m);
            if (!p.adjacent(w, from)) return true;
        }
        return false;
    }

    bool acyclic() const {
        const int n = static_cast<int>(parents.size());
        Mask removed = 0;
        for (int round = 0; round < n; ++round)
            for (int i = 0; i < n; ++i)
                if (!((removed >> i) & 1) && (parents[i] & ~removed) == 0) removed |= Mask{1} << i;
        return popcount(removed) == n;
    }

    bool step(size_t k) {
        if (k == und.size()) {
            if (!acyclic()) return false;
            const Pattern& p = base.pattern;
            std::vector<std::pair<VariableId, VariableId>> edges;
            for (int v = 0; v < p.size(); ++v)
                for (Mask m = parents[v]; m; m &= m - 1)
                    edges.emplace_back(p.name(lowest_bit(m)), p.name(v));
            Dag candidate(p.variables(), edges);
            // Minimality holds structurally: the skeleton equals the set of
            // never-separable pairs. Only Markov can fail.
            if (!markov_violation(candidate, oracle, sv)) {
                found.push_back(std::move(candidate));
                if (stop_at_first) return true;
            }
            return false;
        }
        auto [u, v] = und[k];
        for (auto [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
            if (creates_unshielded_collider(from, to)) continue;
            parents[to] |= Mask{1} << from;
            bool done = step(k + 1);
            parents[to] &= ~(Mask{1} << from);
            if (done) return true;
        }
        return false;
    }
};

void check_budget(const IndependenceOracle& o, const Budget& budget) {
    if (o.scope_size() > budget.max_scope)
        throw BudgetError("scope size " + std::to_string(o.scope_size()) +
                              " exceeds the enumeration budget " +
                              std::to_string(budget.max_scope),
                          budget.max_scope);
}

}  // namespace

std::vector<Dag> enumerate_consistent_dags(const IndependenceOracle& o, const Budget& budget) {
    check_budget(o, budget);
    PatternResult res = ic_algorithm(o);
    if (res.pattern.undirected_count() > budget.max_undirected)
        throw BudgetError("pattern has " + std::to_string(res.pattern.undirected_count()) +
                              " undirected edges, over the budget " +
                              std::to_string(budget.max_undirected),
                          budget.max_undirected);
    Extender ext(res, o);
    ext.step(0);
    std::sort(ext.found.begin(), ext.found.end(),
              [](const Dag& a, const Dag& b) { return a.edges() < b.edges(); });
    return ext.found;
}

IcSummary::IcSummary(const IndependenceOracle& o, const Budget& budget) {
    check_budget(o, budget);
    result_ = ic_algorithm(o);
    if (result_.pattern.undirected_count() > budget.max_undirected)
        throw BudgetError("pattern exceeds the undirected-edge budget", budget.max_undirected);
    // One extension decides existence: when the consistent set is nonempty the
    // pattern is exact and every no-new-collider extension is consistent.
    Extender ext(result_, o);
    ext.stop_at_first = true;
    ext.step(0);
    if (!ext.found.empty()) {
        has_consistent_ = true;
        first_model_ = ext.found.front();
    }
}

bool IcSummary::uniquely_consistent(const VariableId& a, const VariableId& b) const {
    if (result_.conflict || !has_consistent_) return false;
    const Pattern& p = result_.pattern;
    return p.directed(p.index_of(a), p.index_of(b));
}

bool uniquely_consistent_link(const IndependenceOracle& o, const VariableId& a,
                              const VariableId& b, const Budget& budget) {
    IcSummary summary(o, budget);
    return summary.uniquely_consistent(a, b);
}

}  // namespace cp
