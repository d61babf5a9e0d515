#include "causalpersuade/world.hpp"

#include <array>

namespace cp {

bool is_simple(const Dag& g, std::optional<std::array<VariableId, 3>>* witness) {
    const int n = g.size();
    for (int b = 0; b < n; ++b) {
        Mask pa = g.parents(b);
        for (Mask ma = pa; ma; ma &= ma - 1) {
            int a = lowest_bit(ma);
            for (Mask mc = ma & (ma - 1); mc; mc &= mc - 1) {
                int c = lowest_bit(mc);
                if (g.adjacent(a, c)) continue;
                if (g.correlated(a, c)) {
                    if (witness) *witness = std::array{g.name(a), g.name(b), g.name(c)};
                    return false;
                }
            }
        }
    }
    if (witness) *witness = std::nullopt;
    return true;
}

bool is_rich(const Dag& g, const Budget& budget,
             std::optional<std::pair<VariableId, VariableId>>* witness) {
    if (g.size() > budget.max_scope)
        throw BudgetError("graph too large for the richness check", budget.max_scope);
    PatternResult res = ic_algorithm(IndependenceOracle::full(g));
    if (res.pattern.fully_directed() && !res.conflict) {
        if (witness) *witness = std::nullopt;
        return true;
    }
    if (witness) {
        auto und = res.pattern.undirected_edges();
        *witness = und.empty() ? std::nullopt
                               : std::optional<std::pair<VariableId, VariableId>>(und.front());
    }
    return false;
}

WorldProfile world_profile(const Dag& g, const Budget& budget) {
    WorldProfile profile;
    profile.simple = is_simple(g, &profile.witness_nonsimple);
    profile.rich = is_rich(g, budget, &profile.witness_nonrich);
    return profile;
}

std::vector<std::pair<VariableId, VariableId>> defective_links(const Dag& model,
                                                               const Dag& truth) {
    for (const auto& v : model.variables())
        if (!truth.has_variable(v)) throw InputError("model variable unknown to truth: " + v);
    std::vector<std::pair<VariableId, VariableId>> out;
    for (const auto& [from, to] : model.edges()) {
        if (!truth.reaches(truth.index_of(from), truth.index_of(to))) out.emplace_back(from, to);
    }
    return out;
}

std::vector<VariableId> find_obvious_causes(const Dag& truth, const VariableId& x,
                                            const VariableId& y) {
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (ix == iy) throw InputError("obvious-cause query requires distinct variables");
    std::vector<VariableId> out;
    for (Mask m = truth.ancestor_mask(iy) & ~(Mask{1} << ix); m; m &= m - 1) {
        int z = lowest_bit(m);
        if (!truth.correlated(z, ix)) out.push_back(truth.name(z));
    }
    return out;
}

std::vector<VariableId> find_nonobvious_causes(const Dag& truth, const VariableId& x,
                                               const VariableId& y,
                                               std::optional<std::string>* note) {
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (ix == iy) throw InputError("non-obvious-cause query requires distinct variables");
    if (note) *note = std::nullopt;
    if (!truth.reaches(ix, iy)) {
        if (note) *note = "no-directed-path:" + x + "=>" + y;
        return {};
    }
    std::vector<VariableId> out;
    for (Mask m = truth.ancestor_mask(ix); m; m &= m - 1) {
        int w = lowest_bit(m);
        if (w == iy) continue;
        if (d_separates(truth, w, iy, Mask{1} << ix)) out.push_back(truth.name(w));
    }
    return out;
}

std::vector<VariableId> find_confounders(const Dag& truth, const VariableId& x,
                                         const VariableId& y) {
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (ix == iy) throw InputError("confounder query requires distinct variables");
    Mask avoid_y = truth.full_mask() & ~(Mask{1} << iy);
    Mask avoid_x = truth.full_mask() & ~(Mask{1} << ix);
    std::vector<VariableId> out;
    for (int c = 0; c < truth.size(); ++c) {
        if (c == ix || c == iy) continue;
        if (truth.reaches(c, ix, avoid_y) && truth.reaches(c, iy, avoid_x))
            out.push_back(truth.name(c));
    }
    return out;
}

CauseCatalog cause_catalog(const Dag& truth, const VariableId& x, const VariableId& y) {
    CauseCatalog catalog;
    catalog.x = x;
    catalog.y = y;
    catalog.obvious = find_obvious_causes(truth, x, y);
    catalog.nonobvious = find_nonobvious_causes(truth, x, y, &catalog.nonobvious_note);
    catalog.confounders = find_confounders(truth, x, y);
    return catalog;
}

}  // namespace cp
