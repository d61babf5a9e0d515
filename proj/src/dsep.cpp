#include "causalpersuade/dsep.hpp"

namespace cp {

namespace {

void check_query(const Dag& g, int a, int b, Mask s) {
    if (a == b) throw InputError("d-separation query requires distinct endpoints");
    Mask ab = (Mask{1} << a) | (Mask{1} << b);
    if (s & ab) throw InputError("conditioning set must exclude the queried pair");
    (void)g;
}

}  // namespace

bool d_separates(const Dag& g, int a, int b, Mask s) {
    check_query(g, a, b, s);
    // Nodes whose conditioning can open a collider: s and its ancestors.
    Mask opens = s;
    for (Mask m = s; m; m &= m - 1) opens |= g.ancestor_mask(lowest_bit(m));

    // Trail walk over (node, arrived-from-child?) states.
    const int n = g.size();
    std::vector<char> seen_up(n, 0), seen_down(n, 0);
    std::vector<std::pair<int, bool>> stack;
    stack.emplace_back(a, true);  // leaving the source counts as arriving from a child
    while (!stack.empty()) {
        auto [v, up] = stack.back();
        stack.pop_back();
        auto& mark = up ? seen_up : seen_down;
        if (mark[v]) continue;
        mark[v] = 1;
        bool in_s = (s >> v) & 1;
        if (v == b) return false;
        if (up && !in_s) {
            for (Mask m = g.parents(v); m; m &= m - 1) stack.emplace_back(lowest_bit(m), true);
            for (Mask m = g.children(v); m; m &= m - 1) stack.emplace_back(lowest_bit(m), false);
        } else if (!up) {
            if (!in_s) {
                for (Mask m = g.children(v); m; m &= m - 1)
                    stack.emplace_back(lowest_bit(m), false);
            }
            if ((opens >> v) & 1) {
                for (Mask m = g.parents(v); m; m &= m - 1)
                    stack.emplace_back(lowest_bit(m), true);
            }
        }
    }
    return true;
}

bool d_separates(const Dag& g, const VariableId& a, const VariableId& b,
                 const std::vector<VariableId>& s) {
    return d_separates(g, g.index_of(a), g.index_of(b), g.mask_of(s));
}

IndependenceOracle::IndependenceOracle(Dag truth, Mask scope)
    : truth_(std::move(truth)), scope_(scope) {
    if (scope_ & ~truth_.full_mask())
        throw InputError("oracle scope contains unknown variables");
}

IndependenceOracle IndependenceOracle::full(Dag truth) {
    Mask all = truth.full_mask();
    return IndependenceOracle(std::move(truth), all);
}

bool IndependenceOracle::is_independent(int a, int b, Mask s) const {
    Mask ab = (Mask{1} << a) | (Mask{1} << b);
    if ((ab | s) & ~scope_)
        throw InputError("independence query outside the oracle scope");
    return d_separates(truth_, a, b, s);
}

bool IndependenceOracle::is_independent(const VariableId& a, const VariableId& b,
                                        const std::vector<VariableId>& s) const {
    return is_independent(truth_.index_of(a), truth_.index_of(b), truth_.mask_of(s));
}

IndependenceOracle IndependenceOracle::restrict(Mask new_scope) const {
    if (new_scope & ~scope_) throw InputError("restrict: new scope is not a subset");
    return IndependenceOracle(truth_, new_scope);
}

IndependenceOracle IndependenceOracle::restrict(
    const std::vector<VariableId>& new_scope) const {
    return restrict(truth_.mask_of(new_scope));
}

std::optional<Mask> IndependenceOracle::find_separating_set(int a, int b) const {
    Mask ab = (Mask{1} << a) | (Mask{1} << b);
    if (ab & ~scope_) throw InputError("separating-set query outside the oracle scope");
    Mask pool = scope_ & ~ab;
    std::optional<Mask> found;
    for_each_subset(pool, [&](Mask s) {
        if (d_separates(truth_, a, b, s)) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::vector<VariableId>> IndependenceOracle::find_separating_set(
    const VariableId& a, const VariableId& b) const {
    auto found = find_separating_set(truth_.index_of(a), truth_.index_of(b));
    if (!found) return std::nullopt;
    return truth_.names(*found);
}

}  // namespace cp
