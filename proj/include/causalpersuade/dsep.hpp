#pragma once

#include <optional>

#include "causalpersuade/graph.hpp"

namespace cp {

// d-separation by active-trail reachability. True iff every undirected path
// between a and b is blocked: a non-collider on the path lies in s, or some
// collider on the path has neither itself nor a descendant in s.
bool d_separates(const Dag& g, int a, int b, Mask s);
bool d_separates(const Dag& g, const VariableId& a, const VariableId& b,
                 const std::vector<VariableId>& s);

// Conditional-independence oracle backed by the true model's d-separation
// relation. The scope restricts which queries are legal; answers depend only
// on the truth. Immutable; queries are pure and may run concurrently.
class IndependenceOracle {
public:
    IndependenceOracle(Dag truth, Mask scope);
    static IndependenceOracle full(Dag truth);

    const Dag& truth() const { return truth_; }
    Mask scope() const { return scope_; }
    std::vector<VariableId> scope_names() const { return truth_.names(scope_); }
    int scope_size() const { return popcount(scope_); }
    bool in_scope(int v) const { return (scope_ >> v) & 1; }

    bool is_independent(int a, int b, Mask s) const;
    bool is_independent(const VariableId& a, const VariableId& b,
                        const std::vector<VariableId>& s) const;

    IndependenceOracle restrict(Mask new_scope) const;
    IndependenceOracle restrict(const std::vector<VariableId>& new_scope) const;

    // Lexicographically-first minimum-cardinality S within the scope with
    // (a _||_ b | S); nullopt iff no subset separates.
    std::optional<Mask> find_separating_set(int a, int b) const;
    std::optional<std::vector<VariableId>> find_separating_set(
        const VariableId& a, const VariableId& b) const;

private:
    Dag truth_;
    Mask scope_;
};

}  // namespace cp
