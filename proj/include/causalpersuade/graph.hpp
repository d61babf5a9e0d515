#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cp {

// Variables are identified by name. Names must be non-empty tokens without
// whitespace or commas; comparison is case-sensitive byte equality.
using VariableId = std::string;

// Variable subsets are bitmasks over a graph's (sorted) variable order.
using Mask = std::uint64_t;

constexpr int kMaxVariables = 64;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, int limit)
        : std::runtime_error(what), limit_(limit) {}
    int limit() const { return limit_; }

private:
    int limit_;
};

enum class TripletKind { collider, chain, fork, not_a_triplet };

int popcount(Mask m);
int lowest_bit(Mask m);

// Enumerates subsets of `pool` in increasing cardinality, lexicographic on the
// ascending index sequence within each cardinality. Stops early when the
// callback returns true; returns whether it stopped.
bool for_each_subset(Mask pool, const std::function<bool(Mask)>& fn);

bool valid_variable_name(const VariableId& name);

// Acyclicity check over named edges; all endpoints must occur in `variables`.
bool is_acyclic(const std::vector<VariableId>& variables,
                const std::vector<std::pair<VariableId, VariableId>>& edges);

// Immutable directed acyclic graph over named variables. Variables are kept
// in lexicographic order so every derived listing is byte-reproducible.
// Construction validates names, membership, self-loops, duplicates and
// acyclicity; there is no partially-built state. Instances are safe to share
// across threads.
class Dag {
public:
    Dag() = default;
    Dag(std::vector<VariableId> variables,
        const std::vector<std::pair<VariableId, VariableId>>& edges);

    static Dag from_json(const std::string& text);
    std::string to_json() const;

    int size() const { return static_cast<int>(vars_.size()); }
    const std::vector<VariableId>& variables() const { return vars_; }
    Mask full_mask() const;

    bool has_variable(const VariableId& v) const;
    int index_of(const VariableId& v) const;  // throws InputError if unknown
    const VariableId& name(int i) const { return vars_[i]; }
    std::vector<VariableId> names(Mask m) const;
    Mask mask_of(const std::vector<VariableId>& vs) const;

    Mask parents(int i) const { return parents_[i]; }
    Mask children(int i) const { return children_[i]; }
    bool edge(int from, int to) const;
    bool edge(const VariableId& from, const VariableId& to) const;
    bool adjacent(int u, int v) const;
    int edge_count() const;
    std::vector<std::pair<VariableId, VariableId>> edges() const;  // sorted

    Mask ancestor_mask(int v) const;    // excludes v
    Mask descendant_mask(int v) const;  // excludes v
    std::vector<VariableId> ancestors(const VariableId& v) const;
    std::vector<VariableId> descendants(const VariableId& v) const;

    // Directed path test: u => v within `within` (u, v must be in `within`).
    bool reaches(int u, int v, Mask within) const;
    bool reaches(int u, int v) const;

    TripletKind classify_triplet(const VariableId& a, const VariableId& b,
                                 const VariableId& c) const;

    // Connected, or sharing a common ancestor. Equals "not d-separated by
    // the empty set".
    bool correlated(const VariableId& a, const VariableId& b) const;
    bool correlated(int a, int b) const;

    // Graph induced on the given variable subset.
    Dag induced(Mask keep) const;

    bool operator==(const Dag& other) const;

private:
    std::vector<VariableId> vars_;
    std::vector<Mask> parents_;
    std::vector<Mask> children_;
};

// Partially directed graph: the IC algorithm's output form. Directed and
// undirected edge sets are disjoint as adjacencies; no self-loops.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::vector<VariableId> variables);

    int size() const { return static_cast<int>(vars_.size()); }
    const std::vector<VariableId>& variables() const { return vars_; }
    int index_of(const VariableId& v) const;
    const VariableId& name(int i) const { return vars_[i]; }

    bool directed(int from, int to) const;
    bool undirected(int u, int v) const;
    bool adjacent(int u, int v) const;

    void add_directed(int from, int to);
    void add_undirected(int u, int v);
    // Orients an existing undirected edge; the edge must be present.
    void orient(int from, int to);

    Mask directed_parents(int i) const { return parents_[i]; }
    Mask directed_children(int i) const { return children_[i]; }
    Mask undirected_neighbors(int i) const { return neighbors_[i]; }

    int directed_count() const;
    int undirected_count() const;
    std::vector<std::pair<VariableId, VariableId>> directed_edges() const;
    std::vector<std::pair<VariableId, VariableId>> undirected_edges() const;
    bool fully_directed() const { return undirected_count() == 0; }

    bool operator==(const Pattern& other) const;

private:
    std::vector<VariableId> vars_;
    std::vector<Mask> parents_;
    std::vector<Mask> children_;
    std::vector<Mask> neighbors_;
};

std::string join_names(const std::vector<VariableId>& names);

}  // namespace cp
