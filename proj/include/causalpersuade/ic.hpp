#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "causalpersuade/dsep.hpp"
#include "causalpersuade/graph.hpp"

namespace cp {

// Hard ceilings for the exhaustive machinery. Exceeding a ceiling is an
// explicit BudgetError, never silent truncation.
struct Budget {
    int max_scope = 12;
    int max_undirected = 20;
};

struct VStructureWitness {
    VariableId parent_a;  // lexicographically first parent
    VariableId center;
    VariableId parent_c;
    std::vector<VariableId> controls;
    bool direct = false;
};

struct OrientationConflict {
    VariableId from;
    VariableId to;  // demanded orientation that contradicted an existing edge
    std::string reason;
};

struct PatternResult {
    Pattern pattern;
    bool conflict = false;
    std::vector<VStructureWitness> vstructures;
    std::vector<OrientationConflict> conflicts;
    std::vector<std::string> trace;
};

struct ConsistencyVerdict {
    bool consistent = false;
    // (a, b, S): the model separates a,b given S but the data does not.
    std::optional<std::tuple<VariableId, VariableId, std::vector<VariableId>>> violated_markov;
    // (edge, S): the model keeps the edge but S separates its endpoints.
    std::optional<std::pair<std::pair<VariableId, VariableId>, std::vector<VariableId>>>
        violated_minimality;
};

// Step 1: undirected link between a,b iff no subset of the scope separates them.
Pattern ic_skeleton(const IndependenceOracle& o);

// Step 2: orient every direct V-structure found over unshielded skeleton
// triples. Conflicting demands on one edge are recorded, not overwritten.
PatternResult ic_orient_vstructures(const Pattern& skeleton, const IndependenceOracle& o);

// Step 3: least fixed point of orientation rules R1-R4. Never re-orients a
// directed edge; a rule demanding the reverse of one is recorded as a conflict.
PatternResult meek_closure(const Pattern& p);
void meek_closure_in_place(PatternResult& state);

// Steps 1-3 composed; deterministic for a given oracle.
PatternResult ic_algorithm(const IndependenceOracle& o);

// Markov plus minimality against the oracle. Model variables must equal the
// oracle scope. The first violated triple (variables in lexicographic order)
// is reported.
ConsistencyVerdict is_consistent(const Dag& model, const IndependenceOracle& o);

// Exactly the DAGs on the scope consistent with the oracle: acyclic
// orientations of the pattern's undirected edges that add no unshielded
// collider, filtered through is_consistent. Deterministically ordered.
std::vector<Dag> enumerate_consistent_dags(const IndependenceOracle& o,
                                           const Budget& budget = {});

// Cached single-oracle analysis: pattern plus whether any consistent model
// exists. A link is uniquely consistent iff it is directed in a conflict-free
// pattern and the consistent set is nonempty.
class IcSummary {
public:
    IcSummary(const IndependenceOracle& o, const Budget& budget = {});

    const PatternResult& result() const { return result_; }
    bool has_consistent_model() const { return has_consistent_; }
    bool uniquely_consistent(const VariableId& a, const VariableId& b) const;
    std::optional<Dag> first_consistent_model() const { return first_model_; }

private:
    PatternResult result_;
    bool has_consistent_ = false;
    std::optional<Dag> first_model_;
};

bool uniquely_consistent_link(const IndependenceOracle& o, const VariableId& a,
                              const VariableId& b, const Budget& budget = {});

}  // namespace cp
