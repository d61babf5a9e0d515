#pragma once

#include "causalpersuade/world.hpp"

namespace cp {

struct ReceiverSpec {
    enum class Kind { naive, sophisticated };
    Kind kind = Kind::naive;
    // Pre-existing model over a subset of the truth's variables; must be
    // consistent with the data restricted to its variables.
    std::optional<Dag> prior;
};

struct Goal {
    enum class Mode { establish_direct, establish_ancestral, rule_out };
    VariableId x, y;
    Mode mode = Mode::establish_direct;
};

struct Plan {
    enum class Verdict { accepted, rejected, infeasible };
    std::vector<VariableId> disclosure;  // sorted
    std::optional<Dag> proposal;
    Verdict verdict = Verdict::infeasible;
    int new_variable_count = 0;
    std::vector<std::string> trace;
};

struct DebunkResult {
    bool debunked = false;
    // A prior link unsupportable in every consistent model, when one exists.
    std::optional<std::pair<VariableId, VariableId>> debunked_link;
};

struct AcceptResult {
    bool accepted = false;
    std::vector<std::string> trace;
};

// True iff no model consistent with the data restricted to the disclosure
// keeps every prior edge a -> b as an ancestral relation a => b.
DebunkResult debunks(const Dag& truth, const Dag& prior,
                     const std::vector<VariableId>& disclosure, const Budget& budget = {});

// The receiver's acceptance procedure. A receiver with a prior first requires
// the disclosure to debunk it. A naive receiver then accepts any consistent
// proposal; a sophisticated receiver additionally requires every link on
// every path between x and y in the proposal's skeleton to be uniquely
// consistent with the disclosed data.
AcceptResult receiver_accepts(const ReceiverSpec& receiver, const Plan& plan,
                              const Dag& truth, const Goal& goal, const Budget& budget = {});

Plan persuade_naive(const Dag& truth, const VariableId& x, const VariableId& y);

Plan persuade_sophisticated(const Dag& truth, const VariableId& x, const VariableId& y,
                            const Budget& budget = {}, bool truthful_only = false);

// Minimal disclosure that debunks the prior link a -> b; the proposal slot
// carries some consistent model on the disclosure when one exists (debunking
// alone may leave a variable set with no consistent model, which is flagged).
Plan plan_debunk(const Dag& truth, const Dag& prior,
                 const std::pair<VariableId, VariableId>& target_link,
                 const Budget& budget = {});

// Persuade the receiver that x and y are not causally connected: disclosures
// must contain a d-separating set; the proposal is the truth induced on the
// disclosure.
Plan plan_dissuade(const Dag& truth, const Dag& prior, const VariableId& x,
                   const VariableId& y, ReceiverSpec::Kind kind, const Budget& budget = {});

// Minimum-cardinality d-separating set, lexicographic tie-break; nullopt when
// none exists (in particular when x and y are adjacent).
std::optional<std::vector<VariableId>> minimal_dsep_set(const Dag& truth, const VariableId& x,
                                                        const VariableId& y);

// Naive-receiver deception: debunk some defective prior link while proposing
// a consistent (possibly defective) model achieving the goal.
Plan nitpick_search(const Dag& truth, const Dag& prior, const Goal& goal,
                    const Budget& budget = {}, bool truthful_only = false);

// Entry point used by the CLI: dispatches on receiver kind and prior.
Plan plan_persuade(const Dag& truth, const ReceiverSpec& receiver, const VariableId& x,
                   const VariableId& y, const Budget& budget = {}, bool truthful_only = false);

}  // namespace cp
