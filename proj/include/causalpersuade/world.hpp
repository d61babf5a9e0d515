#pragma once

#include <array>
#include <optional>

#include "causalpersuade/ic.hpp"

namespace cp {

struct WorldProfile {
    bool simple = false;
    bool rich = false;
    // Collider triple (parent, center, parent) with correlated parents.
    std::optional<std::array<VariableId, 3>> witness_nonsimple;
    // Lexicographically first undirected edge of the full-scope pattern.
    std::optional<std::pair<VariableId, VariableId>> witness_nonrich;
};

struct CauseCatalog {
    VariableId x, y;
    std::vector<VariableId> obvious;
    std::vector<VariableId> nonobvious;
    std::vector<VariableId> confounders;
    // Set when x does not reach y, in which case nonobvious is empty by
    // definition and planners treat that route as unavailable.
    std::optional<std::string> nonobvious_note;
};

// Simple: every unshielded collider has uncorrelated parents.
bool is_simple(const Dag& g, std::optional<std::array<VariableId, 3>>* witness = nullptr);

// Rich: the true model is the only model consistent with its own full-scope
// data, i.e. the full-scope pattern is fully directed. Agrees with
// enumeration (tested).
bool is_rich(const Dag& g, const Budget& budget = {},
             std::optional<std::pair<VariableId, VariableId>>* witness = nullptr);

WorldProfile world_profile(const Dag& g, const Budget& budget = {});

// Model edges a -> b with no directed path a => b in the truth.
std::vector<std::pair<VariableId, VariableId>> defective_links(const Dag& model,
                                                               const Dag& truth);

// Ancestors of y (other than x) uncorrelated with x.
std::vector<VariableId> find_obvious_causes(const Dag& truth, const VariableId& x,
                                            const VariableId& y);

// Ancestors w of x with (w _||_ y | {x}). Requires x => y; otherwise returns
// empty and sets the note.
std::vector<VariableId> find_nonobvious_causes(const Dag& truth, const VariableId& x,
                                               const VariableId& y,
                                               std::optional<std::string>* note = nullptr);

// Variables with a y-avoiding directed path to x and an x-avoiding directed
// path to y.
std::vector<VariableId> find_confounders(const Dag& truth, const VariableId& x,
                                         const VariableId& y);

CauseCatalog cause_catalog(const Dag& truth, const VariableId& x, const VariableId& y);

}  // namespace cp
