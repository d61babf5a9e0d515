#pragma once

#include "causalpersuade/graph.hpp"

namespace cp {
namespace fixtures {

// Catalog of canonical graphs. Parametric ids (fig12, fig15a) take n >= 1;
// emitting them without an explicit n uses n = 1.
std::vector<std::string> fixture_ids();
bool fixture_is_parametric(const std::string& id);
Dag build_fixture(const std::string& id, int n = 1);

// Deterministic generator: fixes a pseudo-random topological order and keeps
// each forward edge independently with probability edge_prob.
Dag random_dag(std::uint64_t seed, int n_vars, double edge_prob);

// All DAGs on exactly n nodes up to isomorphism (canonical labeling by
// minimum adjacency encoding over permutations), filtered to simple worlds.
// Guarded at n <= 5.
std::vector<Dag> enumerate_simple_dags(int max_n);

// Same enumeration without the simplicity filter; shares the guard.
std::vector<Dag> enumerate_dags_up_to_iso(int max_n);

}  // namespace fixtures
}  // namespace cp
