#include "causalpersuade/planner.hpp"

#include <algorithm>
#include <set>

namespace cp {

namespace {

std::string set_text(const std::vector<VariableId>& names) {
    return "{" + join_names(names) + "}";
}

bool preserves_prior(const Dag& model, const Dag& prior) {
    for (const auto& [from, to] : prior.edges()) {
        if (!model.reaches(model.index_of(from), model.index_of(to))) return false;
    }
    return true;
}

bool satisfies_goal(const Dag& model, const Goal& goal) {
    int x = model.index_of(goal.x);
    int y = model.index_of(goal.y);
    switch (goal.mode) {
        case Goal::Mode::establish_direct:
            return model.edge(x, y);
        case Goal::Mode::establish_ancestral:
            return model.reaches(x, y);
        case Goal::Mode::rule_out:
            return !model.adjacent(x, y) && !model.reaches(x, y) && !model.reaches(y, x);
    }
    return false;
}

// All simple paths between x and y in the proposal's skeleton; every link on
// each must be uniquely consistent (in the proposal's orientation) for a
// sophisticated receiver.
bool paths_uniquely_consistent(const Dag& proposal, const IcSummary& summary,
                               const VariableId& x, const VariableId& y,
                               std::string* failing_link) {
    int ix = proposal.index_of(x);
    int iy = proposal.index_of(y);
    const int n = proposal.size();
    std::vector<int> path{ix};
    Mask on_path = Mask{1} << ix;
    bool ok = true;
    std::function<void(int)> dfs = [&](int u) {
        if (!ok) return;
        if (u == iy) {
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                int p = path[i], q = path[i + 1];
                int from = proposal.edge(p, q) ? p : q;
                int to = proposal.edge(p, q) ? q : p;
                if (!summary.uniquely_consistent(proposal.name(from), proposal.name(to))) {
                    ok = false;
                    if (failing_link)
                        *failing_link = proposal.name(from) + " -> " + proposal.name(to);
                    return;
                }
            }
            return;
        }
        for (int v = 0; v < n && ok; ++v) {
            if ((on_path >> v) & 1) continue;
            if (!proposal.adjacent(u, v)) continue;
            path.push_back(v);
            on_path |= Mask{1} << v;
            dfs(v);
            path.pop_back();
            on_path &= ~(Mask{1} << v);
        }
    };
    dfs(ix);
    return ok;
}

DebunkResult debunk_over_models(const std::vector<Dag>& models, const Dag& prior) {
    DebunkResult out;
    out.debunked = std::none_of(models.begin(), models.end(), [&](const Dag& m) {
        return preserves_prior(m, prior);
    });
    if (out.debunked) {
        for (const auto& [from, to] : prior.edges()) {
            bool dead_everywhere =
                std::none_of(models.begin(), models.end(), [&](const Dag& m) {
                    return m.reaches(m.index_of(from), m.index_of(to));
                });
            if (dead_everywhere) {
                out.debunked_link = {from, to};
                break;
            }
        }
    }
    return out;
}

Mask disclosure_mask(const Dag& truth, const std::vector<VariableId>& disclosure) {
    return truth.mask_of(disclosure);
}

void check_prior(const Dag& truth, const Dag& prior) {
    for (const auto& v : prior.variables())
        if (!truth.has_variable(v)) throw InputError("prior variable unknown to truth: " + v);
    auto oracle = IndependenceOracle::full(truth).restrict(truth.mask_of(prior.variables()));
    if (!is_consistent(prior, oracle).consistent)
        throw InputError("prior model is not consistent with the data on its variables");
}

struct SearchContext {
    const Dag& truth;
    std::optional<Dag> prior;
    ReceiverSpec::Kind kind;
    Goal goal;
    bool truthful_only;
    Budget budget;
};

// Evaluates one disclosure: enumerate the consistent models, require the
// prior debunked (when present), pick the first goal-satisfying proposal, and
// apply the receiver's acceptance rule. Returns an accepted Plan or nothing.
std::optional<Plan> try_disclosure(const SearchContext& ctx, Mask mask,
                                   const std::string& route) {
    const Dag& truth = ctx.truth;
    auto oracle = IndependenceOracle::full(truth).restrict(mask);
    auto models = enumerate_consistent_dags(oracle, ctx.budget);
    if (models.empty()) return std::nullopt;

    DebunkResult debunk;
    if (ctx.prior) {
        debunk = debunk_over_models(models, *ctx.prior);
        if (!debunk.debunked) return std::nullopt;
    }

    const Dag* proposal = nullptr;
    for (const Dag& m : models) {
        if (!satisfies_goal(m, ctx.goal)) continue;
        if (ctx.truthful_only && !defective_links(m, truth).empty()) continue;
        proposal = &m;
        break;
    }
    if (!proposal) return std::nullopt;

    IcSummary summary(oracle, ctx.budget);
    if (ctx.kind == ReceiverSpec::Kind::sophisticated) {
        std::string failing;
        if (!paths_uniquely_consistent(*proposal, summary, ctx.goal.x, ctx.goal.y, &failing))
            return std::nullopt;
    }

    Plan plan;
    plan.disclosure = truth.names(mask);
    plan.proposal = *proposal;
    plan.verdict = Plan::Verdict::accepted;
    int base = ctx.prior ? ctx.prior->size() : 2;
    plan.new_variable_count = popcount(mask) - base;
    if (!route.empty()) plan.trace.push_back("route: " + route);
    plan.trace.push_back("disclosure: " + set_text(plan.disclosure));
    if (ctx.prior) {
        plan.trace.push_back(debunk.debunked_link
                                 ? "debunked link: " + debunk.debunked_link->first + " -> " +
                                       debunk.debunked_link->second
                                 : "prior debunked (no single link unsupported everywhere)");
    }
    // what the receiver works out from the disclosed data
    for (const auto& line : summary.result().trace) plan.trace.push_back(line);
    return plan;
}

// Disclosure supersets of `base` within the truth, by size then lexicographic
// index order. Returns the first accepted plan.
std::optional<Plan> search_supersets(const SearchContext& ctx, Mask base,
                                     const std::string& route) {
    Mask pool = ctx.truth.full_mask() & ~base;
    std::optional<Plan> found;
    for_each_subset(pool, [&](Mask extra) {
        found = try_disclosure(ctx, base | extra, route);
        return found.has_value();
    });
    return found;
}

Plan infeasible_plan(std::vector<std::string> trace) {
    Plan plan;
    plan.verdict = Plan::Verdict::infeasible;
    plan.trace = std::move(trace);
    return plan;
}

}  // namespace

DebunkResult debunks(const Dag& truth, const Dag& prior,
                     const std::vector<VariableId>& disclosure, const Budget& budget) {
    Mask mask = disclosure_mask(truth, disclosure);
    for (const auto& v : prior.variables()) {
        if (!truth.has_variable(v) || !((mask >> truth.index_of(v)) & 1))
            throw InputError("prior variable " + v + " is not part of the disclosure");
    }
    auto oracle = IndependenceOracle::full(truth).restrict(mask);
    auto models = enumerate_consistent_dags(oracle, budget);
    return debunk_over_models(models, prior);
}

AcceptResult receiver_accepts(const ReceiverSpec& receiver, const Plan& plan,
                              const Dag& truth, const Goal& goal, const Budget& budget) {
    AcceptResult out;
    Mask mask = disclosure_mask(truth, plan.disclosure);
    Mask xy = (Mask{1} << truth.index_of(goal.x)) | (Mask{1} << truth.index_of(goal.y));
    if ((xy & mask) != xy) throw InputError("disclosure must contain both variables of interest");
    if (receiver.prior) {
        auto d = debunks(truth, *receiver.prior, plan.disclosure, budget);
        if (!d.debunked) {
            out.trace.push_back("rejected: the prior model remains consistent with the disclosure");
            return out;
        }
        out.trace.push_back(d.debunked_link ? "prior debunked at link " + d.debunked_link->first +
                                                  " -> " + d.debunked_link->second
                                            : "prior debunked");
    }
    if (!plan.proposal) {
        out.trace.push_back("rejected: no proposed model");
        return out;
    }
    auto oracle = IndependenceOracle::full(truth).restrict(mask);
    auto verdict = is_consistent(*plan.proposal, oracle);
    if (!verdict.consistent) {
        out.trace.push_back("rejected: proposal inconsistent with the disclosed data");
        return out;
    }
    if (receiver.kind == ReceiverSpec::Kind::sophisticated) {
        IcSummary summary(oracle, budget);
        std::string failing;
        if (!paths_uniquely_consistent(*plan.proposal, summary, goal.x, goal.y, &failing)) {
            out.trace.push_back("rejected: link " + failing + " is not uniquely consistent");
            return out;
        }
        out.trace.push_back("all links on all " + goal.x + "-" + goal.y +
                            " paths uniquely consistent");
    }
    out.accepted = true;
    out.trace.push_back("accepted");
    return out;
}

Plan persuade_naive(const Dag& truth, const VariableId& x, const VariableId& y) {
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (ix == iy) throw InputError("persuasion requires distinct variables");
    if (!truth.correlated(ix, iy))
        return infeasible_plan({x + " and " + y +
                                " are uncorrelated; no consistent model can link them"});
    Plan plan;
    plan.disclosure = truth.names((Mask{1} << ix) | (Mask{1} << iy));
    plan.proposal = Dag({x, y}, {{x, y}});
    plan.verdict = Plan::Verdict::accepted;
    plan.new_variable_count = 0;
    plan.trace = {"route: bare correlation", "disclosure: " + set_text(plan.disclosure),
                  "naive receiver accepts any consistent model"};
    return plan;
}

Plan persuade_sophisticated(const Dag& truth, const VariableId& x, const VariableId& y,
                            const Budget& budget, bool truthful_only) {
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (ix == iy) throw InputError("persuasion requires distinct variables");
    if (truth.size() > budget.max_scope)
        throw BudgetError("truth exceeds the search budget", budget.max_scope);
    if (!truth.correlated(ix, iy))
        return infeasible_plan({x + " and " + y +
                                " are uncorrelated; no consistent model can link them"});
    if (truth.reaches(iy, ix) && is_simple(truth))
        return infeasible_plan({"the truth runs " + y + " => " + x + " in a simple world; " + x +
                                " -> " + y + " is never uniquely consistent"});

    SearchContext ctx{truth,
                      std::nullopt,
                      ReceiverSpec::Kind::sophisticated,
                      Goal{x, y, Goal::Mode::establish_direct},
                      truthful_only,
                      budget};
    Mask xy = (Mask{1} << ix) | (Mask{1} << iy);

    // Targeted constructions first: an obvious cause; two independent
    // non-obvious causes; a non-obvious cause with an independent confounder.
    std::vector<std::pair<Mask, std::string>> candidates;
    for (const auto& z : find_obvious_causes(truth, x, y))
        candidates.push_back({xy | (Mask{1} << truth.index_of(z)), "obvious cause " + z});
    auto nonobv = find_nonobvious_causes(truth, x, y);
    for (size_t i = 0; i < nonobv.size(); ++i)
        for (size_t j = i + 1; j < nonobv.size(); ++j)
            if (!truth.correlated(nonobv[i], nonobv[j]))
                candidates.push_back({xy | (Mask{1} << truth.index_of(nonobv[i])) |
                                          (Mask{1} << truth.index_of(nonobv[j])),
                                      "non-obvious causes " + nonobv[i] + ", " + nonobv[j]});
    for (const auto& w : nonobv)
        for (const auto& c : find_confounders(truth, x, y))
            if (c != w && !truth.correlated(c, w))
                candidates.push_back(
                    {xy | (Mask{1} << truth.index_of(w)) | (Mask{1} << truth.index_of(c)),
                     "non-obvious cause " + w + " with confounder " + c});

    std::optional<Plan> best;
    for (const auto& [mask, route] : candidates) {
        best = try_disclosure(ctx, mask, route);
        if (best) break;
    }
    if (best) {
        // The construction gives an upper bound; confirm nothing smaller works.
        int size = static_cast<int>(best->disclosure.size());
        std::optional<Plan> smaller;
        Mask pool = truth.full_mask() & ~xy;
        for_each_subset(pool, [&](Mask extra) {
            if (popcount(extra) + 2 >= size) return true;
            smaller = try_disclosure(ctx, xy | extra, "exhaustive search");
            return smaller.has_value();
        });
        return smaller ? *smaller : *best;
    }
    auto found = search_supersets(ctx, xy, "exhaustive search");
    return found ? *found
                 : infeasible_plan({"no disclosure within the truth makes " + x + " -> " + y +
                                    " uniquely consistent"});
}

Plan plan_debunk(const Dag& truth, const Dag& prior,
                 const std::pair<VariableId, VariableId>& target_link, const Budget& budget) {
    check_prior(truth, prior);
    const auto& [a, b] = target_link;
    if (!prior.edge(a, b)) throw InputError("target link " + a + " -> " + b + " is not in the prior");
    if (truth.size() > budget.max_scope)
        throw BudgetError("truth exceeds the search budget", budget.max_scope);

    bool defective = !truth.reaches(truth.index_of(a), truth.index_of(b));
    if (!defective && is_simple(truth))
        return infeasible_plan({"link " + a + " -> " + b +
                                " holds in the truth and the world is simple; it can never be "
                                "debunked"});

    Mask base = truth.mask_of(prior.variables());
    Mask pool = truth.full_mask() & ~base;

    // Targeted single and pair reveals, tried before same-size subsets.
    // The roles flip relative to the prior edge: debunking a -> b means
    // proving b's real influence on a.
    std::vector<std::pair<Mask, std::string>> shortcuts;
    for (const auto& z : find_obvious_causes(truth, b, a)) {
        Mask zm = Mask{1} << truth.index_of(z);
        if (zm & pool) shortcuts.push_back({zm, "obvious cause " + z + " of " + a});
    }
    if (truth.reaches(truth.index_of(b), truth.index_of(a))) {
        auto nonobv = find_nonobvious_causes(truth, b, a);
        for (const auto& w : nonobv) {
            for (const auto& c : find_confounders(truth, b, a)) {
                if (c == w || truth.correlated(c, w)) continue;
                if (!truth.edge(c, b)) continue;  // confounder among b's parents
                Mask m = (Mask{1} << truth.index_of(w)) | (Mask{1} << truth.index_of(c));
                shortcuts.push_back({m & pool, "non-obvious cause " + w + " with confounder " + c});
            }
        }
        // Parents of a direct V-structure upstream from b.
        int ib = truth.index_of(b);
        Mask upstream = truth.ancestor_mask(ib) | (Mask{1} << ib);
        for (Mask mm = upstream; mm; mm &= mm - 1) {
            int center = lowest_bit(mm);
            Mask pa = truth.parents(center) & truth.ancestor_mask(ib);
            for (Mask mp = pa; mp; mp &= mp - 1) {
                int p = lowest_bit(mp);
                for (Mask mq = mp & (mp - 1); mq; mq &= mq - 1) {
                    int q = lowest_bit(mq);
                    if (truth.adjacent(p, q)) continue;
                    Mask m = (Mask{1} << p) | (Mask{1} << q);
                    shortcuts.push_back({m & pool, "v-structure parents " + truth.name(p) + ", " +
                                                       truth.name(q) + " upstream of " + b});
                }
            }
        }
    }

    auto attempt = [&](Mask extra) -> std::optional<DebunkResult> {
        auto oracle = IndependenceOracle::full(truth).restrict(base | extra);
        auto models = enumerate_consistent_dags(oracle, budget);
        auto d = debunk_over_models(models, prior);
        if (d.debunked) return d;
        return std::nullopt;
    };

    std::optional<Mask> winner;
    std::optional<DebunkResult> result;
    std::string route = "exhaustive search";
    std::set<Mask> tried;
    int pool_size = popcount(pool);
    for (int size = 1; size <= pool_size && !winner; ++size) {
        for (const auto& [extra, r] : shortcuts) {
            if (popcount(extra) != size || tried.count(extra)) continue;
            tried.insert(extra);
            if (auto d = attempt(extra)) {
                winner = extra;
                result = d;
                route = r;
                break;
            }
        }
        if (winner) break;
        for_each_subset(pool, [&](Mask extra) {
            if (popcount(extra) < size) return false;
            if (popcount(extra) > size) return true;
            if (tried.count(extra)) return false;
            tried.insert(extra);
            if (auto d = attempt(extra)) {
                winner = extra;
                result = d;
                return true;
            }
            return false;
        });
    }
    if (!winner)
        return infeasible_plan({"no disclosure debunks " + a + " -> " + b});

    Plan plan;
    plan.verdict = Plan::Verdict::accepted;
    plan.disclosure = truth.names(base | *winner);
    plan.new_variable_count = popcount(*winner);
    plan.trace.push_back("route: " + route);
    plan.trace.push_back("disclosure: " + set_text(plan.disclosure));
    if (result->debunked_link)
        plan.trace.push_back("debunked link: " + result->debunked_link->first + " -> " +
                             result->debunked_link->second);
    auto oracle = IndependenceOracle::full(truth).restrict(base | *winner);
    for (const auto& line : ic_algorithm(oracle).trace) plan.trace.push_back(line);
    auto models = enumerate_consistent_dags(oracle, budget);
    if (!models.empty()) {
        plan.proposal = models.front();
    } else {
        plan.trace.push_back("no consistent model exists on this disclosure");
        // Report the smallest disclosure that debunks and still admits a model.
        std::optional<Mask> fix;
        for_each_subset(pool, [&](Mask extra) {
            auto o2 = IndependenceOracle::full(truth).restrict(base | extra);
            auto ms = enumerate_consistent_dags(o2, budget);
            if (ms.empty()) return false;
            if (!debunk_over_models(ms, prior).debunked) return false;
            fix = extra;
            return true;
        });
        if (fix)
            plan.trace.push_back("smallest debunking disclosure with a consistent model: " +
                                 set_text(truth.names(base | *fix)));
    }
    return plan;
}

Plan plan_dissuade(const Dag& truth, const Dag& prior, const VariableId& x,
                   const VariableId& y, ReceiverSpec::Kind kind, const Budget& budget) {
    check_prior(truth, prior);
    if (!prior.edge(x, y) && !prior.edge(y, x))
        throw InputError("prior does not contain a link between " + x + " and " + y);
    if (truth.size() > budget.max_scope)
        throw BudgetError("truth exceeds the search budget", budget.max_scope);
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (truth.adjacent(ix, iy))
        return infeasible_plan({x + " and " + y +
                                " are adjacent in the truth; no set of variables d-separates "
                                "them"});

    Mask base = truth.mask_of(prior.variables()) | (Mask{1} << ix) | (Mask{1} << iy);
    Mask pool = truth.full_mask() & ~base;
    Goal goal{x, y, Goal::Mode::rule_out};
    std::vector<std::string> attempts;

    std::optional<Plan> found;
    for_each_subset(pool, [&](Mask extra) {
        Mask mask = base | extra;
        auto oracle = IndependenceOracle::full(truth).restrict(mask);
        if (!oracle.find_separating_set(ix, iy)) return false;  // x,y inseparable here
        Dag proposal = truth.induced(mask);
        auto models = enumerate_consistent_dags(oracle, budget);
        if (models.empty()) return false;
        auto d = debunk_over_models(models, prior);
        std::string tag = set_text(truth.names(extra));
        if (!d.debunked) {
            if (attempts.size() < 6)
                attempts.push_back("rejected +" + tag +
                                   ": prior survives (a consistent extension keeps it)");
            return false;
        }
        if (!is_consistent(proposal, oracle).consistent) {
            if (attempts.size() < 6)
                attempts.push_back("rejected +" + tag + ": induced truth inconsistent here");
            return false;
        }
        if (!satisfies_goal(proposal, goal)) {
            if (attempts.size() < 6)
                attempts.push_back("rejected +" + tag + ": induced truth still connects " + x +
                                   " and " + y);
            return false;
        }
        if (kind == ReceiverSpec::Kind::sophisticated) {
            IcSummary summary(oracle, budget);
            std::string failing;
            if (!paths_uniquely_consistent(proposal, summary, x, y, &failing)) {
                if (attempts.size() < 6)
                    attempts.push_back("debunked but rejected +" + tag + ": link " + failing +
                                       " not uniquely consistent");
                return false;
            }
        }
        Plan plan;
        plan.verdict = Plan::Verdict::accepted;
        plan.disclosure = truth.names(mask);
        plan.proposal = proposal;
        plan.new_variable_count = popcount(mask) - prior.size();
        plan.trace = attempts;
        plan.trace.push_back("route: truthful separation");
        plan.trace.push_back("disclosure: " + set_text(plan.disclosure));
        if (d.debunked_link)
            plan.trace.push_back("debunked link: " + d.debunked_link->first + " -> " +
                                 d.debunked_link->second);
        for (const auto& line : ic_algorithm(oracle).trace) plan.trace.push_back(line);
        found = plan;
        return true;
    });
    if (found) return *found;
    auto plan = infeasible_plan(std::move(attempts));
    plan.trace.push_back("no disclosure dissuades the receiver of the " + x + "-" + y + " link");
    return plan;
}

std::optional<std::vector<VariableId>> minimal_dsep_set(const Dag& truth, const VariableId& x,
                                                        const VariableId& y) {
    int ix = truth.index_of(x);
    int iy = truth.index_of(y);
    if (ix == iy) throw InputError("d-separating set requires distinct variables");
    Mask pool = truth.full_mask() & ~((Mask{1} << ix) | (Mask{1} << iy));
    std::optional<std::vector<VariableId>> out;
    for_each_subset(pool, [&](Mask s) {
        if (d_separates(truth, ix, iy, s)) {
            out = truth.names(s);
            return true;
        }
        return false;
    });
    return out;
}

Plan nitpick_search(const Dag& truth, const Dag& prior, const Goal& goal, const Budget& budget,
                    bool truthful_only) {
    check_prior(truth, prior);
    if (truth.size() > budget.max_scope)
        throw BudgetError("truth exceeds the search budget", budget.max_scope);
    if (defective_links(prior, truth).empty())
        return infeasible_plan({"the prior has no defective link to attack"});
    Mask base = truth.mask_of(prior.variables()) | (Mask{1} << truth.index_of(goal.x)) |
                (Mask{1} << truth.index_of(goal.y));
    SearchContext ctx{truth, std::optional<Dag>(prior), ReceiverSpec::Kind::naive,
                      goal,  truthful_only,             budget};
    auto found = search_supersets(ctx, base, "nitpick");
    return found ? *found
                 : infeasible_plan({"no disclosure debunks the prior while supporting the goal"});
}

Plan plan_persuade(const Dag& truth, const ReceiverSpec& receiver, const VariableId& x,
                   const VariableId& y, const Budget& budget, bool truthful_only) {
    Goal goal{x, y, Goal::Mode::establish_direct};
    if (!receiver.prior) {
        if (receiver.kind == ReceiverSpec::Kind::naive && !truthful_only)
            return persuade_naive(truth, x, y);
        if (receiver.kind == ReceiverSpec::Kind::sophisticated)
            return persuade_sophisticated(truth, x, y, budget, truthful_only);
        // naive with the truthful-only restriction: minimal search.
        SearchContext ctx{truth, std::nullopt, ReceiverSpec::Kind::naive, goal, truthful_only,
                          budget};
        Mask xy = (Mask{1} << truth.index_of(x)) | (Mask{1} << truth.index_of(y));
        if (truth.size() > budget.max_scope)
            throw BudgetError("truth exceeds the search budget", budget.max_scope);
        auto found = search_supersets(ctx, xy, "truthful naive persuasion");
        return found ? *found : infeasible_plan({"no truthful consistent model contains " + x +
                                                 " -> " + y});
    }
    check_prior(truth, *receiver.prior);
    if (truth.size() > budget.max_scope)
        throw BudgetError("truth exceeds the search budget", budget.max_scope);
    const Dag& prior = *receiver.prior;
    if (prior.has_variable(x) && prior.has_variable(y) &&
        prior.reaches(prior.index_of(x), prior.index_of(y))) {
        Plan plan;
        plan.verdict = Plan::Verdict::accepted;
        plan.disclosure = prior.variables();
        plan.proposal = prior;
        plan.new_variable_count = 0;
        plan.trace = {"the receiver already believes " + x + " => " + y};
        return plan;
    }
    Mask base = truth.mask_of(prior.variables()) | (Mask{1} << truth.index_of(x)) |
                (Mask{1} << truth.index_of(y));
    SearchContext ctx{truth, receiver.prior, receiver.kind, goal, truthful_only, budget};
    auto found = search_supersets(ctx, base, "persuasion against a prior");
    return found ? *found
                 : infeasible_plan({"no disclosure debunks the prior and supports " + x + " -> " +
                                    y});
}

}  // namespace cp
