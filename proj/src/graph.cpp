#include "causalpersuade/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace cp {

int popcount(Mask m) { return std::popcount(m); }

int lowest_bit(Mask m) { return std::countr_zero(m); }

bool for_each_subset(Mask pool, const std::function<bool(Mask)>& fn) {
    std::vector<int> items;
    for (Mask m = pool; m; m &= m - 1) items.push_back(lowest_bit(m));
    const int n = static_cast<int>(items.size());
    for (int k = 0; k <= n; ++k) {
        std::vector<int> combo(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            Mask s = 0;
            for (int i : combo) s |= Mask{1} << items[i];
            if (fn(s)) return true;
            // next combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return false;
}

bool valid_variable_name(const VariableId& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

namespace {

bool acyclic_masks(const std::vector<Mask>& parents) {
    const int n = static_cast<int>(parents.size());
    Mask removed = 0;
    for (int round = 0; round < n; ++round) {
        bool progress = false;
        for (int i = 0; i < n; ++i) {
            Mask bit = Mask{1} << i;
            if (removed & bit) continue;
            if ((parents[i] & ~removed) == 0) {
                removed |= bit;
                progress = true;
            }
        }
        if (!progress) break;
    }
    return popcount(removed) == n;
}

}  // namespace

bool is_acyclic(const std::vector<VariableId>& variables,
                const std::vector<std::pair<VariableId, VariableId>>& edges) {
    std::vector<VariableId> sorted_vars = variables;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    auto index = [&](const VariableId& v) {
        auto it = std::lower_bound(sorted_vars.begin(), sorted_vars.end(), v);
        if (it == sorted_vars.end() || *it != v)
            throw InputError("unknown variable in edge list: " + v);
        return static_cast<int>(it - sorted_vars.begin());
    };
    std::vector<Mask> parents(sorted_vars.size(), 0);
    for (const auto& [from, to] : edges) parents[index(to)] |= Mask{1} << index(from);
    return acyclic_masks(parents);
}

Dag::Dag(std::vector<VariableId> variables,
         const std::vector<std::pair<VariableId, VariableId>>& edges) {
    if (variables.size() > static_cast<size_t>(kMaxVariables))
        throw InputError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
    for (const auto& v : variables) {
        if (!valid_variable_name(v)) throw InputError("invalid variable name: '" + v + "'");
    }
    std::sort(variables.begin(), variables.end());
    if (std::adjacent_find(variables.begin(), variables.end()) != variables.end())
        throw InputError("duplicate variable name");
    vars_ = std::move(variables);
    parents_.assign(vars_.size(), 0);
    children_.assign(vars_.size(), 0);
    for (const auto& [from, to] : edges) {
        int f = index_of(from);
        int t = index_of(to);
        if (f == t) throw InputError("self-loop on variable " + from);
        Mask bit = Mask{1} << f;
        if (parents_[t] & bit) throw InputError("duplicate edge " + from + " -> " + to);
        if (parents_[f] & (Mask{1} << t))
            throw InputError("edge " + from + " -> " + to + " present in both orientations");
        parents_[t] |= bit;
        children_[f] |= Mask{1} << t;
    }
    if (!acyclic_masks(parents_)) throw InputError("graph contains a directed cycle");
}

Dag Dag::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("graph JSON must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() != "variables" && it.key() != "edges")
            throw InputError("unknown key in graph JSON: " + it.key());
    }
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw InputError("graph JSON requires a \"variables\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw InputError("graph JSON requires an \"edges\" array");
    std::vector<VariableId> vars;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw InputError("variables must be strings");
        vars.push_back(v.get<std::string>());
    }
    std::vector<std::pair<VariableId, VariableId>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputError("each edge must be a [from, to] pair of strings");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Dag(std::move(vars), edges);
}

std::string Dag::to_json() const {
    nlohmann::json doc;
    doc["variables"] = vars_;
    auto list = nlohmann::json::array();
    for (const auto& [from, to] : edges()) list.push_back({from, to});
    doc["edges"] = std::move(list);
    return doc.dump();
}

Mask Dag::full_mask() const {
    return vars_.empty() ? 0 : (vars_.size() == 64 ? ~Mask{0} : (Mask{1} << vars_.size()) - 1);
}

bool Dag::has_variable(const VariableId& v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

int Dag::index_of(const VariableId& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) throw InputError("unknown variable: " + v);
    return static_cast<int>(it - vars_.begin());
}

std::vector<VariableId> Dag::names(Mask m) const {
    std::vector<VariableId> out;
    for (; m; m &= m - 1) out.push_back(vars_[lowest_bit(m)]);
    return out;
}

Mask Dag::mask_of(const std::vector<VariableId>& vs) const {
    Mask m = 0;
    for (const auto& v : vs) m |= Mask{1} << index_of(v);
    return m;
}

bool Dag::edge(int from, int to) const { return (children_[from] >> to) & 1; }

bool Dag::edge(const VariableId& from, const VariableId& to) const {
    return edge(index_of(from), index_of(to));
}

bool Dag::adjacent(int u, int v) const { return edge(u, v) || edge(v, u); }

int Dag::edge_count() const {
    int total = 0;
    for (Mask m : parents_) total += popcount(m);
    return total;
}

std::vector<std::pair<VariableId, VariableId>> Dag::edges() const {
    std::vector<std::pair<VariableId, VariableId>> out;
    for (int from = 0; from < size(); ++from)
        for (Mask m = children_[from]; m; m &= m - 1)
            out.emplace_back(vars_[from], vars_[lowest_bit(m)]);
    std::sort(out.begin(), out.end());
    return out;
}

Mask Dag::ancestor_mask(int v) const {
    Mask seen = 0;
    Mask frontier = parents_[v];
    while (frontier) {
        seen |= frontier;
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= parents_[lowest_bit(m)];
        frontier = next & ~seen;
    }
    return seen & ~(Mask{1} << v);
}

Mask Dag::descendant_mask(int v) const {
    Mask seen = 0;
    Mask frontier = children_[v];
    while (frontier) {
        seen |= frontier;
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= children_[lowest_bit(m)];
        frontier = next & ~seen;
    }
    return seen & ~(Mask{1} << v);
}

std::vector<VariableId> Dag::ancestors(const VariableId& v) const {
    return names(ancestor_mask(index_of(v)));
}

std::vector<VariableId> Dag::descendants(const VariableId& v) const {
    return names(descendant_mask(index_of(v)));
}

bool Dag::reaches(int u, int v, Mask within) const {
    Mask seen = Mask{1} << u;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= children_[lowest_bit(m)];
        next &= within & ~seen;
        if (next & (Mask{1} << v)) return true;
        seen |= next;
        frontier = next;
    }
    return false;
}

bool Dag::reaches(int u, int v) const { return reaches(u, v, full_mask()); }

TripletKind Dag::classify_triplet(const VariableId& a, const VariableId& b,
                                  const VariableId& c) const {
    int ia = index_of(a), ib = index_of(b), ic = index_of(c);
    if (ia == ib || ib == ic || ia == ic) throw InputError("triplet variables must be distinct");
    if (!adjacent(ia, ib) || !adjacent(ib, ic) || adjacent(ia, ic))
        return TripletKind::not_a_triplet;
    bool a_in = edge(ia, ib), c_in = edge(ic, ib);
    if (a_in && c_in) return TripletKind::collider;
    if (!a_in && !c_in) return TripletKind::fork;
    return TripletKind::chain;
}

bool Dag::correlated(int a, int b) const {
    if (a == b) throw InputError("correlated requires distinct variables");
    if (reaches(a, b) || reaches(b, a)) return true;
    return (ancestor_mask(a) & ancestor_mask(b)) != 0;
}

bool Dag::correlated(const VariableId& a, const VariableId& b) const {
    return correlated(index_of(a), index_of(b));
}

Dag Dag::induced(Mask keep) const {
    std::vector<VariableId> vs = names(keep);
    std::vector<std::pair<VariableId, VariableId>> es;
    for (const auto& [from, to] : edges()) {
        if ((keep >> index_of(from)) & 1 && (keep >> index_of(to)) & 1)
            es.emplace_back(from, to);
    }
    return Dag(std::move(vs), es);
}

bool Dag::operator==(const Dag& other) const {
    return vars_ == other.vars_ && parents_ == other.parents_;
}

Pattern::Pattern(std::vector<VariableId> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end());
    parents_.assign(vars_.size(), 0);
    children_.assign(vars_.size(), 0);
    neighbors_.assign(vars_.size(), 0);
}

int Pattern::index_of(const VariableId& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) throw InputError("unknown variable: " + v);
    return static_cast<int>(it - vars_.begin());
}

bool Pattern::directed(int from, int to) const { return (children_[from] >> to) & 1; }

bool Pattern::undirected(int u, int v) const { return (neighbors_[u] >> v) & 1; }

bool Pattern::adjacent(int u, int v) const {
    return directed(u, v) || directed(v, u) || undirected(u, v);
}

void Pattern::add_directed(int from, int to) {
    children_[from] |= Mask{1} << to;
    parents_[to] |= Mask{1} << from;
}

void Pattern::add_undirected(int u, int v) {
    neighbors_[u] |= Mask{1} << v;
    neighbors_[v] |= Mask{1} << u;
}

void Pattern::orient(int from, int to) {
    if (!undirected(from, to)) throw InputError("orient: edge is not undirected");
    neighbors_[from] &= ~(Mask{1} << to);
    neighbors_[to] &= ~(Mask{1} << from);
    add_directed(from, to);
}

int Pattern::directed_count() const {
    int total = 0;
    for (Mask m : parents_) total += popcount(m);
    return total;
}

int Pattern::undirected_count() const {
    int total = 0;
    for (Mask m : neighbors_) total += popcount(m);
    return total / 2;
}

std::vector<std::pair<VariableId, VariableId>> Pattern::directed_edges() const {
    std::vector<std::pair<VariableId, VariableId>> out;
    for (int from = 0; from < size(); ++from)
        for (Mask m = children_[from]; m; m &= m - 1)
            out.emplace_back(vars_[from], vars_[lowest_bit(m)]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<VariableId, VariableId>> Pattern::undirected_edges() const {
    std::vector<std::pair<VariableId, VariableId>> out;
    for (int u = 0; u < size(); ++u)
        for (Mask m = neighbors_[u]; m; m &= m - 1) {
            int v = lowest_bit(m);
            if (u < v) out.emplace_back(vars_[u], vars_[v]);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool Pattern::operator==(const Pattern& other) const {
    return vars_ == other.vars_ && parents_ == other.parents_ &&
           neighbors_ == other.neighbors_;
}

std::string join_names(const std::vector<VariableId>& names) {
    std::ostringstream out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out << ",";
        out << names[i];
    }
    return out.str();
}

}  // namespace cp
