#include "core/instance.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "core/dsu.hpp"

namespace bmst {

std::vector<EdgeId> BmstInstance::leader_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (is_leader(e)) out.push_back(e);
    return out;
}

std::vector<EdgeId> BmstInstance::follower_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (is_follower(e)) out.push_back(e);
    return out;
}

bool operator==(const BmstInstance& a, const BmstInstance& b) {
    return a.graph == b.graph && a.owner == b.owner && a.leader_cost == b.leader_cost &&
           a.follower_cost == b.follower_cost && a.pref == b.pref;
}

std::vector<EdgeId> default_pref(const Multigraph& graph, const std::vector<Owner>& owner,
                                 const std::vector<Cost>& leader_cost,
                                 const std::vector<Cost>& follower_cost) {
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
        if (owner[static_cast<size_t>(e)] == Owner::Follower) order.push_back(e);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        auto ka = std::make_tuple(follower_cost[static_cast<size_t>(a)], leader_cost[static_cast<size_t>(a)], a);
        auto kb = std::make_tuple(follower_cost[static_cast<size_t>(b)], leader_cost[static_cast<size_t>(b)], b);
        return ka < kb;
    });
    return order;
}

std::vector<EdgeId> effective_pref(const BmstInstance& inst, TieMode tie) {
    if (tie == TieMode::FixedOrder) return inst.pref;
    std::vector<EdgeId> order = inst.follower_edges();
    const Cost sign = tie == TieMode::Optimistic ? 1 : -1;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return std::make_tuple(inst.d(a), sign * inst.c(a), a) <
               std::make_tuple(inst.d(b), sign * inst.c(b), b);
    });
    return order;
}

std::optional<std::string> validate(const BmstInstance& inst) {
    const int m = inst.edge_count();
    if (static_cast<int>(inst.owner.size()) != m || static_cast<int>(inst.leader_cost.size()) != m ||
        static_cast<int>(inst.follower_cost.size()) != m)
        return "edge attribute arrays disagree with edge count";
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = inst.graph.edge(e);
        if (ed.u == ed.v) return "loop edge " + std::to_string(e);
        if (ed.u < 0 || ed.v < 0 || ed.u >= inst.vertex_count() || ed.v >= inst.vertex_count())
            return "edge " + std::to_string(e) + " references unknown vertex";
        if (inst.c(e) < 0 || inst.d(e) < 0) return "negative cost on edge " + std::to_string(e);
    }
    if (!inst.graph.connected()) return "graph disconnected";

    std::vector<EdgeId> followers = inst.follower_edges();
    if (inst.pref.size() != followers.size()) return "pref does not list every follower edge exactly once";
    std::set<EdgeId> seen;
    for (EdgeId e : inst.pref) {
        if (e < 0 || e >= m || !inst.is_follower(e)) return "pref lists non-follower edge " + std::to_string(e);
        if (!seen.insert(e).second) return "pref repeats edge " + std::to_string(e);
    }
    for (size_t i = 1; i < inst.pref.size(); ++i) {
        if (inst.d(inst.pref[i - 1]) > inst.d(inst.pref[i]))
            return "pref inconsistent with follower costs at position " + std::to_string(i);
    }
    return std::nullopt;
}

namespace {

bool owned_connected(const BmstInstance& inst, Owner who) {
    DisjointSets sets(inst.vertex_count());
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.owner[static_cast<size_t>(e)] == who) sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v);
    return sets.component_count() <= 1;
}

bool owned_forest(const BmstInstance& inst, Owner who) {
    DisjointSets sets(inst.vertex_count());
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (inst.owner[static_cast<size_t>(e)] != who) continue;
        if (!sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) return false;
    }
    return true;
}

}  // namespace

bool leader_graph_connected(const BmstInstance& inst) { return owned_connected(inst, Owner::Leader); }
bool leader_graph_forest(const BmstInstance& inst) { return owned_forest(inst, Owner::Leader); }
bool follower_graph_connected(const BmstInstance& inst) { return owned_connected(inst, Owner::Follower); }
bool follower_graph_forest(const BmstInstance& inst) { return owned_forest(inst, Owner::Follower); }

bool follower_graph_matching(const BmstInstance& inst) {
    std::vector<int> degree(static_cast<size_t>(inst.vertex_count()), 0);
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!inst.is_follower(e)) continue;
        if (++degree[static_cast<size_t>(inst.graph.edge(e).u)] > 1) return false;
        if (++degree[static_cast<size_t>(inst.graph.edge(e).v)] > 1) return false;
    }
    return true;
}

bool follower_shadows_all(const BmstInstance& inst) {
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!inst.is_leader(e)) continue;
        VertexId u = inst.graph.edge(e).u, v = inst.graph.edge(e).v;
        bool shadowed = false;
        for (EdgeId f = 0; f < inst.edge_count() && !shadowed; ++f) {
            if (!inst.is_follower(f) || inst.c(f) != inst.c(e)) continue;
            VertexId a = inst.graph.edge(f).u, b = inst.graph.edge(f).v;
            shadowed = (a == u && b == v) || (a == v && b == u);
        }
        if (!shadowed) return false;
    }
    return true;
}

}  // namespace bmst
