#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/multigraph.hpp"
#include "core/types.hpp"

namespace bmst {

/// A bilevel spanning tree instance: edge ownership, both cost functions and
/// the follower's preference order. Immutable after construction; all
/// operations below are pure.
struct BmstInstance {
    Multigraph graph;
    std::vector<Owner> owner;         // by edge id
    std::vector<Cost> leader_cost;    // c
    std::vector<Cost> follower_cost;  // d
    std::vector<EdgeId> pref;         // permutation of the follower edge ids

    int vertex_count() const { return graph.vertex_count(); }
    int edge_count() const { return graph.edge_count(); }
    bool is_leader(EdgeId e) const { return owner[static_cast<size_t>(e)] == Owner::Leader; }
    bool is_follower(EdgeId e) const { return owner[static_cast<size_t>(e)] == Owner::Follower; }
    Cost c(EdgeId e) const { return leader_cost[static_cast<size_t>(e)]; }
    Cost d(EdgeId e) const { return follower_cost[static_cast<size_t>(e)]; }

    std::vector<EdgeId> leader_edges() const;
    std::vector<EdgeId> follower_edges() const;
};

bool operator==(const BmstInstance& a, const BmstInstance& b);

/// Follower edges sorted by (d, c, edgeId): the optimistic sum-follower order.
std::vector<EdgeId> default_pref(const Multigraph& graph, const std::vector<Owner>& owner,
                                 const std::vector<Cost>& leader_cost,
                                 const std::vector<Cost>& follower_cost);

/// The preference order a given tie mode encodes: optimistic (d, c, id),
/// pessimistic (d, -c, id), or the instance's own order verbatim.
std::vector<EdgeId> effective_pref(const BmstInstance& inst, TieMode tie);

/// Checks every instance invariant; returns an error description on failure.
std::optional<std::string> validate(const BmstInstance& inst);

// Structural instance classes.
bool leader_graph_connected(const BmstInstance& inst);
bool leader_graph_forest(const BmstInstance& inst);
bool follower_graph_connected(const BmstInstance& inst);
bool follower_graph_forest(const BmstInstance& inst);
bool follower_graph_matching(const BmstInstance& inst);
/// Every leader edge has a parallel follower edge of the same leader cost.
bool follower_shadows_all(const BmstInstance& inst);

}  // namespace bmst
