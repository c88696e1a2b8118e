#pragma once

#include <span>
#include <vector>

#include "core/types.hpp"

namespace bmst {

/// Undirected edge; parallel edges are permitted, loops are not.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }

/// A multigraph on vertices 0..n-1 with edge ids 0..m-1 given by position.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {}

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool connected() const;

    /// Components of the subgraph (V, edge_subset): vertex -> component index.
    /// Components are numbered 0..k-1 by their minimum vertex id, ascending.
    std::vector<int> component_labels(std::span<const EdgeId> edge_subset) const;

    bool acyclic(std::span<const EdgeId> edge_subset) const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

inline bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

struct ContractionResult {
    Multigraph graph;        // quotient graph, loops dropped, parallels kept
    std::vector<int> vertex_map;       // original vertex -> quotient vertex
    std::vector<EdgeId> edge_origin;   // quotient edge -> original edge id
};

/// Merge the endpoint components of the given edges into single vertices.
/// Quotient vertices are numbered by minimum original vertex id, ascending.
ContractionResult contract(const Multigraph& graph, std::span<const EdgeId> edges);

}  // namespace bmst
