#include "core/multigraph.hpp"

#include <algorithm>

#include "core/dsu.hpp"

namespace bmst {

bool Multigraph::connected() const {
    if (vertex_count_ <= 1) return true;
    DisjointSets sets(vertex_count_);
    for (const Edge& e : edges_) sets.unite(e.u, e.v);
    return sets.component_count() == 1;
}

std::vector<int> Multigraph::component_labels(std::span<const EdgeId> edge_subset) const {
    DisjointSets sets(vertex_count_);
    for (EdgeId e : edge_subset) sets.unite(edges_[static_cast<size_t>(e)].u, edges_[static_cast<size_t>(e)].v);
    std::vector<int> label(static_cast<size_t>(vertex_count_), -1);
    int next = 0;
    for (VertexId v = 0; v < vertex_count_; ++v) {
        int root = sets.find(v);
        if (label[static_cast<size_t>(root)] == -1) label[static_cast<size_t>(root)] = next++;
        label[static_cast<size_t>(v)] = label[static_cast<size_t>(root)];
    }
    return label;
}

bool Multigraph::acyclic(std::span<const EdgeId> edge_subset) const {
    DisjointSets sets(vertex_count_);
    for (EdgeId e : edge_subset) {
        if (!sets.unite(edges_[static_cast<size_t>(e)].u, edges_[static_cast<size_t>(e)].v)) return false;
    }
    return true;
}

ContractionResult contract(const Multigraph& graph, std::span<const EdgeId> edges) {
    ContractionResult out;
    out.vertex_map = graph.component_labels(edges);
    int quotient_n = 0;
    for (int label : out.vertex_map) quotient_n = std::max(quotient_n, label + 1);
    if (graph.vertex_count() == 0) quotient_n = 0;

    std::vector<Edge> quotient_edges;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        VertexId u = out.vertex_map[static_cast<size_t>(graph.edge(e).u)];
        VertexId v = out.vertex_map[static_cast<size_t>(graph.edge(e).v)];
        if (u == v) continue;  // contraction loop
        quotient_edges.push_back({u, v});
        out.edge_origin.push_back(e);
    }
    out.graph = Multigraph(quotient_n, std::move(quotient_edges));
    return out;
}

}  // namespace bmst
