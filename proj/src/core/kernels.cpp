#include "core/kernels.hpp"

#include <algorithm>

#include "core/dsu.hpp"

namespace bmst {

Result<std::vector<EdgeId>> mst(const Multigraph& graph, std::span<const Cost> weights,
                                std::span<const EdgeId> tie_order) {
    using R = Result<std::vector<EdgeId>>;
    std::vector<int> rank(static_cast<size_t>(graph.edge_count()), 0);
    for (size_t i = 0; i < tie_order.size(); ++i) rank[static_cast<size_t>(tie_order[i])] = static_cast<int>(i);

    std::vector<EdgeId> order(static_cast<size_t>(graph.edge_count()));
    for (EdgeId e = 0; e < graph.edge_count(); ++e) order[static_cast<size_t>(e)] = e;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        if (weights[static_cast<size_t>(a)] != weights[static_cast<size_t>(b)])
            return weights[static_cast<size_t>(a)] < weights[static_cast<size_t>(b)];
        return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)];
    });

    DisjointSets sets(graph.vertex_count());
    std::vector<EdgeId> tree;
    for (EdgeId e : order)
        if (sets.unite(graph.edge(e).u, graph.edge(e).v)) tree.push_back(e);
    if (sets.component_count() != 1) return R::failure(Status::Infeasible, "graph disconnected");
    std::sort(tree.begin(), tree.end());
    return R::success(std::move(tree));
}

std::vector<EdgeId> spanning_forest(const Multigraph& graph, std::span<const EdgeId> seed,
                                    std::span<const EdgeId> candidates_in_order) {
    DisjointSets sets(graph.vertex_count());
    std::vector<EdgeId> forest;
    for (EdgeId e : seed)
        if (sets.unite(graph.edge(e).u, graph.edge(e).v)) forest.push_back(e);
    for (EdgeId e : candidates_in_order)
        if (sets.unite(graph.edge(e).u, graph.edge(e).v)) forest.push_back(e);
    std::sort(forest.begin(), forest.end());
    return forest;
}

void for_each_partition(int n, const std::function<bool(std::span<const int>, int)>& visit) {
    if (n == 0) {
        visit({}, 0);
        return;
    }
    std::vector<int> labels(static_cast<size_t>(n), 0);
    // Restricted growth: labels[0] = 0 and labels[i] <= max(labels[0..i-1]) + 1.
    std::vector<int> prefix_max(static_cast<size_t>(n), 0);
    int i = 0;
    while (true) {
        if (i == n) {
            int classes = prefix_max[static_cast<size_t>(n - 1)] + 1;
            if (!visit(labels, classes)) return;
            // Backtrack to the rightmost position that can still grow.
            i = n - 1;
            while (i > 0) {
                int cap = prefix_max[static_cast<size_t>(i - 1)] + 1;
                if (labels[static_cast<size_t>(i)] < cap) break;
                --i;
            }
            if (i == 0) return;
            ++labels[static_cast<size_t>(i)];
            prefix_max[static_cast<size_t>(i)] =
                std::max(prefix_max[static_cast<size_t>(i - 1)], labels[static_cast<size_t>(i)]);
            ++i;
            continue;
        }
        if (i > 0) {
            labels[static_cast<size_t>(i)] = 0;
            prefix_max[static_cast<size_t>(i)] = prefix_max[static_cast<size_t>(i - 1)];
        } else {
            labels[0] = 0;
            prefix_max[0] = 0;
        }
        ++i;
    }
}

}  // namespace bmst
