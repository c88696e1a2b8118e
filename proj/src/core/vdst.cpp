#include "core/vdst.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "core/dsu.hpp"

namespace bmst {

namespace {
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
}

Result<DisjointForests> disjoint_connecting_forests(const Multigraph& graph,
                                                    const std::vector<std::vector<VertexId>>& terminal_sets,
                                                    std::optional<std::span<const Cost>> lengths,
                                                    std::int64_t node_budget) {
    using R = Result<DisjointForests>;
    const int n = graph.vertex_count();
    const int k = static_cast<int>(terminal_sets.size());
    if (k == 0) return R::success(DisjointForests{});

    // label 0 = unused, 1..k = assigned to that terminal set
    std::vector<int> label(static_cast<size_t>(n), 0);
    std::set<VertexId> seen;
    for (int i = 0; i < k; ++i) {
        if (terminal_sets[static_cast<size_t>(i)].empty())
            return R::failure(Status::BadArgument, "empty terminal set");
        for (VertexId v : terminal_sets[static_cast<size_t>(i)]) {
            if (v < 0 || v >= n) return R::failure(Status::BadArgument, "terminal out of range");
            if (!seen.insert(v).second) return R::failure(Status::BadArgument, "terminal sets are not disjoint");
            label[static_cast<size_t>(v)] = i + 1;
        }
    }
    std::vector<VertexId> free_vertices;
    for (VertexId v = 0; v < n; ++v)
        if (label[static_cast<size_t>(v)] == 0) free_vertices.push_back(v);

    // Edge scan order: by length for the optimization version, by id otherwise.
    std::vector<EdgeId> order(static_cast<size_t>(graph.edge_count()));
    for (EdgeId e = 0; e < graph.edge_count(); ++e) order[static_cast<size_t>(e)] = e;
    if (lengths) {
        std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
            Cost la = (*lengths)[static_cast<size_t>(a)], lb = (*lengths)[static_cast<size_t>(b)];
            return la != lb ? la < lb : a < b;
        });
    }

    // A labeling is usable iff each class induces one connected component
    // covering all of its vertices; the class trees are then automatically
    // vertex-disjoint. Minimizing the per-class MSTs over all labelings is
    // exact: an optimal solution induces the labeling of its own trees.
    std::vector<int> free_label(free_vertices.size(), 0);
    std::int64_t visited = 0;
    bool budget_hit = false;
    Cost best_total = kInf;
    std::optional<DisjointForests> best;

    auto try_labeling = [&]() {
        DisjointForests sol;
        sol.trees.assign(static_cast<size_t>(k), {});
        std::vector<int> class_size(static_cast<size_t>(k + 1), 0);
        for (VertexId v = 0; v < n; ++v) ++class_size[static_cast<size_t>(label[static_cast<size_t>(v)])];

        DisjointSets sets(n);
        std::vector<int> joins(static_cast<size_t>(k + 1), 0);
        for (EdgeId e : order) {
            int lu = label[static_cast<size_t>(graph.edge(e).u)];
            int lv = label[static_cast<size_t>(graph.edge(e).v)];
            if (lu != lv || lu == 0) continue;
            if (sets.unite(graph.edge(e).u, graph.edge(e).v)) {
                sol.trees[static_cast<size_t>(lu - 1)].push_back(e);
                ++joins[static_cast<size_t>(lu)];
            }
        }
        for (int i = 1; i <= k; ++i)
            if (joins[static_cast<size_t>(i)] != class_size[static_cast<size_t>(i)] - 1) return false;
        for (auto& tree : sol.trees) std::sort(tree.begin(), tree.end());
        if (lengths) {
            for (const auto& tree : sol.trees)
                for (EdgeId e : tree) sol.total_length += (*lengths)[static_cast<size_t>(e)];
        }
        if (!best || sol.total_length < best_total) {
            best_total = sol.total_length;
            best = std::move(sol);
        }
        return true;
    };

    while (true) {
        if (++visited > node_budget) {
            budget_hit = true;
            break;
        }
        for (size_t i = 0; i < free_vertices.size(); ++i)
            label[static_cast<size_t>(free_vertices[i])] = free_label[i];
        bool found = try_labeling();
        if (found && !lengths) break;  // decision version: first feasible labeling wins

        // odometer over free-vertex labels, lexicographic
        size_t pos = free_vertices.size();
        while (pos > 0 && free_label[pos - 1] == k) {
            free_label[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++free_label[pos - 1];
    }

    // An interrupted search cannot certify optimality or infeasibility.
    if (budget_hit && (lengths || !best))
        return R::failure(Status::CapExceeded, "search budget exceeded");
    if (best) return R::success(std::move(*best));
    return R::failure(Status::Infeasible, "no vertex-disjoint trees exist");
}

}  // namespace bmst
