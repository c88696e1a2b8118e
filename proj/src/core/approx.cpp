#include "core/approx.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

#include "core/evaluate.hpp"
#include "core/follower.hpp"
#include "core/kernels.hpp"
#include "core/reductions.hpp"
#include "core/steiner.hpp"

namespace bmst {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

struct Working {
    BmstInstance inst;
    std::vector<EdgeId> origin;  // current edge id -> original edge id
};

Working make_working(const BmstInstance& inst, TieMode tie) {
    Working w;
    w.inst = inst;
    w.inst.pref = effective_pref(inst, tie);
    w.origin.resize(static_cast<size_t>(inst.edge_count()));
    for (EdgeId e = 0; e < inst.edge_count(); ++e) w.origin[static_cast<size_t>(e)] = e;
    return w;
}

// Rebuilds a working instance keeping the flagged edges, applying a vertex
// relabeling, and restricting the preference order to the survivors.
Working rebuild(const Working& w, const std::vector<bool>& keep, const std::vector<int>& vertex_map,
                int vertex_count) {
    Working out;
    std::vector<EdgeId> new_id(static_cast<size_t>(w.inst.edge_count()), -1);
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < w.inst.edge_count(); ++e) {
        if (!keep[static_cast<size_t>(e)]) continue;
        VertexId u = vertex_map[static_cast<size_t>(w.inst.graph.edge(e).u)];
        VertexId v = vertex_map[static_cast<size_t>(w.inst.graph.edge(e).v)];
        if (u == v) continue;  // contraction loop
        new_id[static_cast<size_t>(e)] = static_cast<EdgeId>(edges.size());
        edges.push_back({u, v});
        out.inst.owner.push_back(w.inst.owner[static_cast<size_t>(e)]);
        out.inst.leader_cost.push_back(w.inst.c(e));
        out.inst.follower_cost.push_back(w.inst.d(e));
        out.origin.push_back(w.origin[static_cast<size_t>(e)]);
    }
    out.inst.graph = Multigraph(vertex_count, std::move(edges));
    for (EdgeId e : w.inst.pref)
        if (new_id[static_cast<size_t>(e)] != -1) out.inst.pref.push_back(new_id[static_cast<size_t>(e)]);
    return out;
}

std::vector<int> identity_map(int n) {
    std::vector<int> map(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) map[static_cast<size_t>(i)] = i;
    return map;
}

}  // namespace

Result<SolveReport> approx_contraction(const BmstInstance& inst, TieMode tie) {
    using R = Result<SolveReport>;
    const ObjectiveSpec spec{ObjectiveForm::Sum, ObjectiveForm::Sum, FollowerScope::OwnEdges, tie};
    Working w = make_working(inst, tie);
    std::vector<EdgeId> choice;

    while (w.inst.vertex_count() > 1) {
        // Keep only the greedy forest of the current follower edges;
        // contraction can have recreated follower cycles.
        {
            std::vector<EdgeId> forest = greedy_scan(w.inst, {}, w.inst.pref);
            std::vector<bool> keep(static_cast<size_t>(w.inst.edge_count()), false);
            for (EdgeId e = 0; e < w.inst.edge_count(); ++e)
                if (w.inst.is_leader(e)) keep[static_cast<size_t>(e)] = true;
            for (EdgeId e : forest) keep[static_cast<size_t>(e)] = true;
            w = rebuild(w, keep, identity_map(w.inst.vertex_count()), w.inst.vertex_count());
        }

        std::vector<EdgeId> tie_order(static_cast<size_t>(w.inst.edge_count()));
        for (EdgeId e = 0; e < w.inst.edge_count(); ++e) tie_order[static_cast<size_t>(e)] = e;
        std::sort(tie_order.begin(), tie_order.end(), [&](EdgeId a, EdgeId b) {
            bool la = w.inst.is_leader(a), lb = w.inst.is_leader(b);
            if (la != lb) return la;  // leader first biases toward larger contractions
            return a < b;
        });
        auto tree = mst(w.inst.graph, w.inst.leader_cost, tie_order);
        if (!tree.ok()) return R::failure(tree.status, tree.message);

        std::vector<EdgeId> leader_part;
        Cost tree_cost = 0, leader_cost = 0;
        for (EdgeId e : *tree.value) {
            tree_cost += w.inst.c(e);
            if (w.inst.is_leader(e)) {
                leader_part.push_back(e);
                leader_cost += w.inst.c(e);
            }
        }
        assert(leader_cost <= tree_cost);
        (void)tree_cost;
        (void)leader_cost;

        for (EdgeId e : leader_part) choice.push_back(w.origin[static_cast<size_t>(e)]);
        if (leader_part.empty() || leader_part.size() == tree.value->size()) break;

        std::vector<int> vmap = w.inst.graph.component_labels(leader_part);
        int quotient_n = 0;
        for (int label : vmap) quotient_n = std::max(quotient_n, label + 1);
        std::vector<bool> keep(static_cast<size_t>(w.inst.edge_count()), true);
        w = rebuild(w, keep, vmap, quotient_n);
    }

    std::sort(choice.begin(), choice.end());
    std::vector<EdgeId> order = effective_pref(inst, tie);
    auto y = greedy_response(inst, choice, order);
    if (!y) return R::failure(Status::Infeasible, "contraction loop produced an incompletable choice");
    auto values = evaluate(inst, choice, *y, spec);
    if (!values.ok()) return R::failure(values.status, values.message);

    SolveReport report;
    report.choice = std::move(choice);
    report.response = std::move(*y);
    report.leader_value = values.value->first;
    report.follower_value = values.value->second;
    report.method = "approx";
    report.feasible = true;
    return R::success(std::move(report));
}

Result<SolveReport> approx_fpt2(const BmstInstance& inst, TieMode tie, const Caps& caps) {
    using R = Result<SolveReport>;
    const ObjectiveSpec spec{ObjectiveForm::Sum, ObjectiveForm::Sum, FollowerScope::OwnEdges, tie};
    const std::vector<EdgeId> follower = inst.follower_edges();
    if (static_cast<int>(follower.size()) > caps.fpt2_follower_edges)
        return R::failure(Status::CapExceeded, "too many follower edges for the fpt 2-approximation");
    std::vector<EdgeId> order = effective_pref(inst, tie);

    std::vector<VertexId> follower_vertices;
    {
        std::set<VertexId> vs;
        for (EdgeId e : follower) {
            vs.insert(inst.graph.edge(e).u);
            vs.insert(inst.graph.edge(e).v);
        }
        follower_vertices.assign(vs.begin(), vs.end());
    }

    // Leader-only instances skip the enumeration: the choice must be a
    // spanning tree already.
    if (follower_vertices.empty()) {
        std::vector<Edge> edges;
        std::vector<EdgeId> ids;
        std::vector<Cost> weights;
        for (EdgeId e = 0; e < inst.edge_count(); ++e) {
            if (!inst.is_leader(e)) continue;
            edges.push_back(inst.graph.edge(e));
            ids.push_back(e);
            weights.push_back(inst.c(e));
        }
        Multigraph leader_graph(inst.vertex_count(), std::move(edges));
        std::vector<EdgeId> tie_order(static_cast<size_t>(leader_graph.edge_count()));
        for (EdgeId e = 0; e < leader_graph.edge_count(); ++e) tie_order[static_cast<size_t>(e)] = e;
        auto tree = mst(leader_graph, weights, tie_order);
        if (!tree.ok()) return R::failure(Status::Infeasible, "no leader choice admits a spanning completion");
        std::vector<EdgeId> choice;
        for (EdgeId e : *tree.value) choice.push_back(ids[static_cast<size_t>(e)]);
        std::sort(choice.begin(), choice.end());
        std::vector<EdgeId> empty;
        auto values = evaluate(inst, choice, empty, spec);
        if (!values.ok()) return R::failure(values.status, values.message);
        SolveReport report;
        report.choice = std::move(choice);
        report.leader_value = values.value->first;
        report.follower_value = values.value->second;
        report.method = "fpt2";
        report.feasible = true;
        return R::success(std::move(report));
    }

    // Normalize to a connected leader graph; choices that end up using the
    // fresh connector edges have no counterpart in the source and are
    // discarded, which never loses the partition the optimum induces.
    auto normalized = to_elconn(inst);
    if (!normalized.ok()) return R::failure(normalized.status, normalized.message);
    const BmstInstance& work = normalized.value->target;
    const auto& edge_origin = normalized.value->edge_origin;

    std::vector<Edge> leader_edges;
    std::vector<EdgeId> leader_ids;  // leader-graph edge -> work edge id
    std::vector<Cost> leader_weights;
    for (EdgeId e = 0; e < work.edge_count(); ++e) {
        if (!work.is_leader(e)) continue;
        leader_edges.push_back(work.graph.edge(e));
        leader_ids.push_back(e);
        leader_weights.push_back(work.c(e));
    }
    Multigraph leader_graph(work.vertex_count(), std::move(leader_edges));

    // One subset DP serves every partition below.
    SteinerDp dp(leader_graph, leader_weights, follower_vertices);
    const int t = static_cast<int>(follower_vertices.size());

    std::optional<SolveReport> best;
    for_each_partition(t, [&](std::span<const int> labels, int classes) {
        std::vector<std::uint32_t> class_mask(static_cast<size_t>(classes), 0);
        std::vector<std::vector<VertexId>> class_vertices(static_cast<size_t>(classes));
        for (int i = 0; i < t; ++i) {
            class_mask[static_cast<size_t>(labels[static_cast<size_t>(i)])] |= 1u << i;
            class_vertices[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(
                follower_vertices[static_cast<size_t>(i)]);
        }

        // Exact Steiner forest over the classes via partition-of-classes
        // enumeration against the shared DP table.
        Cost best_total = kInf;
        std::vector<std::uint32_t> best_merged;
        for_each_partition(classes, [&](std::span<const int> class_labels, int merged_count) {
            std::vector<std::uint32_t> merged(static_cast<size_t>(merged_count), 0);
            for (int i = 0; i < classes; ++i)
                merged[static_cast<size_t>(class_labels[static_cast<size_t>(i)])] |=
                    class_mask[static_cast<size_t>(i)];
            Cost total = 0;
            for (std::uint32_t mask : merged) {
                auto v = dp.tree_value(mask);
                if (!v) return true;
                total += *v;
            }
            if (total < best_total) {
                best_total = total;
                best_merged = merged;
            }
            return true;
        });
        if (best_total >= kInf) return true;

        std::vector<EdgeId> forest;
        for (std::uint32_t mask : best_merged) {
            auto part = dp.tree_edges(mask);
            forest.insert(forest.end(), part->begin(), part->end());
        }
        std::sort(forest.begin(), forest.end());
        forest.erase(std::unique(forest.begin(), forest.end()), forest.end());

        auto full = sf_plus_complete(leader_graph, leader_weights, class_vertices, forest);
        if (!full.ok()) return true;

        std::vector<EdgeId> choice;
        for (EdgeId ge : *full.value) {
            EdgeId we = leader_ids[static_cast<size_t>(ge)];
            if (!edge_origin[static_cast<size_t>(we)]) return true;  // uses a fresh connector
            choice.push_back(*edge_origin[static_cast<size_t>(we)]);
        }
        std::sort(choice.begin(), choice.end());

        auto y = greedy_response(inst, choice, order);
        if (!y) return true;
        auto values = evaluate(inst, choice, *y, spec);
        if (!values.ok()) return true;
        if (!best || values.value->first < best->leader_value) {
            SolveReport report;
            report.choice = std::move(choice);
            report.response = std::move(*y);
            report.leader_value = values.value->first;
            report.follower_value = values.value->second;
            report.method = "fpt2";
            report.feasible = true;
            best = std::move(report);
        }
        return true;
    });

    if (!best) return R::failure(Status::Infeasible, "no leader choice admits a spanning completion");
    return R::success(std::move(*best));
}

}  // namespace bmst
