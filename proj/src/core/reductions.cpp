#include "core/reductions.hpp"

#include <algorithm>
#include <map>

#include "core/dsu.hpp"
#include "core/evaluate.hpp"
#include "core/follower.hpp"
#include "core/kernels.hpp"

namespace bmst {

const char* reduction_name(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::EfConn: return "efconn";
        case ReductionKind::ElConn: return "elconn";
        case ReductionKind::EfForest: return "efforest";
        case ReductionKind::EfMatching: return "efmatching";
        case ReductionKind::EfAll: return "efall";
        case ReductionKind::Uniform: return "uniform";
    }
    return "?";
}

std::optional<ReductionKind> reduction_from_name(const std::string& name) {
    for (ReductionKind kind : {ReductionKind::EfConn, ReductionKind::ElConn, ReductionKind::EfForest,
                               ReductionKind::EfMatching, ReductionKind::EfAll, ReductionKind::Uniform})
        if (name == reduction_name(kind)) return kind;
    return std::nullopt;
}

namespace {

std::vector<int> identity_vertex_map(const BmstInstance& inst) {
    std::vector<int> map(static_cast<size_t>(inst.vertex_count()));
    for (size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
    return map;
}

Cost sum_max_cd(const BmstInstance& inst) {
    Cost total = 0;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) total += std::max(inst.c(e), inst.d(e));
    return total;
}

Cost sum_d(const BmstInstance& inst) {
    Cost total = 0;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) total += inst.d(e);
    return total;
}

// Fresh edges connecting the minimum-id representative of every component of
// the owner's subgraph to the representative of the first component.
std::vector<Edge> connecting_edges(const BmstInstance& inst, Owner who) {
    std::vector<EdgeId> owned;
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.owner[static_cast<size_t>(e)] == who) owned.push_back(e);
    std::vector<int> comp = inst.graph.component_labels(owned);
    int count = 0;
    for (int c : comp) count = std::max(count, c + 1);
    std::vector<VertexId> representative(static_cast<size_t>(count), -1);
    for (VertexId v = 0; v < inst.vertex_count(); ++v)
        if (representative[static_cast<size_t>(comp[static_cast<size_t>(v)])] == -1)
            representative[static_cast<size_t>(comp[static_cast<size_t>(v)])] = v;
    std::vector<Edge> fresh;
    for (int i = 1; i < count; ++i) fresh.push_back({representative[0], representative[static_cast<size_t>(i)]});
    return fresh;
}

SolutionMapping base_mapping(ReductionKind kind, const BmstInstance& inst) {
    SolutionMapping mapping;
    mapping.kind = kind;
    mapping.source = inst;
    mapping.vertex_map = identity_vertex_map(inst);
    return mapping;
}

}  // namespace

Result<SolutionMapping> to_efconn(const BmstInstance& inst) {
    SolutionMapping mapping = base_mapping(ReductionKind::EfConn, inst);
    const Cost big = sum_max_cd(inst) + 1;
    mapping.relation = SolutionMapping::ValueRelation::EqualWhenBelow;
    mapping.threshold = big;

    BmstInstance out = inst;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) mapping.edge_origin.push_back(e);
    for (const Edge& fresh : connecting_edges(inst, Owner::Follower)) {
        BmstInstance& t = out;
        std::vector<Edge> edges = t.graph.edges();
        edges.push_back(fresh);
        t.graph = Multigraph(t.vertex_count(), std::move(edges));
        t.owner.push_back(Owner::Follower);
        t.leader_cost.push_back(big);
        t.follower_cost.push_back(big);
        t.pref.push_back(t.edge_count() - 1);  // maximal d, so appending keeps pref consistent
        mapping.edge_origin.push_back(std::nullopt);
    }
    mapping.target = std::move(out);
    return Result<SolutionMapping>::success(std::move(mapping));
}

Result<SolutionMapping> to_elconn(const BmstInstance& inst) {
    SolutionMapping mapping = base_mapping(ReductionKind::ElConn, inst);
    const Cost big = sum_max_cd(inst) + 1;
    mapping.relation = SolutionMapping::ValueRelation::EqualWhenBelow;
    mapping.threshold = big;

    BmstInstance out = inst;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) mapping.edge_origin.push_back(e);
    for (const Edge& fresh : connecting_edges(inst, Owner::Leader)) {
        std::vector<Edge> edges = out.graph.edges();
        edges.push_back(fresh);
        out.graph = Multigraph(out.vertex_count(), std::move(edges));
        out.owner.push_back(Owner::Leader);
        out.leader_cost.push_back(big);
        out.follower_cost.push_back(big);
        mapping.edge_origin.push_back(std::nullopt);
    }
    mapping.target = std::move(out);
    return Result<SolutionMapping>::success(std::move(mapping));
}

Result<SolutionMapping> to_efforest(const BmstInstance& inst) {
    SolutionMapping mapping = base_mapping(ReductionKind::EfForest, inst);

    std::vector<EdgeId> keep_forest = greedy_scan(inst, {}, inst.pref);
    std::vector<bool> keep(static_cast<size_t>(inst.edge_count()), false);
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.is_leader(e)) keep[static_cast<size_t>(e)] = true;
    for (EdgeId e : keep_forest) keep[static_cast<size_t>(e)] = true;

    std::vector<EdgeId> new_id(static_cast<size_t>(inst.edge_count()), -1);
    BmstInstance out;
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!keep[static_cast<size_t>(e)]) continue;
        new_id[static_cast<size_t>(e)] = static_cast<EdgeId>(edges.size());
        edges.push_back(inst.graph.edge(e));
        out.owner.push_back(inst.owner[static_cast<size_t>(e)]);
        out.leader_cost.push_back(inst.c(e));
        out.follower_cost.push_back(inst.d(e));
        mapping.edge_origin.push_back(e);
    }
    out.graph = Multigraph(inst.vertex_count(), std::move(edges));
    for (EdgeId e : inst.pref)
        if (new_id[static_cast<size_t>(e)] != -1) out.pref.push_back(new_id[static_cast<size_t>(e)]);
    mapping.target = std::move(out);
    return Result<SolutionMapping>::success(std::move(mapping));
}

Result<SolutionMapping> to_efmatching(const BmstInstance& inst) {
    using R = Result<SolutionMapping>;
    if (!follower_graph_forest(inst))
        return R::failure(Status::BadArgument, "follower edge set is not a forest");
    SolutionMapping mapping = base_mapping(ReductionKind::EfMatching, inst);

    // Components of (V, E^f) with more than one edge get the split treatment;
    // the root of each is its minimum vertex id.
    std::vector<EdgeId> follower = inst.follower_edges();
    std::vector<int> comp = inst.graph.component_labels(follower);
    int comp_count = 0;
    for (int c : comp) comp_count = std::max(comp_count, c + 1);
    std::vector<int> comp_edges(static_cast<size_t>(comp_count), 0);
    for (EdgeId e : follower) ++comp_edges[static_cast<size_t>(comp[static_cast<size_t>(inst.graph.edge(e).u)])];

    // Orient each follower component away from its root to find, per edge,
    // the endpoint closer to the root.
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<size_t>(inst.vertex_count()));
    for (EdgeId e : follower) {
        adj[static_cast<size_t>(inst.graph.edge(e).u)].push_back({inst.graph.edge(e).v, e});
        adj[static_cast<size_t>(inst.graph.edge(e).v)].push_back({inst.graph.edge(e).u, e});
    }
    std::vector<VertexId> root_side(static_cast<size_t>(inst.edge_count()), -1);
    std::vector<bool> visited(static_cast<size_t>(inst.vertex_count()), false);
    for (VertexId r = 0; r < inst.vertex_count(); ++r) {
        if (visited[static_cast<size_t>(r)]) continue;
        // r is the smallest unvisited vertex of its component, hence its root.
        std::vector<VertexId> stack{r};
        visited[static_cast<size_t>(r)] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                if (visited[static_cast<size_t>(w)]) continue;
                visited[static_cast<size_t>(w)] = true;
                root_side[static_cast<size_t>(e)] = v;
                stack.push_back(w);
            }
        }
    }

    BmstInstance out;
    std::vector<Edge> edges;
    int next_vertex = inst.vertex_count();
    struct PendingLeaderHalf {
        Edge edge;
    };
    std::vector<PendingLeaderHalf> leader_halves;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        const Edge& ed = inst.graph.edge(e);
        bool split = inst.is_follower(e) &&
                     comp_edges[static_cast<size_t>(comp[static_cast<size_t>(ed.u)])] > 1;
        if (!split) {
            edges.push_back(ed);
            out.owner.push_back(inst.owner[static_cast<size_t>(e)]);
            out.leader_cost.push_back(inst.c(e));
            out.follower_cost.push_back(inst.d(e));
            mapping.edge_origin.push_back(e);
            continue;
        }
        VertexId parent = root_side[static_cast<size_t>(e)];
        VertexId child = parent == ed.u ? ed.v : ed.u;
        VertexId middle = next_vertex++;
        // The follower half keeps e's position (and hence its pref slot).
        edges.push_back({middle, child});
        out.owner.push_back(Owner::Follower);
        out.leader_cost.push_back(inst.c(e));
        out.follower_cost.push_back(inst.d(e));
        mapping.edge_origin.push_back(e);
        leader_halves.push_back({Edge{parent, middle}});
    }
    for (const PendingLeaderHalf& half : leader_halves) {
        edges.push_back(half.edge);
        out.owner.push_back(Owner::Leader);
        out.leader_cost.push_back(0);
        out.follower_cost.push_back(0);
        mapping.edge_origin.push_back(std::nullopt);
    }
    out.graph = Multigraph(next_vertex, std::move(edges));
    out.pref = inst.pref;  // follower ids and their order are unchanged
    mapping.added_vertex_count = next_vertex - inst.vertex_count();
    mapping.target = std::move(out);
    return R::success(std::move(mapping));
}

Result<SolutionMapping> to_efall(const BmstInstance& inst) {
    using R = Result<SolutionMapping>;
    if (!follower_graph_connected(inst))
        return R::failure(Status::BadArgument, "follower edge set does not connect the graph");
    SolutionMapping mapping = base_mapping(ReductionKind::EfAll, inst);
    const Cost big = sum_d(inst) + 1;

    BmstInstance out = inst;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) mapping.edge_origin.push_back(e);
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!inst.is_leader(e)) continue;
        const Edge& ed = inst.graph.edge(e);
        bool shadowed = false;
        for (EdgeId f = 0; f < inst.edge_count() && !shadowed; ++f) {
            if (!inst.is_follower(f) || inst.c(f) != inst.c(e)) continue;
            const Edge& fd = inst.graph.edge(f);
            shadowed = (fd.u == ed.u && fd.v == ed.v) || (fd.u == ed.v && fd.v == ed.u);
        }
        if (shadowed) continue;
        std::vector<Edge> edges = out.graph.edges();
        edges.push_back(ed);
        out.graph = Multigraph(out.vertex_count(), std::move(edges));
        out.owner.push_back(Owner::Follower);
        out.leader_cost.push_back(inst.c(e));
        out.follower_cost.push_back(big);
        out.pref.push_back(out.edge_count() - 1);
        mapping.edge_origin.push_back(std::nullopt);
    }
    mapping.target = std::move(out);
    return R::success(std::move(mapping));
}

Result<SolutionMapping> to_uniform(const BmstInstance& inst, Cost budget) {
    using R = Result<SolutionMapping>;
    if (!follower_graph_connected(inst))
        return R::failure(Status::BadArgument, "follower edge set does not connect the graph");
    Cost path_total = 0;
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.is_leader(e)) path_total += inst.c(e);
    if (path_total > budget) return R::failure(Status::CapExceeded, "total leader cost exceeds the budget");

    SolutionMapping mapping = base_mapping(ReductionKind::Uniform, inst);
    const Cost big = sum_d(inst) + 1;

    // Contract the zero-cost leader edges.
    std::vector<EdgeId> zero_edges;
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.is_leader(e) && inst.c(e) == 0) zero_edges.push_back(e);
    mapping.vertex_map = inst.graph.component_labels(zero_edges);
    int quotient_n = 0;
    for (int label : mapping.vertex_map) quotient_n = std::max(quotient_n, label + 1);
    mapping.zero_forest = spanning_forest(inst.graph, {}, zero_edges);

    mapping.leader_paths.assign(static_cast<size_t>(inst.edge_count()), {});
    BmstInstance out;
    std::vector<Edge> edges;
    int next_vertex = quotient_n;
    struct FreshFollower {
        Edge edge;
    };
    std::vector<FreshFollower> fresh_followers;
    std::vector<EdgeId> new_id(static_cast<size_t>(inst.edge_count()), -1);

    auto push_edge = [&](Edge ed, Owner owner, Cost c, Cost d, std::optional<EdgeId> origin) {
        edges.push_back(ed);
        out.owner.push_back(owner);
        out.leader_cost.push_back(c);
        out.follower_cost.push_back(d);
        mapping.edge_origin.push_back(origin);
        return static_cast<EdgeId>(edges.size() - 1);
    };

    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        VertexId qu = mapping.vertex_map[static_cast<size_t>(inst.graph.edge(e).u)];
        VertexId qv = mapping.vertex_map[static_cast<size_t>(inst.graph.edge(e).v)];
        if (qu == qv) continue;  // contracted away or a contraction loop
        if (inst.is_follower(e)) {
            new_id[static_cast<size_t>(e)] = push_edge({qu, qv}, Owner::Follower, inst.c(e), inst.d(e), e);
            continue;
        }
        // Leader edge with c >= 1: a path of c unit edges from qu to qv whose
        // interior vertices are tied to qu by fresh follower edges.
        const Cost length = inst.c(e);
        VertexId at = qu;
        for (Cost step = 0; step < length; ++step) {
            VertexId to = step + 1 == length ? qv : next_vertex++;
            EdgeId id = push_edge({at, to}, Owner::Leader, 1, inst.d(e), e);
            mapping.leader_paths[static_cast<size_t>(e)].push_back(id);
            if (to != qv) fresh_followers.push_back({Edge{to, qu}});
            at = to;
        }
    }
    for (const FreshFollower& fresh : fresh_followers)
        push_edge(fresh.edge, Owner::Follower, 0, big, std::nullopt);

    out.graph = Multigraph(next_vertex, std::move(edges));
    for (EdgeId e : inst.pref)
        if (new_id[static_cast<size_t>(e)] != -1) out.pref.push_back(new_id[static_cast<size_t>(e)]);
    for (EdgeId e = 0; e < out.edge_count(); ++e)
        if (out.owner[static_cast<size_t>(e)] == Owner::Follower && !mapping.edge_origin[static_cast<size_t>(e)])
            out.pref.push_back(e);
    mapping.added_vertex_count = next_vertex - quotient_n;
    mapping.target = std::move(out);
    return R::success(std::move(mapping));
}

Result<SolutionMapping> apply_reduction(const BmstInstance& inst, ReductionKind kind, const Caps& caps) {
    switch (kind) {
        case ReductionKind::EfConn: return to_efconn(inst);
        case ReductionKind::ElConn: return to_elconn(inst);
        case ReductionKind::EfForest: return to_efforest(inst);
        case ReductionKind::EfMatching: return to_efmatching(inst);
        case ReductionKind::EfAll: return to_efall(inst);
        case ReductionKind::Uniform: return to_uniform(inst, caps.uniform_cost_budget);
    }
    return Result<SolutionMapping>::failure(Status::BadArgument, "unknown reduction");
}

Result<SolveReport> pull_back(const SolutionMapping& mapping, const SolveReport& target_report,
                              const ObjectiveSpec& spec) {
    using R = Result<SolveReport>;
    if (mapping.relation == SolutionMapping::ValueRelation::EqualWhenBelow &&
        target_report.leader_value >= mapping.threshold)
        return R::failure(Status::Infeasible,
                          "target value reaches the fresh-edge threshold; no source solution corresponds");

    std::vector<EdgeId> choice;
    if (mapping.kind == ReductionKind::Uniform) {
        for (EdgeId e = 0; e < mapping.source.edge_count(); ++e) {
            const auto& path = mapping.leader_paths[static_cast<size_t>(e)];
            if (path.empty()) continue;
            bool whole = true;
            for (EdgeId part : path)
                whole = whole && std::binary_search(target_report.choice.begin(), target_report.choice.end(), part);
            if (whole) choice.push_back(e);
        }
        for (EdgeId e : mapping.zero_forest) choice.push_back(e);
        std::sort(choice.begin(), choice.end());
    } else {
        for (EdgeId e : target_report.choice) {
            const auto& origin = mapping.edge_origin[static_cast<size_t>(e)];
            if (origin) choice.push_back(*origin);
        }
        std::sort(choice.begin(), choice.end());
    }

    auto response = respond(mapping.source, choice, spec);
    if (!response.ok()) return R::failure(response.status, response.message);
    auto values = evaluate(mapping.source, choice, *response.value, spec);
    if (!values.ok()) return R::failure(values.status, values.message);

    SolveReport report;
    report.choice = std::move(choice);
    report.response = std::move(*response.value);
    report.leader_value = values.value->first;
    report.follower_value = values.value->second;
    report.method = target_report.method;
    report.feasible = true;
    return R::success(std::move(report));
}

}  // namespace bmst
