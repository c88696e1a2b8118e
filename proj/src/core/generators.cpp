#include "core/generators.hpp"

#include <algorithm>
#include <numeric>

#include "core/rng.hpp"

namespace bmst {

std::optional<FollowerTopology> topology_from_name(const std::string& name) {
    if (name == "path") return FollowerTopology::Path;
    if (name == "star") return FollowerTopology::Star;
    if (name == "arbitrary") return FollowerTopology::Arbitrary;
    return std::nullopt;
}

namespace {

Cost total_input_length(const SteinerInput& input) {
    Cost total = 0;
    for (Cost len : input.length) total += len;
    return total;
}

Result<bool> check_input(const SteinerInput& input, bool need_connected) {
    using R = Result<bool>;
    if (need_connected && !input.graph.connected())
        return R::failure(Status::BadArgument, "input graph must be connected");
    return R::success(true);
}

struct InstanceBuilder {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Owner> owner;
    std::vector<Cost> c, d;

    EdgeId add(VertexId u, VertexId v, Owner who, Cost leader_cost, Cost follower_cost) {
        edges.push_back({u, v});
        owner.push_back(who);
        c.push_back(leader_cost);
        d.push_back(follower_cost);
        return static_cast<EdgeId>(edges.size() - 1);
    }

    Result<BmstInstance> finish() {
        BmstInstance inst;
        inst.graph = Multigraph(n, std::move(edges));
        inst.owner = std::move(owner);
        inst.leader_cost = std::move(c);
        inst.follower_cost = std::move(d);
        inst.pref = default_pref(inst.graph, inst.owner, inst.leader_cost, inst.follower_cost);
        if (auto err = validate(inst))
            return Result<BmstInstance>::failure(Status::InvalidInstance, *err);
        return Result<BmstInstance>::success(std::move(inst));
    }
};

// The filler edges turning the per-class connectors into a spanning tree of
// the whole vertex set, per the requested shape of the follower's tree.
struct FollowerTree {
    std::vector<Edge> class_edges;  // spanning tree per terminal set
    std::vector<Edge> filler;       // remaining edges to a spanning tree on V
};

Result<FollowerTree> build_follower_tree(const SteinerInput& input, FollowerTopology topology,
                                         std::uint64_t seed) {
    using R = Result<FollowerTree>;
    const int n = input.graph.vertex_count();
    FollowerTree out;
    std::vector<bool> is_terminal(static_cast<size_t>(n), false);
    for (const auto& cls : input.terminal_sets)
        for (VertexId v : cls) is_terminal[static_cast<size_t>(v)] = true;
    std::vector<VertexId> non_terminals;
    for (VertexId v = 0; v < n; ++v)
        if (!is_terminal[static_cast<size_t>(v)]) non_terminals.push_back(v);

    switch (topology) {
        case FollowerTopology::Path: {
            // One long path: each class in sorted order, classes chained in
            // input order, non-terminals threaded onto the end.
            std::vector<VertexId> walk;
            for (const auto& cls : input.terminal_sets) {
                std::vector<VertexId> sorted(cls.begin(), cls.end());
                std::sort(sorted.begin(), sorted.end());
                for (size_t i = 1; i < sorted.size(); ++i)
                    out.class_edges.push_back({sorted[i - 1], sorted[i]});
                if (!walk.empty()) out.filler.push_back({walk.back(), sorted.front()});
                walk.insert(walk.end(), sorted.begin(), sorted.end());
            }
            for (VertexId v : non_terminals) {
                if (!walk.empty()) out.filler.push_back({walk.back(), v});
                walk.push_back(v);
            }
            return R::success(std::move(out));
        }
        case FollowerTopology::Star: {
            if (input.terminal_sets.size() != 1)
                return R::failure(Status::BadArgument, "star topology requires a single terminal set");
            std::vector<VertexId> sorted(input.terminal_sets[0].begin(), input.terminal_sets[0].end());
            std::sort(sorted.begin(), sorted.end());
            VertexId center = sorted.front();
            for (size_t i = 1; i < sorted.size(); ++i) out.class_edges.push_back({center, sorted[i]});
            for (VertexId v : non_terminals) out.filler.push_back({center, v});
            return R::success(std::move(out));
        }
        case FollowerTopology::Arbitrary: {
            Rng rng(seed);
            // Random tree per class, then random attachments of the class
            // blocks and the non-terminals.
            std::vector<std::vector<VertexId>> blocks;
            for (const auto& cls : input.terminal_sets) {
                std::vector<VertexId> sorted(cls.begin(), cls.end());
                std::sort(sorted.begin(), sorted.end());
                for (size_t i = 1; i < sorted.size(); ++i)
                    out.class_edges.push_back({sorted[static_cast<size_t>(rng.below(static_cast<int>(i)))], sorted[i]});
                blocks.push_back(sorted);
            }
            for (VertexId v : non_terminals) blocks.push_back({v});
            std::vector<VertexId> merged;
            for (size_t b = 0; b < blocks.size(); ++b) {
                if (b > 0) {
                    VertexId from = merged[static_cast<size_t>(rng.below(static_cast<int>(merged.size())))];
                    VertexId to = blocks[b][static_cast<size_t>(rng.below(static_cast<int>(blocks[b].size())))];
                    out.filler.push_back({from, to});
                }
                merged.insert(merged.end(), blocks[b].begin(), blocks[b].end());
            }
            return R::success(std::move(out));
        }
    }
    return R::failure(Status::BadArgument, "unknown topology");
}

Result<BmstInstance> sf_construction(const SteinerInput& input, FollowerTopology topology,
                                     std::uint64_t seed, bool zero_follower_cost) {
    using R = Result<BmstInstance>;
    if (auto chk = check_input(input, true); !chk.ok()) return R::failure(chk.status, chk.message);
    if (input.terminal_sets.empty()) return R::failure(Status::BadArgument, "at least one terminal set required");
    auto tree = build_follower_tree(input, topology, seed);
    if (!tree.ok()) return R::failure(tree.status, tree.message);

    const Cost big = total_input_length(input) + 1;
    InstanceBuilder builder;
    builder.n = input.graph.vertex_count();
    for (EdgeId e = 0; e < input.graph.edge_count(); ++e)
        builder.add(input.graph.edge(e).u, input.graph.edge(e).v, Owner::Leader,
                    input.length[static_cast<size_t>(e)], 0);
    for (const Edge& ed : tree.value->class_edges) builder.add(ed.u, ed.v, Owner::Follower, big, 0);
    for (const Edge& ed : tree.value->filler)
        builder.add(ed.u, ed.v, Owner::Follower, 0, zero_follower_cost ? 0 : 1);
    return builder.finish();
}

}  // namespace

Result<BmstInstance> gen_from_steiner_forest(const SteinerInput& input, FollowerTopology topology,
                                             std::uint64_t seed) {
    return sf_construction(input, topology, seed, false);
}

Result<BmstInstance> gen_sum_bn_pess_from_sf(const SteinerInput& input, FollowerTopology topology,
                                             std::uint64_t seed) {
    return sf_construction(input, topology, seed, true);
}

Result<BmstrInstance> gen_bmstr_from_vdst(const SteinerInput& input) {
    using R = Result<BmstrInstance>;
    if (auto chk = check_input(input, true); !chk.ok()) return R::failure(chk.status, chk.message);
    if (input.terminal_sets.size() != 2)
        return R::failure(Status::BadArgument, "exactly two terminal sets required");

    InstanceBuilder builder;
    builder.n = input.graph.vertex_count();
    // Leader costs are irrelevant for response enforcement.
    for (EdgeId e = 0; e < input.graph.edge_count(); ++e)
        builder.add(input.graph.edge(e).u, input.graph.edge(e).v, Owner::Leader, 0, 0);
    // Zero-cost follower paths along each set, in the listed terminal order.
    for (const auto& cls : input.terminal_sets)
        for (size_t i = 1; i < cls.size(); ++i) builder.add(cls[i - 1], cls[i], Owner::Follower, 0, 0);
    EdgeId bridge = builder.add(input.terminal_sets[0][0], input.terminal_sets[1][0], Owner::Follower, 0, 1);

    auto inst = builder.finish();
    if (!inst.ok()) return R::failure(inst.status, inst.message);
    return R::success({std::move(*inst.value), bridge});
}

Result<BmstInstance> gen_from_svdst(const SteinerInput& input) {
    using R = Result<BmstInstance>;
    if (auto chk = check_input(input, true); !chk.ok()) return R::failure(chk.status, chk.message);
    if (input.terminal_sets.empty()) return R::failure(Status::BadArgument, "at least one terminal set required");

    const int n = input.graph.vertex_count();
    const VertexId hub = n;  // the added vertex s0
    const Cost big = total_input_length(input) + 1;

    std::vector<bool> is_terminal(static_cast<size_t>(n), false);
    for (const auto& cls : input.terminal_sets)
        for (VertexId v : cls) is_terminal[static_cast<size_t>(v)] = true;

    InstanceBuilder builder;
    builder.n = n + 1;
    for (EdgeId e = 0; e < input.graph.edge_count(); ++e)
        builder.add(input.graph.edge(e).u, input.graph.edge(e).v, Owner::Leader,
                    input.length[static_cast<size_t>(e)] + big, 0);
    for (VertexId v = 0; v < n; ++v)
        if (!is_terminal[static_cast<size_t>(v)]) builder.add(hub, v, Owner::Leader, big, 0);

    // Spanning tree per terminal set (a path over the sorted vertices).
    for (const auto& cls : input.terminal_sets) {
        std::vector<VertexId> sorted(cls.begin(), cls.end());
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i)
            builder.add(sorted[i - 1], sorted[i], Owner::Follower, big * n, 0);
    }
    // The chain of free switch edges s0 - s1 - ... - sk.
    VertexId previous = hub;
    for (const auto& cls : input.terminal_sets) {
        VertexId anchor = *std::min_element(cls.begin(), cls.end());
        builder.add(previous, anchor, Owner::Follower, 0, 1);
        previous = anchor;
    }
    return builder.finish();
}

Result<BmstInstance> gen_bnbn_opt_from_vdst(const SteinerInput& input) {
    using R = Result<BmstInstance>;
    if (auto chk = check_input(input, true); !chk.ok()) return R::failure(chk.status, chk.message);
    if (input.terminal_sets.size() != 2)
        return R::failure(Status::BadArgument, "exactly two terminal sets required");

    const int n = input.graph.vertex_count();
    const VertexId hub = n;  // the added vertex s0
    const VertexId s1 = input.terminal_sets[0][0];
    const VertexId s1p = input.terminal_sets[1][0];

    InstanceBuilder builder;
    builder.n = n + 1;
    for (EdgeId e = 0; e < input.graph.edge_count(); ++e)
        builder.add(input.graph.edge(e).u, input.graph.edge(e).v, Owner::Leader, 0, 0);
    for (const auto& cls : input.terminal_sets)
        for (size_t i = 1; i < cls.size(); ++i) builder.add(cls[i - 1], cls[i], Owner::Follower, 1, 0);
    builder.add(s1, s1p, Owner::Follower, 0, 1);
    builder.add(hub, s1, Owner::Follower, 0, 1);
    builder.add(hub, s1p, Owner::Follower, 1, 0);
    return builder.finish();
}

Result<BmstInstance> gen_random(std::uint64_t seed, int n, int leader_edges, int follower_edges,
                                Cost c_max, Cost d_max) {
    using R = Result<BmstInstance>;
    if (n < 1 || leader_edges < 0 || follower_edges < 0 || c_max < 0 || d_max < 0)
        return R::failure(Status::BadArgument, "parameters must be non-negative and n >= 1");
    const int m = leader_edges + follower_edges;
    if (m < n - 1) return R::failure(Status::BadArgument, "too few edges for a connected graph");
    if (n == 1 && m > 0) return R::failure(Status::BadArgument, "a single vertex admits no edges");

    Rng rng(seed);
    InstanceBuilder builder;
    builder.n = n;

    std::vector<size_t> slots(static_cast<size_t>(m));
    std::iota(slots.begin(), slots.end(), 0);
    rng.shuffle(slots);
    std::vector<Owner> owner_of_slot(static_cast<size_t>(m), Owner::Follower);
    for (int i = 0; i < leader_edges; ++i) owner_of_slot[slots[static_cast<size_t>(i)]] = Owner::Leader;

    for (int v = 1; v < n; ++v) {
        VertexId u = rng.below(v);
        builder.add(u, v, owner_of_slot[static_cast<size_t>(v - 1)], rng.cost_upto(c_max),
                    rng.cost_upto(d_max));
    }
    for (int i = n - 1; i < m; ++i) {
        VertexId u = rng.below(n);
        VertexId v = rng.below(n - 1);
        if (v >= u) ++v;
        builder.add(u, v, owner_of_slot[static_cast<size_t>(i)], rng.cost_upto(c_max), rng.cost_upto(d_max));
    }
    return builder.finish();
}

}  // namespace bmst
