#include "core/follower.hpp"

#include <algorithm>
#include <tuple>

#include "core/dsu.hpp"

namespace bmst {

namespace {

DisjointSets components_of(const BmstInstance& inst, std::span<const EdgeId> choice) {
    DisjointSets sets(inst.vertex_count());
    for (EdgeId e : choice) sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v);
    return sets;
}

}  // namespace

std::vector<EdgeId> greedy_scan(const BmstInstance& inst, std::span<const EdgeId> choice,
                                std::span<const EdgeId> order) {
    DisjointSets sets = components_of(inst, choice);
    std::vector<EdgeId> taken;
    for (EdgeId e : order) {
        if (sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) taken.push_back(e);
    }
    return taken;
}

std::optional<std::vector<EdgeId>> greedy_response(const BmstInstance& inst,
                                                   std::span<const EdgeId> choice,
                                                   std::span<const EdgeId> order) {
    DisjointSets sets = components_of(inst, choice);
    std::vector<EdgeId> taken;
    for (EdgeId e : order) {
        if (sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) taken.push_back(e);
    }
    if (sets.component_count() != 1) return std::nullopt;
    std::sort(taken.begin(), taken.end());
    return taken;
}

bool feasible(const BmstInstance& inst, std::span<const EdgeId> choice) {
    DisjointSets sets = components_of(inst, choice);
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.is_follower(e)) sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v);
    return sets.component_count() == 1;
}

namespace {

// Position of each follower edge in the instance preference order; used as
// the secondary sort key inside the extremal completions so equal-cost
// choices land on the edge the follower's order favors.
std::vector<int> pref_positions(const BmstInstance& inst) {
    std::vector<int> pos(static_cast<size_t>(inst.edge_count()), 0);
    for (size_t i = 0; i < inst.pref.size(); ++i) pos[static_cast<size_t>(inst.pref[i])] = static_cast<int>(i);
    return pos;
}

// Minimal follower bottleneck over completions of the choice: the smallest
// d-threshold whose edge set connects everything. nullopt when even the full
// follower edge set does not.
std::optional<Cost> completion_threshold(const BmstInstance& inst, std::span<const EdgeId> choice) {
    DisjointSets sets(inst.vertex_count());
    for (EdgeId e : choice) sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v);
    if (sets.component_count() == 1) return 0;

    // Scanning the pref order visits follower edges by ascending d, so the
    // d-value closing the last gap is exactly the minimal threshold.
    Cost threshold = 0;
    for (EdgeId e : inst.pref) {
        if (sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) {
            threshold = std::max(threshold, inst.d(e));
            if (sets.component_count() == 1) return threshold;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<EdgeId>> bottleneck_response(const BmstInstance& inst,
                                                       std::span<const EdgeId> choice,
                                                       FollowerScope scope, TieMode tie,
                                                       ObjectiveForm leader_form) {
    (void)leader_form;  // min-c and max-c garland completions are extremal for both forms
    std::optional<Cost> own = completion_threshold(inst, choice);
    if (!own) return std::nullopt;

    Cost usable_below = *own;
    if (scope == FollowerScope::AllEdges) {
        // The follower pays for the leader's edges too, so any completion not
        // exceeding the choice's own worst edge is equally optimal for him.
        Cost choice_max = 0;
        for (EdgeId e : choice) choice_max = std::max(choice_max, inst.d(e));
        usable_below = std::max(usable_below, choice_max);
    }

    std::vector<EdgeId> usable;
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.is_follower(e) && inst.d(e) <= usable_below) usable.push_back(e);

    // Extremal completion: min-weight basis for the optimistic follower,
    // max-weight basis for the pessimistic one. A max-weight basis also
    // contains the most expensive usable edge, so the same scan settles the
    // bottleneck leader form.
    const std::vector<int> pos = pref_positions(inst);
    const Cost sign = tie == TieMode::Pessimistic ? -1 : 1;
    std::sort(usable.begin(), usable.end(), [&](EdgeId a, EdgeId b) {
        return std::make_tuple(sign * inst.c(a), pos[static_cast<size_t>(a)], a) <
               std::make_tuple(sign * inst.c(b), pos[static_cast<size_t>(b)], b);
    });

    DisjointSets sets(inst.vertex_count());
    for (EdgeId e : choice) sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v);
    std::vector<EdgeId> taken;
    for (EdgeId e : usable) {
        if (sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) taken.push_back(e);
    }
    if (sets.component_count() != 1) return std::nullopt;  // unreachable once own threshold exists
    std::sort(taken.begin(), taken.end());
    return taken;
}

Result<std::vector<EdgeId>> respond(const BmstInstance& inst, std::span<const EdgeId> choice,
                                    const ObjectiveSpec& spec) {
    using R = Result<std::vector<EdgeId>>;
    std::optional<std::vector<EdgeId>> y;
    if (spec.follower_form == ObjectiveForm::Sum) {
        std::vector<EdgeId> order = effective_pref(inst, spec.tie_mode);
        y = greedy_response(inst, choice, order);
    } else {
        if (spec.tie_mode == TieMode::FixedOrder)
            return R::failure(Status::BadArgument,
                              "bottleneck follower requires optimistic or pessimistic tie mode");
        y = bottleneck_response(inst, choice, spec.follower_scope, spec.tie_mode, spec.leader_form);
    }
    if (!y) return R::failure(Status::Infeasible, "leader choice admits no spanning completion");
    return R::success(std::move(*y));
}

}  // namespace bmst
