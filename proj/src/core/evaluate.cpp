#include "core/evaluate.hpp"

#include <algorithm>

#include "core/dsu.hpp"

namespace bmst {

bool is_spanning_tree(const BmstInstance& inst, std::span<const EdgeId> choice,
                      std::span<const EdgeId> response) {
    if (static_cast<int>(choice.size() + response.size()) != inst.vertex_count() - 1) return false;
    DisjointSets sets(inst.vertex_count());
    for (EdgeId e : choice) {
        if (e < 0 || e >= inst.edge_count() || !inst.is_leader(e)) return false;
        if (!sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) return false;
    }
    for (EdgeId e : response) {
        if (e < 0 || e >= inst.edge_count() || !inst.is_follower(e)) return false;
        if (!sets.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) return false;
    }
    return sets.component_count() == 1;
}

Result<std::pair<Cost, Cost>> evaluate(const BmstInstance& inst, std::span<const EdgeId> choice,
                                       std::span<const EdgeId> response, const ObjectiveSpec& spec) {
    using R = Result<std::pair<Cost, Cost>>;
    if (!is_spanning_tree(inst, choice, response))
        return R::failure(Status::BadArgument, "choice and response do not form a spanning tree");

    Cost leader = 0;
    if (spec.leader_form == ObjectiveForm::Sum) {
        for (EdgeId e : choice) leader += inst.c(e);
        for (EdgeId e : response) leader += inst.c(e);
    } else {
        for (EdgeId e : choice) leader = std::max(leader, inst.c(e));
        for (EdgeId e : response) leader = std::max(leader, inst.c(e));
    }

    Cost follower = 0;
    if (spec.follower_form == ObjectiveForm::Sum) {
        for (EdgeId e : response) follower += inst.d(e);
    } else {
        for (EdgeId e : response) follower = std::max(follower, inst.d(e));
        if (spec.follower_scope == FollowerScope::AllEdges)
            for (EdgeId e : choice) follower = std::max(follower, inst.d(e));
    }
    return R::success({leader, follower});
}

}  // namespace bmst
