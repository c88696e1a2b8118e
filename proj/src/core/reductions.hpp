#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/instance.hpp"
#include "core/types.hpp"

namespace bmst {

enum class ReductionKind : unsigned char { EfConn, ElConn, EfForest, EfMatching, EfAll, Uniform };

const char* reduction_name(ReductionKind kind);
std::optional<ReductionKind> reduction_from_name(const std::string& name);

/// The pull-back data a reduction emits: the transformed instance plus enough
/// bookkeeping to map its leader choices onto choices of the source instance.
struct SolutionMapping {
    ReductionKind kind = ReductionKind::EfConn;
    BmstInstance source;
    BmstInstance target;

    enum class ValueRelation : unsigned char { Equal, EqualWhenBelow };
    ValueRelation relation = ValueRelation::Equal;
    Cost threshold = 0;  // the M bound for EqualWhenBelow

    int added_vertex_count = 0;
    std::vector<int> vertex_map;                     // source vertex -> target vertex
    std::vector<std::optional<EdgeId>> edge_origin;  // target edge -> source edge (nullopt = fresh)

    // Uniform reduction only: target path per source leader edge (empty when
    // the edge was contracted away or dropped) and the zero-cost leader forest
    // every pulled-back choice is completed with.
    std::vector<std::vector<EdgeId>> leader_paths;
    std::vector<EdgeId> zero_forest;
};

/// Make (V, E^f) connected by adding fresh follower edges at cost M each.
Result<SolutionMapping> to_efconn(const BmstInstance& inst);

/// Make (V, E^l) connected by adding fresh leader edges at cost M each.
Result<SolutionMapping> to_elconn(const BmstInstance& inst);

/// Restrict E^f to the greedy forest the follower builds against X = {}.
Result<SolutionMapping> to_efforest(const BmstInstance& inst);

/// Split every follower edge of a multi-edge follower component into a
/// zero-cost leader half (root side) and a follower half, making E^f a
/// matching. Requires (V, E^f) to be a forest.
Result<SolutionMapping> to_efmatching(const BmstInstance& inst);

/// Give every leader edge a parallel follower twin of equal leader cost and
/// follower cost M. Requires (V, E^f) connected.
Result<SolutionMapping> to_efall(const BmstInstance& inst);

/// Contract zero-cost leader edges and split each remaining leader edge into
/// a unit-cost path whose interior vertices hang off fresh follower edges.
/// Requires (V, E^f) connected and total leader cost within the budget.
Result<SolutionMapping> to_uniform(const BmstInstance& inst, Cost budget = Caps{}.uniform_cost_budget);

Result<SolutionMapping> apply_reduction(const BmstInstance& inst, ReductionKind kind,
                                        const Caps& caps = {});

/// Maps a report for the transformed instance back onto the source instance,
/// recomputing the response with the source follower oracle.
Result<SolveReport> pull_back(const SolutionMapping& mapping, const SolveReport& target_report,
                              const ObjectiveSpec& spec = {});

}  // namespace bmst
