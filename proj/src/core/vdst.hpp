#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/multigraph.hpp"
#include "core/types.hpp"

namespace bmst {

struct DisjointForests {
    std::vector<std::vector<EdgeId>> trees;  // one per terminal set, sorted
    Cost total_length = 0;                   // meaningful when lengths were given
};

/// Vertex-disjoint trees, one spanning each terminal set. Without lengths the
/// first feasible assignment (in lexicographic vertex-labeling order) wins;
/// with lengths the trees minimize total length. Exhaustive search over
/// vertex-to-class assignments with a node budget.
Result<DisjointForests> disjoint_connecting_forests(const Multigraph& graph,
                                                    const std::vector<std::vector<VertexId>>& terminal_sets,
                                                    std::optional<std::span<const Cost>> lengths,
                                                    std::int64_t node_budget = 4'000'000);

}  // namespace bmst
