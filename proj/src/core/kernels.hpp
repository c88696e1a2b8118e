#pragma once

#include <functional>
#include <span>
#include <vector>

#include "core/multigraph.hpp"
#include "core/types.hpp"

namespace bmst {

/// Kruskal spanning tree minimizing total weight; ties resolved by position
/// in tie_order (a permutation of the edge ids). Fails on disconnected input.
Result<std::vector<EdgeId>> mst(const Multigraph& graph, std::span<const Cost> weights,
                                std::span<const EdgeId> tie_order);

/// Maximal spanning forest of the subgraph induced by candidate edges, taken
/// in the given order, optionally seeded with edges that are always included.
std::vector<EdgeId> spanning_forest(const Multigraph& graph, std::span<const EdgeId> seed,
                                    std::span<const EdgeId> candidates_in_order);

/// Enumerates all partitions of {0..n-1} into non-empty classes via
/// restricted growth strings in lexicographic order. The callback receives
/// the class label of each element plus the class count; returning false
/// stops the enumeration.
void for_each_partition(int n, const std::function<bool(std::span<const int>, int)>& visit);

}  // namespace bmst
