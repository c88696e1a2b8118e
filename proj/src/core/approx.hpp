#pragma once

#include "core/instance.hpp"
#include "core/types.hpp"

namespace bmst {

/// Polynomial (n-1)-approximation for the sum/sum objective: per iteration,
/// prune E^f to the greedy forest, take the leader part of a minimum spanning
/// tree into the choice and contract it.
Result<SolveReport> approx_contraction(const BmstInstance& inst, TieMode tie = TieMode::FixedOrder);

/// 2-approximation parameterized by the number of follower edges: enumerate
/// the partitions of the follower-incident vertices and solve an SF+ instance
/// on the leader graph per partition.
Result<SolveReport> approx_fpt2(const BmstInstance& inst, TieMode tie = TieMode::FixedOrder,
                                const Caps& caps = {});

}  // namespace bmst
