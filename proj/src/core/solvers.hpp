#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/instance.hpp"
#include "core/types.hpp"

namespace bmst {

/// Enumerates every acyclic leader choice (lexicographically, with cycle
/// prefixes pruned), computes the spec-appropriate follower response and
/// returns the best report. The universal oracle for all objective variants.
Result<SolveReport> solve_bruteforce(const BmstInstance& inst, const ObjectiveSpec& spec,
                                     const Caps& caps = {});

struct EnforceableResponse {
    std::vector<EdgeId> response;  // sorted
    std::vector<EdgeId> witness;   // a feasible leader choice inducing it, sorted
};

/// All follower responses the leader can enforce with a feasible choice,
/// found by enumerating partitions of the follower-incident vertices and
/// solving a vertex-disjoint connecting-forest problem per partition.
/// Responses are computed with the given preference order.
Result<std::vector<EnforceableResponse>> enumerate_enforceable(const BmstInstance& inst,
                                                               std::span<const EdgeId> order,
                                                               const Caps& caps = {});

/// Can the leader force the response to be exactly ybar? Returns a witness
/// choice or nullopt for "no". Uses the instance preference order.
Result<std::optional<std::vector<EdgeId>>> bmstr_decide(const BmstInstance& inst,
                                                        std::span<const EdgeId> ybar,
                                                        const Caps& caps = {});

/// Exact solver for instances with constant leader cost, parameterized by the
/// number of follower edges: every spanning tree has n-1 edges, so the value
/// of an enforceable response Y is cbar * (n-1-|Y|) + c(Y).
Result<SolveReport> solve_uniform_fpt(const BmstInstance& inst, const ObjectiveSpec& spec,
                                      const Caps& caps = {});

/// Bottleneck leader, sum follower: thresholds the leader edge costs and
/// picks a maximal forest of each threshold set.
Result<SolveReport> solve_bn_sum(const BmstInstance& inst, TieMode tie);

/// Bottleneck leader and follower, pessimistic: enumerates cost-threshold
/// pairs (e_c, e_d) plus the empty choice.
Result<SolveReport> solve_bnbn_pess(const BmstInstance& inst, FollowerScope scope);

}  // namespace bmst
