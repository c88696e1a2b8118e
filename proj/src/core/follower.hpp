#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/instance.hpp"
#include "core/types.hpp"

namespace bmst {

/// The raw greedy scan: walks the follower edges in the given order and adds
/// each edge iff it joins two distinct components of (V, choice + added).
/// Produces a forest even when the choice cannot be completed to a tree.
std::vector<EdgeId> greedy_scan(const BmstInstance& inst, std::span<const EdgeId> choice,
                                std::span<const EdgeId> order);

/// Sum-objective follower response; nullopt when the choice is not valid for
/// the leader (the scan does not reach a spanning tree).
std::optional<std::vector<EdgeId>> greedy_response(const BmstInstance& inst,
                                                   std::span<const EdgeId> choice,
                                                   std::span<const EdgeId> order);

/// True iff choice + all follower edges connect every vertex.
bool feasible(const BmstInstance& inst, std::span<const EdgeId> choice);

/// Bottleneck-objective follower response. Among the completions minimizing
/// the follower's bottleneck (over Y, or over X+Y per scope), returns the one
/// an optimistic (pessimistic) follower picks for the given leader form.
std::optional<std::vector<EdgeId>> bottleneck_response(const BmstInstance& inst,
                                                       std::span<const EdgeId> choice,
                                                       FollowerScope scope, TieMode tie,
                                                       ObjectiveForm leader_form);

/// Dispatches to the greedy or bottleneck oracle per the objective spec.
Result<std::vector<EdgeId>> respond(const BmstInstance& inst, std::span<const EdgeId> choice,
                                    const ObjectiveSpec& spec);

}  // namespace bmst
