#pragma once

#include <span>
#include <utility>

#include "core/instance.hpp"
#include "core/types.hpp"

namespace bmst {

/// Leader and follower objective values of a spanning tree X + Y under the
/// given spec. Max over an empty set is 0. Rejects non-spanning-tree input.
Result<std::pair<Cost, Cost>> evaluate(const BmstInstance& inst, std::span<const EdgeId> choice,
                                       std::span<const EdgeId> response, const ObjectiveSpec& spec);

/// True iff the edge sets together form a spanning tree with the right owners.
bool is_spanning_tree(const BmstInstance& inst, std::span<const EdgeId> choice,
                      std::span<const EdgeId> response);

}  // namespace bmst
