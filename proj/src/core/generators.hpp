#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/instance.hpp"
#include "core/io.hpp"
#include "core/types.hpp"

namespace bmst {

enum class FollowerTopology : unsigned char { Path, Star, Arbitrary };

std::optional<FollowerTopology> topology_from_name(const std::string& name);

/// Steiner-forest hardness construction: the leader owns the input graph at
/// its edge lengths; the follower owns a spanning tree made of per-class
/// connectors at cost M / 0 plus filler edges at cost 0 / 1. The optimum of
/// the produced instance (sum/sum) equals the Steiner forest optimum.
Result<BmstInstance> gen_from_steiner_forest(const SteinerInput& input, FollowerTopology topology,
                                             std::uint64_t seed = 0);

/// Same construction with all follower costs zero; the equality then holds
/// for a sum leader against a pessimistic bottleneck follower.
Result<BmstInstance> gen_sum_bn_pess_from_sf(const SteinerInput& input, FollowerTopology topology,
                                             std::uint64_t seed = 0);

struct BmstrInstance {
    BmstInstance instance;
    EdgeId ybar;  // the one follower edge the leader tries to enforce
};

/// Response-enforcement hardness construction from a two-set disjoint-trees
/// instance: zero-cost follower paths along each terminal set plus one unit
/// bridge; the bridge is enforceable iff disjoint trees exist.
Result<BmstrInstance> gen_bmstr_from_vdst(const SteinerInput& input);

/// Shortest-disjoint-trees construction: an auxiliary star vertex, original
/// edges shifted by M, per-set spanning trees at M*|V| and a chain of free
/// switch edges. When disjoint trees exist the optima differ by exactly
/// M*(|V|-k), otherwise the instance optimum is at least M*(|V|-k+1).
Result<BmstInstance> gen_from_svdst(const SteinerInput& input);

/// Bottleneck/bottleneck-optimistic hardness construction from a two-set
/// disjoint-trees instance; the optimum is 0 iff disjoint trees exist, else 1.
Result<BmstInstance> gen_bnbn_opt_from_vdst(const SteinerInput& input);

/// Seeded random connected instance: a random spanning tree, extra random
/// edges, random ownership of the requested sizes and uniform random costs.
Result<BmstInstance> gen_random(std::uint64_t seed, int n, int leader_edges, int follower_edges,
                                Cost c_max, Cost d_max);

}  // namespace bmst
