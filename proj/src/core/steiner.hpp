#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/multigraph.hpp"
#include "core/types.hpp"

namespace bmst {

/// Dreyfus-Wagner dynamic program over (terminal subset, vertex) states with
/// subset-split and shortest-path transitions. Built once per terminal list;
/// any subset of the terminals can then be queried.
class SteinerDp {
public:
    SteinerDp(const Multigraph& graph, std::span<const Cost> lengths,
              std::vector<VertexId> terminals);

    int terminal_count() const { return static_cast<int>(terminals_.size()); }

    /// Minimum length connecting the terminal subset; nullopt if unreachable.
    std::optional<Cost> tree_value(std::uint32_t mask) const;

    /// An edge set achieving tree_value(mask), pruned to a forest.
    std::optional<std::vector<EdgeId>> tree_edges(std::uint32_t mask) const;

private:
    struct Choice {
        enum class Kind : unsigned char { Base, Merge, Grow } kind = Kind::Base;
        std::uint32_t submask = 0;  // Merge
        VertexId via = -1;          // Grow: predecessor vertex
    };

    Cost dist(VertexId a, VertexId b) const { return dist_[idx(a, b)]; }
    size_t idx(VertexId a, VertexId b) const {
        return static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b);
    }
    void append_path_edges(VertexId a, VertexId b, std::vector<EdgeId>& out) const;
    void collect(std::uint32_t mask, VertexId v, std::vector<EdgeId>& out) const;

    const Multigraph* graph_;
    std::vector<Cost> lengths_;
    std::vector<VertexId> terminals_;
    int n_ = 0;
    std::vector<Cost> dist_;        // all-pairs shortest path lengths
    std::vector<VertexId> through_; // intermediate vertex on a shortest path, -1 if direct
    std::vector<EdgeId> direct_;    // cheapest edge per vertex pair, -1 if none
    std::vector<Cost> dp_;          // (mask, vertex) -> value
    std::vector<Choice> choice_;
};

/// Minimum-length connected subgraph spanning the terminals.
Result<std::vector<EdgeId>> steiner_tree(const Multigraph& graph, std::span<const Cost> lengths,
                                         std::span<const VertexId> terminals, const Caps& caps = {});

/// Minimum-length forest connecting each terminal set within one component;
/// found by enumerating partitions of the set of terminal sets and solving a
/// Steiner tree per merged class.
Result<std::vector<EdgeId>> steiner_forest(const Multigraph& graph, std::span<const Cost> lengths,
                                           const std::vector<std::vector<VertexId>>& terminal_sets,
                                           const Caps& caps = {});

/// 2-approximation for the variant that additionally attaches every
/// non-terminal to one of the terminal sets: exact Steiner forest, then an
/// MST of the graph with the forest's terminal components merged into one
/// vertex.
Result<std::vector<EdgeId>> sf_plus_2approx(const Multigraph& graph, std::span<const Cost> lengths,
                                            const std::vector<std::vector<VertexId>>& terminal_sets,
                                            const Caps& caps = {});

/// The MST phase of the SF+ algorithm: merges the terminals plus everything
/// the given forest attaches to them into one vertex, spans the quotient and
/// returns forest + tree.
Result<std::vector<EdgeId>> sf_plus_complete(const Multigraph& graph, std::span<const Cost> lengths,
                                             const std::vector<std::vector<VertexId>>& terminal_sets,
                                             const std::vector<EdgeId>& forest);

Cost total_length(std::span<const Cost> lengths, std::span<const EdgeId> edges);

}  // namespace bmst
