#include "core/steiner.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "core/dsu.hpp"
#include "core/kernels.hpp"

namespace bmst {

namespace {
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
}

Cost total_length(std::span<const Cost> lengths, std::span<const EdgeId> edges) {
    Cost total = 0;
    for (EdgeId e : edges) total += lengths[static_cast<size_t>(e)];
    return total;
}

SteinerDp::SteinerDp(const Multigraph& graph, std::span<const Cost> lengths,
                     std::vector<VertexId> terminals)
    : graph_(&graph),
      lengths_(lengths.begin(), lengths.end()),
      terminals_(std::move(terminals)),
      n_(graph.vertex_count()) {
    const size_t nn = static_cast<size_t>(n_) * static_cast<size_t>(n_);
    dist_.assign(nn, kInf);
    through_.assign(nn, -1);
    direct_.assign(nn, -1);

    for (VertexId v = 0; v < n_; ++v) dist_[idx(v, v)] = 0;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        VertexId u = graph.edge(e).u, v = graph.edge(e).v;
        Cost w = lengths_[static_cast<size_t>(e)];
        if (w < dist_[idx(u, v)]) {
            dist_[idx(u, v)] = dist_[idx(v, u)] = w;
            direct_[idx(u, v)] = direct_[idx(v, u)] = e;
        }
    }
    // All-pairs relaxation; strict improvement keeps the recovery arrays deterministic.
    for (VertexId k = 0; k < n_; ++k)
        for (VertexId a = 0; a < n_; ++a) {
            if (dist_[idx(a, k)] >= kInf) continue;
            for (VertexId b = 0; b < n_; ++b) {
                if (dist_[idx(k, b)] >= kInf) continue;
                Cost cand = dist_[idx(a, k)] + dist_[idx(k, b)];
                if (cand < dist_[idx(a, b)]) {
                    dist_[idx(a, b)] = cand;
                    through_[idx(a, b)] = k;
                }
            }
        }

    const int t = terminal_count();
    const size_t states = (static_cast<size_t>(1) << t) * static_cast<size_t>(n_);
    dp_.assign(states, kInf);
    choice_.assign(states, Choice{});
    if (t == 0) return;

    auto state = [&](std::uint32_t mask, VertexId v) {
        return static_cast<size_t>(mask) * static_cast<size_t>(n_) + static_cast<size_t>(v);
    };

    for (int i = 0; i < t; ++i) {
        std::uint32_t mask = 1u << i;
        for (VertexId v = 0; v < n_; ++v) {
            dp_[state(mask, v)] = dist(terminals_[static_cast<size_t>(i)], v);
            choice_[state(mask, v)] = Choice{Choice::Kind::Base, 0, -1};
        }
    }

    std::vector<Cost> merged(static_cast<size_t>(n_));
    std::vector<std::uint32_t> merged_sub(static_cast<size_t>(n_));
    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
        if ((mask & (mask - 1)) == 0) continue;  // single terminal: base case
        const std::uint32_t low = mask & (~mask + 1u);  // lowest set bit
        for (VertexId v = 0; v < n_; ++v) {
            merged[static_cast<size_t>(v)] = kInf;
            merged_sub[static_cast<size_t>(v)] = 0;
        }
        // Each unordered split once: the submask keeps the lowest terminal.
        for (std::uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            std::uint32_t rest = mask ^ sub;
            if (rest == 0) continue;
            for (VertexId v = 0; v < n_; ++v) {
                Cost a = dp_[state(sub, v)], b = dp_[state(rest, v)];
                if (a >= kInf || b >= kInf) continue;
                if (a + b < merged[static_cast<size_t>(v)]) {
                    merged[static_cast<size_t>(v)] = a + b;
                    merged_sub[static_cast<size_t>(v)] = sub;
                }
            }
        }
        // The distance table is a metric closure, so one min-plus pass settles
        // the grow transition.
        for (VertexId v = 0; v < n_; ++v) {
            Cost best = kInf;
            VertexId best_u = -1;
            for (VertexId u = 0; u < n_; ++u) {
                if (merged[static_cast<size_t>(u)] >= kInf || dist(u, v) >= kInf) continue;
                Cost cand = merged[static_cast<size_t>(u)] + dist(u, v);
                if (cand < best) {
                    best = cand;
                    best_u = u;
                }
            }
            dp_[state(mask, v)] = best;
            if (best_u == -1) continue;
            if (best_u == v)
                choice_[state(mask, v)] = Choice{Choice::Kind::Merge, merged_sub[static_cast<size_t>(v)], -1};
            else
                choice_[state(mask, v)] =
                    Choice{Choice::Kind::Grow, merged_sub[static_cast<size_t>(best_u)], best_u};
        }
    }
}

std::optional<Cost> SteinerDp::tree_value(std::uint32_t mask) const {
    if (mask == 0) return 0;
    int anchor = -1;
    for (int i = 0; i < terminal_count(); ++i)
        if (mask & (1u << i)) {
            anchor = i;
            break;
        }
    Cost v = dp_[static_cast<size_t>(mask) * static_cast<size_t>(n_) +
                 static_cast<size_t>(terminals_[static_cast<size_t>(anchor)])];
    if (v >= kInf) return std::nullopt;
    return v;
}

void SteinerDp::append_path_edges(VertexId a, VertexId b, std::vector<EdgeId>& out) const {
    if (a == b) return;
    VertexId k = through_[idx(a, b)];
    if (k == -1) {
        out.push_back(direct_[idx(a, b)]);
        return;
    }
    append_path_edges(a, k, out);
    append_path_edges(k, b, out);
}

void SteinerDp::collect(std::uint32_t mask, VertexId v, std::vector<EdgeId>& out) const {
    const Choice& ch = choice_[static_cast<size_t>(mask) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
    switch (ch.kind) {
        case Choice::Kind::Base: {
            int i = 0;
            while (!(mask & (1u << i))) ++i;
            append_path_edges(terminals_[static_cast<size_t>(i)], v, out);
            return;
        }
        case Choice::Kind::Merge:
            collect(ch.submask, v, out);
            collect(mask ^ ch.submask, v, out);
            return;
        case Choice::Kind::Grow:
            collect(ch.submask, ch.via, out);
            collect(mask ^ ch.submask, ch.via, out);
            append_path_edges(ch.via, v, out);
            return;
    }
}

std::optional<std::vector<EdgeId>> SteinerDp::tree_edges(std::uint32_t mask) const {
    if (mask == 0) return std::vector<EdgeId>{};
    if (!tree_value(mask)) return std::nullopt;
    int anchor = -1;
    for (int i = 0; i < terminal_count(); ++i)
        if (mask & (1u << i)) {
            anchor = i;
            break;
        }
    std::vector<EdgeId> raw;
    collect(mask, terminals_[static_cast<size_t>(anchor)], raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // Optimality makes any leftover cycle zero-length; prune to a forest.
    DisjointSets sets(n_);
    std::vector<EdgeId> forest;
    for (EdgeId e : raw)
        if (sets.unite(graph_->edge(e).u, graph_->edge(e).v)) forest.push_back(e);
    return forest;
}

Result<std::vector<EdgeId>> steiner_tree(const Multigraph& graph, std::span<const Cost> lengths,
                                         std::span<const VertexId> terminals, const Caps& caps) {
    using R = Result<std::vector<EdgeId>>;
    if (static_cast<int>(terminals.size()) > caps.steiner_terminals)
        return R::failure(Status::CapExceeded, "too many terminals");
    if (terminals.size() <= 1) return R::success({});
    SteinerDp dp(graph, lengths, std::vector<VertexId>(terminals.begin(), terminals.end()));
    std::uint32_t full = (1u << terminals.size()) - 1;
    auto edges = dp.tree_edges(full);
    if (!edges) return R::failure(Status::Infeasible, "terminals disconnected");
    return R::success(std::move(*edges));
}

namespace {

Result<std::vector<std::vector<VertexId>>> checked_disjoint(
    const Multigraph& graph, const std::vector<std::vector<VertexId>>& terminal_sets) {
    using R = Result<std::vector<std::vector<VertexId>>>;
    std::set<VertexId> seen;
    for (const auto& cls : terminal_sets) {
        if (cls.empty()) return R::failure(Status::BadArgument, "empty terminal set");
        for (VertexId v : cls) {
            if (v < 0 || v >= graph.vertex_count())
                return R::failure(Status::BadArgument, "terminal out of range");
            if (!seen.insert(v).second)
                return R::failure(Status::BadArgument, "terminal sets are not disjoint");
        }
    }
    return R::success(terminal_sets);
}

}  // namespace

Result<std::vector<EdgeId>> steiner_forest(const Multigraph& graph, std::span<const Cost> lengths,
                                           const std::vector<std::vector<VertexId>>& terminal_sets,
                                           const Caps& caps) {
    using R = Result<std::vector<EdgeId>>;
    if (auto chk = checked_disjoint(graph, terminal_sets); !chk.ok())
        return R::failure(chk.status, chk.message);
    if (terminal_sets.empty()) return R::success({});

    std::vector<VertexId> all_terminals;
    for (const auto& cls : terminal_sets) all_terminals.insert(all_terminals.end(), cls.begin(), cls.end());
    if (static_cast<int>(all_terminals.size()) > caps.steiner_terminals)
        return R::failure(Status::CapExceeded, "too many terminals");

    SteinerDp dp(graph, lengths, all_terminals);

    // Bit mask over the flattened terminal list, per input class.
    const int k = static_cast<int>(terminal_sets.size());
    std::vector<std::uint32_t> class_mask(static_cast<size_t>(k), 0);
    {
        size_t offset = 0;
        for (int i = 0; i < k; ++i) {
            for (size_t j = 0; j < terminal_sets[static_cast<size_t>(i)].size(); ++j)
                class_mask[static_cast<size_t>(i)] |= 1u << (offset + j);
            offset += terminal_sets[static_cast<size_t>(i)].size();
        }
    }

    Cost best = kInf;
    std::vector<std::uint32_t> best_merged;
    for_each_partition(k, [&](std::span<const int> labels, int classes) {
        std::vector<std::uint32_t> merged(static_cast<size_t>(classes), 0);
        for (int i = 0; i < k; ++i) merged[static_cast<size_t>(labels[static_cast<size_t>(i)])] |= class_mask[static_cast<size_t>(i)];
        Cost total = 0;
        for (std::uint32_t mask : merged) {
            auto v = dp.tree_value(mask);
            if (!v) return true;  // this merge is unreachable; try the next partition
            total += *v;
        }
        if (total < best) {
            best = total;
            best_merged = merged;
        }
        return true;
    });
    if (best >= kInf) return R::failure(Status::Infeasible, "some terminal set cannot be connected");

    std::vector<EdgeId> all;
    for (std::uint32_t mask : best_merged) {
        auto part = dp.tree_edges(mask);
        all.insert(all.end(), part->begin(), part->end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    DisjointSets sets(graph.vertex_count());
    std::vector<EdgeId> forest;
    for (EdgeId e : all)
        if (sets.unite(graph.edge(e).u, graph.edge(e).v)) forest.push_back(e);
    return R::success(std::move(forest));
}

Result<std::vector<EdgeId>> sf_plus_2approx(const Multigraph& graph, std::span<const Cost> lengths,
                                            const std::vector<std::vector<VertexId>>& terminal_sets,
                                            const Caps& caps) {
    using R = Result<std::vector<EdgeId>>;
    if (terminal_sets.empty()) return R::failure(Status::BadArgument, "at least one terminal set required");
    auto forest = steiner_forest(graph, lengths, terminal_sets, caps);
    if (!forest.ok()) return forest;
    return sf_plus_complete(graph, lengths, terminal_sets, *forest.value);
}

Result<std::vector<EdgeId>> sf_plus_complete(const Multigraph& graph, std::span<const Cost> lengths,
                                             const std::vector<std::vector<VertexId>>& terminal_sets,
                                             const std::vector<EdgeId>& forest) {
    using R = Result<std::vector<EdgeId>>;
    std::vector<int> comp = graph.component_labels(forest);
    std::vector<bool> blob_comp(comp.size(), false);
    for (const auto& cls : terminal_sets)
        for (VertexId v : cls) blob_comp[static_cast<size_t>(comp[static_cast<size_t>(v)])] = true;

    std::vector<int> vmap(static_cast<size_t>(graph.vertex_count()), -1);
    int next = 1;
    bool any_blob = false;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (blob_comp[static_cast<size_t>(comp[static_cast<size_t>(v)])]) {
            vmap[static_cast<size_t>(v)] = 0;
            any_blob = true;
        } else {
            vmap[static_cast<size_t>(v)] = next++;
        }
    }
    if (!any_blob) return R::failure(Status::BadArgument, "no terminals");

    std::vector<Edge> qedges;
    std::vector<EdgeId> qorigin;
    std::vector<Cost> qweights;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        VertexId u = vmap[static_cast<size_t>(graph.edge(e).u)];
        VertexId v = vmap[static_cast<size_t>(graph.edge(e).v)];
        if (u == v) continue;
        qedges.push_back({u, v});
        qorigin.push_back(e);
        qweights.push_back(lengths[static_cast<size_t>(e)]);
    }
    Multigraph quotient(next, std::move(qedges));
    std::vector<EdgeId> tie(static_cast<size_t>(quotient.edge_count()));
    for (EdgeId e = 0; e < quotient.edge_count(); ++e) tie[static_cast<size_t>(e)] = e;
    auto tree = mst(quotient, qweights, tie);
    if (!tree.ok()) return R::failure(Status::Infeasible, "graph disconnected");

    std::vector<EdgeId> out = forest;
    for (EdgeId qe : *tree.value) out.push_back(qorigin[static_cast<size_t>(qe)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return R::success(std::move(out));
}

}  // namespace bmst
