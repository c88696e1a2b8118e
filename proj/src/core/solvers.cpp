#include "core/solvers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "core/dsu.hpp"
#include "core/evaluate.hpp"
#include "core/follower.hpp"
#include "core/kernels.hpp"
#include "core/vdst.hpp"

namespace bmst {

namespace {

Result<SolveReport> finish_report(const BmstInstance& inst, std::vector<EdgeId> choice,
                                  std::vector<EdgeId> response, const ObjectiveSpec& spec,
                                  std::string method) {
    auto values = evaluate(inst, choice, response, spec);
    if (!values.ok()) return Result<SolveReport>::failure(values.status, values.message);
    SolveReport report;
    report.choice = std::move(choice);
    report.response = std::move(response);
    report.leader_value = values.value->first;
    report.follower_value = values.value->second;
    report.method = std::move(method);
    report.feasible = true;
    return Result<SolveReport>::success(std::move(report));
}

}  // namespace

Result<SolveReport> solve_bruteforce(const BmstInstance& inst, const ObjectiveSpec& spec,
                                     const Caps& caps) {
    using R = Result<SolveReport>;
    if (spec.follower_form == ObjectiveForm::Bottleneck && spec.tie_mode == TieMode::FixedOrder)
        return R::failure(Status::BadArgument,
                          "bottleneck follower requires optimistic or pessimistic tie mode");

    const std::vector<EdgeId> leader = inst.leader_edges();
    if (static_cast<int>(leader.size()) > caps.bruteforce_leader_edges)
        return R::failure(Status::CapExceeded, "too many leader edges for brute force");

    std::vector<EdgeId> order;
    if (spec.follower_form == ObjectiveForm::Sum) order = effective_pref(inst, spec.tie_mode);

    std::optional<SolveReport> best;
    std::vector<EdgeId> current;

    auto consider = [&](const std::vector<EdgeId>& choice) {
        std::optional<std::vector<EdgeId>> y;
        if (spec.follower_form == ObjectiveForm::Sum)
            y = greedy_response(inst, choice, order);
        else
            y = bottleneck_response(inst, choice, spec.follower_scope, spec.tie_mode, spec.leader_form);
        if (!y) return;
        auto values = evaluate(inst, choice, *y, spec);
        if (!values.ok()) return;
        if (!best || values.value->first < best->leader_value) {
            SolveReport report;
            report.choice = choice;
            report.response = std::move(*y);
            report.leader_value = values.value->first;
            report.follower_value = values.value->second;
            report.feasible = true;
            best = std::move(report);
        }
    };

    // Lexicographic subset enumeration; a prefix that already closed a cycle
    // is never extended.
    DisjointSets sets(inst.vertex_count());
    std::function<void(size_t, DisjointSets)> recurse = [&](size_t index, DisjointSets state) {
        consider(current);
        for (size_t i = index; i < leader.size(); ++i) {
            EdgeId e = leader[i];
            DisjointSets next = state;
            if (!next.unite(inst.graph.edge(e).u, inst.graph.edge(e).v)) continue;
            current.push_back(e);
            recurse(i + 1, std::move(next));
            current.pop_back();
        }
    };
    recurse(0, sets);

    if (!best) return R::failure(Status::Infeasible, "no leader choice admits a spanning completion");
    best->method = "brute";
    return R::success(std::move(*best));
}

namespace {

struct LeaderGraph {
    Multigraph graph;
    std::vector<EdgeId> instance_id;  // leader-graph edge -> instance edge id
};

LeaderGraph leader_subgraph(const BmstInstance& inst) {
    LeaderGraph out;
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!inst.is_leader(e)) continue;
        edges.push_back(inst.graph.edge(e));
        out.instance_id.push_back(e);
    }
    out.graph = Multigraph(inst.vertex_count(), std::move(edges));
    return out;
}

// Visits every (response, witness) pair the partition enumeration produces.
// Returning false from the visitor stops early. Reports CapExceeded through
// the result, Ok otherwise.
Result<bool> for_each_enforceable(const BmstInstance& inst, std::span<const EdgeId> order,
                                  const Caps& caps,
                                  const std::function<bool(const std::vector<EdgeId>&,
                                                           const std::vector<EdgeId>&)>& visit) {
    using R = Result<bool>;
    const std::vector<EdgeId> follower = inst.follower_edges();
    if (static_cast<int>(follower.size()) > caps.enumeration_follower_edges)
        return R::failure(Status::CapExceeded, "too many follower edges for response enumeration");

    std::vector<VertexId> follower_vertices;
    {
        std::set<VertexId> vs;
        for (EdgeId e : follower) {
            vs.insert(inst.graph.edge(e).u);
            vs.insert(inst.graph.edge(e).v);
        }
        follower_vertices.assign(vs.begin(), vs.end());
    }
    const LeaderGraph leader = leader_subgraph(inst);

    // With no follower vertices the leader must span on her own.
    if (follower_vertices.empty()) {
        std::vector<Cost> unit(static_cast<size_t>(leader.graph.edge_count()), 0);
        std::vector<EdgeId> ids(static_cast<size_t>(leader.graph.edge_count()));
        for (EdgeId e = 0; e < leader.graph.edge_count(); ++e) ids[static_cast<size_t>(e)] = e;
        auto tree = mst(leader.graph, unit, ids);
        if (!tree.ok()) return R::success(false);
        std::vector<EdgeId> witness;
        for (EdgeId e : *tree.value) witness.push_back(leader.instance_id[static_cast<size_t>(e)]);
        std::sort(witness.begin(), witness.end());
        visit({}, witness);
        return R::success(true);
    }

    // Attaching uncovered vertices never changes which follower vertices are
    // connected, so each partition needs one disjoint-forest solve only.
    bool cap_hit = false;
    bool stopped = false;
    for_each_partition(static_cast<int>(follower_vertices.size()), [&](std::span<const int> labels, int classes) {
        std::vector<std::vector<VertexId>> sets(static_cast<size_t>(classes));
        for (size_t i = 0; i < follower_vertices.size(); ++i)
            sets[static_cast<size_t>(labels[i])].push_back(follower_vertices[i]);

        auto forests = disjoint_connecting_forests(leader.graph, sets, std::nullopt, caps.vdst_node_budget);
        if (forests.status == Status::CapExceeded) {
            cap_hit = true;
            return false;
        }
        if (!forests.ok()) return true;  // partition not realizable

        // Extend the trees so the choice covers every vertex: repeatedly
        // attach an uncovered vertex through the cheapest leader edge into a
        // covered one.
        std::vector<bool> covered(static_cast<size_t>(inst.vertex_count()), false);
        std::vector<EdgeId> choice;
        for (const auto& tree : forests.value->trees)
            for (EdgeId e : tree) {
                choice.push_back(leader.instance_id[static_cast<size_t>(e)]);
                covered[static_cast<size_t>(leader.graph.edge(e).u)] = true;
                covered[static_cast<size_t>(leader.graph.edge(e).v)] = true;
            }
        for (VertexId v : follower_vertices) covered[static_cast<size_t>(v)] = true;

        std::vector<EdgeId> leader_by_cost = inst.leader_edges();
        std::sort(leader_by_cost.begin(), leader_by_cost.end(), [&](EdgeId a, EdgeId b) {
            return inst.c(a) != inst.c(b) ? inst.c(a) < inst.c(b) : a < b;
        });
        bool grew = true;
        while (grew) {
            grew = false;
            for (EdgeId e : leader_by_cost) {
                bool cu = covered[static_cast<size_t>(inst.graph.edge(e).u)];
                bool cv = covered[static_cast<size_t>(inst.graph.edge(e).v)];
                if (cu == cv) continue;
                covered[static_cast<size_t>(inst.graph.edge(e).u)] = true;
                covered[static_cast<size_t>(inst.graph.edge(e).v)] = true;
                choice.push_back(e);
                grew = true;
                break;
            }
        }
        for (VertexId v = 0; v < inst.vertex_count(); ++v)
            if (!covered[static_cast<size_t>(v)]) return true;  // some vertex is unreachable: no feasible choice here

        std::sort(choice.begin(), choice.end());
        auto y = greedy_response(inst, choice, order);
        if (!y) return true;  // the partition's components cannot be merged into one tree
        if (!visit(*y, choice)) {
            stopped = true;
            return false;
        }
        return true;
    });
    if (cap_hit) return R::failure(Status::CapExceeded, "disjoint-forest search budget exceeded");
    return R::success(stopped);
}

}  // namespace

Result<std::vector<EnforceableResponse>> enumerate_enforceable(const BmstInstance& inst,
                                                               std::span<const EdgeId> order,
                                                               const Caps& caps) {
    using R = Result<std::vector<EnforceableResponse>>;
    std::map<std::vector<EdgeId>, std::vector<EdgeId>> found;
    auto walked = for_each_enforceable(inst, order, caps,
                                       [&](const std::vector<EdgeId>& response, const std::vector<EdgeId>& witness) {
                                           found.emplace(response, witness);  // keep the first witness
                                           return true;
                                       });
    if (!walked.ok()) return R::failure(walked.status, walked.message);
    std::vector<EnforceableResponse> out;
    for (auto& [response, witness] : found) out.push_back({response, witness});
    return R::success(std::move(out));
}

Result<std::optional<std::vector<EdgeId>>> bmstr_decide(const BmstInstance& inst,
                                                        std::span<const EdgeId> ybar,
                                                        const Caps& caps) {
    using R = Result<std::optional<std::vector<EdgeId>>>;
    for (EdgeId e : ybar)
        if (e < 0 || e >= inst.edge_count() || !inst.is_follower(e))
            return R::failure(Status::BadArgument, "ybar must consist of follower edges");
    std::vector<EdgeId> want(ybar.begin(), ybar.end());
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());

    std::optional<std::vector<EdgeId>> witness;
    auto walked = for_each_enforceable(inst, inst.pref, caps,
                                       [&](const std::vector<EdgeId>& response, const std::vector<EdgeId>& found) {
                                           if (response != want) return true;
                                           witness = found;
                                           return false;  // stop at the first witness
                                       });
    if (!walked.ok()) return R::failure(walked.status, walked.message);
    return R::success(std::move(witness));
}

Result<SolveReport> solve_uniform_fpt(const BmstInstance& inst, const ObjectiveSpec& spec,
                                      const Caps& caps) {
    using R = Result<SolveReport>;
    if (spec.follower_form != ObjectiveForm::Sum || spec.leader_form != ObjectiveForm::Sum)
        return R::failure(Status::BadArgument, "uniform-fpt solves the sum/sum objective only");
    std::optional<Cost> uniform;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!inst.is_leader(e)) continue;
        if (uniform && *uniform != inst.c(e))
            return R::failure(Status::BadArgument, "leader costs are not uniform");
        uniform = inst.c(e);
    }

    std::vector<EdgeId> order = effective_pref(inst, spec.tie_mode);
    auto responses = enumerate_enforceable(inst, order, caps);
    if (!responses.ok()) return R::failure(responses.status, responses.message);

    std::optional<SolveReport> best;
    for (const EnforceableResponse& option : *responses.value) {
        auto report = finish_report(inst, option.witness, option.response, spec, "uniform-fpt");
        if (!report.ok()) continue;
        if (!best || report.value->leader_value < best->leader_value) best = std::move(*report.value);
    }
    if (!best) return R::failure(Status::Infeasible, "no leader choice admits a spanning completion");
    return R::success(std::move(*best));
}

Result<SolveReport> solve_bn_sum(const BmstInstance& inst, TieMode tie) {
    using R = Result<SolveReport>;
    const ObjectiveSpec spec{ObjectiveForm::Bottleneck, ObjectiveForm::Sum, FollowerScope::OwnEdges, tie};
    std::vector<EdgeId> order = effective_pref(inst, tie);

    std::set<Cost> thresholds{0};
    for (EdgeId e = 0; e < inst.edge_count(); ++e)
        if (inst.is_leader(e)) thresholds.insert(inst.c(e));

    std::optional<SolveReport> best;
    for (Cost gamma : thresholds) {
        std::vector<EdgeId> candidates;
        for (EdgeId e = 0; e < inst.edge_count(); ++e)
            if (inst.is_leader(e) && inst.c(e) <= gamma) candidates.push_back(e);
        std::sort(candidates.begin(), candidates.end(), [&](EdgeId a, EdgeId b) {
            return inst.c(a) != inst.c(b) ? inst.c(a) < inst.c(b) : a < b;
        });
        std::vector<EdgeId> choice = spanning_forest(inst.graph, {}, candidates);
        auto y = greedy_response(inst, choice, order);
        if (!y) continue;
        auto report = finish_report(inst, std::move(choice), std::move(*y), spec, "bn-sum");
        if (!report.ok()) continue;
        if (!best || report.value->leader_value < best->leader_value) best = std::move(*report.value);
    }
    if (!best) return R::failure(Status::Infeasible, "no threshold admits a spanning completion");
    return R::success(std::move(*best));
}

Result<SolveReport> solve_bnbn_pess(const BmstInstance& inst, FollowerScope scope) {
    using R = Result<SolveReport>;
    const ObjectiveSpec spec{ObjectiveForm::Bottleneck, ObjectiveForm::Bottleneck, scope,
                             TieMode::Pessimistic};
    std::optional<SolveReport> best;

    auto consider = [&](std::vector<EdgeId> choice) {
        auto y = bottleneck_response(inst, choice, scope, TieMode::Pessimistic, ObjectiveForm::Bottleneck);
        if (!y) return;
        auto report = finish_report(inst, std::move(choice), std::move(*y), spec, "bnbn-pess");
        if (!report.ok()) return;
        if (!best || report.value->leader_value < best->leader_value) best = std::move(*report.value);
    };

    consider({});  // the empty choice is always a candidate

    const std::vector<EdgeId> leader = inst.leader_edges();
    for (EdgeId ec : leader) {
        for (EdgeId ed : leader) {
            if (inst.c(ec) < inst.c(ed) || inst.d(ec) > inst.d(ed)) continue;
            if (ec != ed) {
                const Edge& a = inst.graph.edge(ec);
                const Edge& b = inst.graph.edge(ed);
                bool parallel = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
                if (parallel) continue;
            }
            std::vector<EdgeId> candidates;
            for (EdgeId e : leader)
                if (inst.c(e) <= inst.c(ec) && inst.d(e) <= inst.d(ed)) candidates.push_back(e);
            std::sort(candidates.begin(), candidates.end(), [&](EdgeId a, EdgeId b) {
                return inst.c(a) != inst.c(b) ? inst.c(a) < inst.c(b) : a < b;
            });
            std::vector<EdgeId> seed{ec};
            if (ed != ec) seed.push_back(ed);
            consider(spanning_forest(inst.graph, seed, candidates));
        }
    }
    if (!best) return R::failure(Status::Infeasible, "no candidate admits a spanning completion");
    return R::success(std::move(*best));
}

}  // namespace bmst
