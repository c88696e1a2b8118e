#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/instance.hpp"
#include "core/types.hpp"

namespace bmst {

/// Parses the line-oriented `.bmst` format. If no pref line is present the
/// order defaults to (d, c, edgeId) ascending.
Result<BmstInstance> parse_instance(std::string_view text);

/// Emits the canonical `.bmst` text; the pref line is always explicit.
std::string write_instance(const BmstInstance& inst);

/// Terminal-set graph input (`.stf`): a graph with edge lengths and k
/// disjoint terminal classes, shared by the Steiner-style generators.
struct SteinerInput {
    Multigraph graph;
    std::vector<Cost> length;                     // by edge id
    std::vector<std::vector<VertexId>> terminal_sets;  // in file order
};

Result<SteinerInput> parse_steiner_input(std::string_view text);

/// Solution files: `leader <id> ...` / `follower <id> ...` lines.
struct SolutionFile {
    std::vector<EdgeId> leader;
    std::vector<EdgeId> follower;
};

Result<SolutionFile> parse_solution(std::string_view text);
std::string write_solution(const std::vector<EdgeId>& leader, const std::vector<EdgeId>& follower);

}  // namespace bmst
