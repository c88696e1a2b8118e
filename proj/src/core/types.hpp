#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmst {

using VertexId = int;
using EdgeId = int;
using Cost = std::int64_t;

enum class Owner : unsigned char { Leader, Follower };

enum class ObjectiveForm : unsigned char { Sum, Bottleneck };
enum class FollowerScope : unsigned char { OwnEdges, AllEdges };
enum class TieMode : unsigned char { Optimistic, Pessimistic, FixedOrder };

/// Which of the objective-combination variants is being solved.
struct ObjectiveSpec {
    ObjectiveForm leader_form = ObjectiveForm::Sum;
    ObjectiveForm follower_form = ObjectiveForm::Sum;
    FollowerScope follower_scope = FollowerScope::OwnEdges;
    TieMode tie_mode = TieMode::FixedOrder;
};

enum class Status : unsigned char {
    Ok,
    ParseError,
    InvalidInstance,
    Infeasible,
    BadArgument,
    CapExceeded,
};

/// Outcome carrier used across the library: a value, or a status plus message.
template <typename T>
struct Result {
    Status status = Status::Ok;
    std::string message;
    std::optional<T> value;

    bool ok() const { return status == Status::Ok && value.has_value(); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
    const T* operator->() const { return &*value; }

    static Result success(T v) {
        Result r;
        r.value = std::move(v);
        return r;
    }
    static Result failure(Status s, std::string msg) {
        Result r;
        r.status = s;
        r.message = std::move(msg);
        return r;
    }
};

struct SolveReport {
    std::vector<EdgeId> choice;    // leader edges X, sorted ascending
    std::vector<EdgeId> response;  // follower edges Y, sorted ascending
    Cost leader_value = 0;
    Cost follower_value = 0;
    std::string method;
    bool feasible = false;
};

/// Size limits for the exponential-time operations.
struct Caps {
    int bruteforce_leader_edges = 24;
    int enumeration_follower_edges = 8;
    int fpt2_follower_edges = 7;
    int steiner_terminals = 10;
    std::int64_t vdst_node_budget = 4'000'000;
    Cost uniform_cost_budget = 100'000;
};

}  // namespace bmst
