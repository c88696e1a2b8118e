#pragma once

#include <numeric>
#include <vector>

namespace bmst {

/// Union-find over dense integer ids with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    // Returns false when a and b were already in the same set.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    int component_count() const { return components_; }

private:
    mutable std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

}  // namespace bmst
