#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/types.hpp"

namespace bmst {

/// Seeded generator with portable bounded draws (mt19937_64 is fully
/// specified by the standard; std::uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-ish draw in [0, bound); bound > 0. The modulo bias is
    // irrelevant at the bounds used here.
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    Cost cost_upto(Cost max_inclusive) {
        return static_cast<Cost>(next() % static_cast<std::uint64_t>(max_inclusive + 1));
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next() % i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bmst
