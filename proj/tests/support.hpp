#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "nsmac/weyl.hpp"

namespace testsupport {

using nsmac::Weight;

inline std::vector<Weight> weight_box(int rank, int radius) {
    std::vector<Weight> box{Weight(rank, 0)};
    for (int i = 0; i < rank; ++i) {
        std::vector<Weight> next;
        for (const auto& w : box)
            for (int c = -radius; c <= radius; ++c) {
                Weight x = w;
                x[i] = c;
                next.push_back(x);
            }
        box = std::move(next);
    }
    return box;
}

// All elements of the finite Weyl group, by breadth-first search on words.
inline std::vector<nsmac::FiniteWeylElement> finite_group(const nsmac::RootSystemData& R) {
    std::vector<nsmac::FiniteWeylElement> all{nsmac::FiniteWeylElement::identity(R.rank)};
    std::vector<nsmac::FiniteWeylElement> frontier = all;
    while (!frontier.empty()) {
        std::vector<nsmac::FiniteWeylElement> next;
        for (const auto& w : frontier)
            for (int i = 1; i <= R.rank; ++i) {
                nsmac::FiniteWeylElement x = w * nsmac::FiniteWeylElement::simple(R, i);
                if (std::find(all.begin(), all.end(), x) == all.end()) {
                    all.push_back(x);
                    next.push_back(x);
                }
            }
        frontier = std::move(next);
    }
    return all;
}

struct ElementGen {
    std::mt19937_64 rng;
    explicit ElementGen(uint64_t seed) : rng(seed) {}
    int64_t range(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng); }

    Weight weight(int rank, int radius) {
        Weight w(rank);
        for (auto& c : w) c = range(-radius, radius);
        return w;
    }
    nsmac::FiniteWeylElement finite(const nsmac::RootSystemData& R, int max_len) {
        std::vector<int> word;
        int len = static_cast<int>(range(0, max_len));
        for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(range(1, R.rank)));
        return nsmac::FiniteWeylElement::from_word(R, word);
    }
    nsmac::ExtendedWeylElement extended(const nsmac::RootSystemData& R, int radius, int max_len) {
        return {weight(R.rank, radius), finite(R, max_len)};
    }
};

}  // namespace testsupport
