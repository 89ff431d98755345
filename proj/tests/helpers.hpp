#pragma once

// Shared fixtures for the test suite: the fixed Coxeter-word test set and
// the rank range exercised by the equivalence sweep.

#include <fpoly/weyl.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

/// Natural, reversed, and bipartite orders plus three seeded shuffles.
inline std::vector<fpoly::CoxeterWord> coxeter_words(const fpoly::LieType& type) {
    int n = type.rank;
    fpoly::CoxeterWord natural, reversed, bipartite;
    for (int i = 1; i <= n; ++i) natural.entries.push_back(i);
    for (int i = n; i >= 1; --i) reversed.entries.push_back(i);
    for (int i = 1; i <= n; i += 2) bipartite.entries.push_back(i);
    for (int i = 2; i <= n; i += 2) bipartite.entries.push_back(i);

    std::vector<fpoly::CoxeterWord> out{natural, reversed, bipartite};
    std::mt19937 rng(static_cast<unsigned>(12345 + 7 * n + static_cast<int>(type.family)));
    for (int s = 0; s < 3; ++s) {
        fpoly::CoxeterWord w = natural;
        std::shuffle(w.entries.begin(), w.entries.end(), rng);
        out.push_back(w);
    }
    return out;
}

/// A1-A5, B2-B4, C2-C4, D4-D5.
inline std::vector<fpoly::LieType> sweep_types() {
    std::vector<fpoly::LieType> types;
    for (int n = 1; n <= 5; ++n) types.push_back({fpoly::Family::A, n});
    for (int n = 2; n <= 4; ++n) types.push_back({fpoly::Family::B, n});
    for (int n = 2; n <= 4; ++n) types.push_back({fpoly::Family::C, n});
    for (int n = 4; n <= 5; ++n) types.push_back({fpoly::Family::D, n});
    return types;
}

}  // namespace testutil
