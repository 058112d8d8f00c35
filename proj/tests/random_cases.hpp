#pragma once
// Shared test helpers: random (q; d) inputs with matching sums, and the fixed
// catalog of worked cases with independently frozen expected values.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace testutil {

// Random partition of total into positive parts, sorted ascending.
inline std::vector<int> random_partition(std::mt19937& rng, int total) {
    std::vector<int> parts;
    int remaining = total;
    while (remaining > 0) {
        std::uniform_int_distribution<int> dist(1, remaining);
        int part = dist(rng);
        parts.push_back(part);
        remaining -= part;
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

// Random (q; d) with Σq = Σd = Q drawn uniformly from [q_min, q_max].
// If distinct is set, resample until q and d differ as multisets (requires
// Q >= 2, where at least two partitions exist).
inline std::pair<std::vector<int>, std::vector<int>> random_case(std::mt19937& rng, int q_min,
                                                                 int q_max, bool distinct) {
    std::uniform_int_distribution<int> qdist(q_min, q_max);
    int total = qdist(rng);
    std::vector<int> q = random_partition(rng, total);
    std::vector<int> d = random_partition(rng, total);
    while (distinct && d == q) d = random_partition(rng, total);
    return {q, d};
}

// The fixed case list exercised throughout the suite: one-parameter
// Calabi–Yau complete intersections plus lower-dimensional relatives.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> catalog() {
    return {
        {{1, 1, 1, 1, 1}, {5}},           // quintic threefold
        {{1, 1, 1, 1, 2}, {6}},           // sextic in P(1^4,2)
        {{1, 1, 1, 1, 4}, {8}},           // octic in P(1^4,4)
        {{1, 1, 1, 1, 1, 1}, {2, 4}},     // (2,4) complete intersection
        {{1, 1, 1, 1, 1, 1}, {3, 3}},     // (3,3) complete intersection
        {{1, 1, 1, 1, 1, 1}, {2, 2, 2}},  // (2,2,2) complete intersection
        {{1, 1, 1, 1}, {4}},              // quartic surface
        {{1, 1, 1, 1}, {2, 2}},           // (2,2) curve
        {{1, 1, 2}, {4}},                 // quartic in P(1,1,2)
    };
}

}  // namespace testutil
