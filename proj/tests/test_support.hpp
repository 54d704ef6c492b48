#ifndef EGT_TEST_SUPPORT_HPP
#define EGT_TEST_SUPPORT_HPP

// Brute-force oracles for the exact invariants, deliberately independent of
// the library's search paths: subsets are enumerated directly and paths and
// cycles come from permutation scans over the plain edge relation.

#include "egt/graph.hpp"
#include "egt/harness.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace egt::test {

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

// Outer 5-cycle, inner pentagram, spokes.
inline Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
}

// Exact j-clique counts by scanning all 2^n subsets.
inline std::vector<std::uint64_t> oracle_clique_counts(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t sub = 1; sub < (std::uint64_t(1) << n); ++sub) {
        bool complete = true;
        for (std::uint64_t rest = sub; complete && rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            std::uint64_t others = sub & ~((std::uint64_t(1) << (v + 1)) - 1);
            if ((g.neighbors(v) & others) != others) complete = false;
        }
        if (complete) counts[static_cast<std::size_t>(std::popcount(sub))] += 1;
    }
    return counts; // counts[j] = N_j, counts[0] unused
}

// Longest path in edges by scanning adjacent prefixes of all permutations.
inline int oracle_longest_path(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int len = 0;
        for (int i = 1; i < n; ++i) {
            if (!g.has_edge(perm[static_cast<std::size_t>(i) - 1], perm[static_cast<std::size_t>(i)]))
                break;
            ++len;
        }
        best = std::max(best, len);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All cycle lengths present, from adjacent permutation prefixes that close.
inline std::set<int> oracle_cycle_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    std::set<int> spectrum;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int t = 3; t <= n; ++t) {
            bool path = true;
            for (int i = 1; i < t && path; ++i)
                path = g.has_edge(perm[static_cast<std::size_t>(i) - 1], perm[static_cast<std::size_t>(i)]);
            if (!path) break;
            if (g.has_edge(perm[static_cast<std::size_t>(t) - 1], perm[0])) spectrum.insert(t);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return spectrum;
}

inline int oracle_circumference(const Graph& g) {
    const auto spectrum = oracle_cycle_spectrum(g);
    return spectrum.empty() ? 0 : *spectrum.rbegin();
}

inline bool oracle_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (!seen[static_cast<std::size_t>(w)] && g.has_edge(v, w)) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

// Connected, n >= 3, and still connected after deleting any single vertex.
inline bool oracle_two_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || !oracle_connected(g)) return false;
    for (int drop = 0; drop < n; ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (v != drop) keep.push_back(v);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a + 1; b < keep.size(); ++b)
                if (g.has_edge(keep[a], keep[b]))
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        if (!oracle_connected(Graph(n - 1, edges))) return false;
    }
    return true;
}

// Seeded random graph via the library's generator contract.
inline Graph random_graph(SplitMix64& rng, int n, std::uint64_t edge_denominator = 2) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(edge_denominator) == 0) edges.emplace_back(i, j);
    return Graph(n, edges);
}

} // namespace egt::test

#endif // EGT_TEST_SUPPORT_HPP
