#ifndef EGT_PATH_CYCLE_HPP
#define EGT_PATH_CYCLE_HPP

#include "egt/graph.hpp"
#include "egt/verdict.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

namespace egt {

// Exact search limits. Subset DP handles pieces up to dp_max vertices;
// branch-and-bound with reachability pruning covers (dp_max, search_max].
// Caps apply per connected component for paths and per biconnected block
// for cycles, which is where those structures live.
struct PathCycleLimits {
    int dp_max = 18;
    int search_max = 24;
    std::uint64_t max_nodes = 1'000'000'000;
};

struct PathCycleProfile {
    int longest_path_edges = 0;
    int circumference = 0;              // 0 for forests
    std::vector<int> spectrum;          // ascending cycle lengths present
    std::vector<int> path_witness;      // vertex sequence, empty only for the null graph
    std::vector<int> cycle_witness;     // empty iff circumference == 0

    bool has_cycle_of_length_at_least(int l) const;
    nlohmann::ordered_json to_json() const;
};

PathCycleProfile path_cycle_profile(const Graph& g, const PathCycleLimits& limits = {});

// Maximum edge count over all simple paths, with a witness. Requires n >= 1.
std::pair<int, std::vector<int>> longest_path(const Graph& g, const PathCycleLimits& limits = {});

// Longest cycle length and a witness; (0, {}) when the graph is acyclic.
std::pair<int, std::vector<int>> circumference(const Graph& g, const PathCycleLimits& limits = {});

std::vector<int> cycle_spectrum(const Graph& g, const PathCycleLimits& limits = {});

// Largest P_l joined to one extra vertex: a path of l vertices inside some
// closed neighborhood's link G[N(center)].
struct WheelWitness {
    int center = -1;
    std::vector<int> path; // inside N(center), host labels
    int l = 0;             // vertex count of the path
};
std::optional<WheelWitness> max_wheel(const Graph& g, const PathCycleLimits& limits = {});

// One maximal path per start vertex: extend forward by the lowest-indexed
// unvisited neighbor until stuck, then extend backward the same way.
std::vector<std::vector<int>> greedy_maximal_paths(const Graph& g);

// Checks circumference(g) >= min{m+1, d_P(x)+d_P(y)} for a concrete path P
// with endpoints x, y in a 2-connected graph. Invalid paths and graphs that
// are not 2-connected yield premise-not-met verdicts, not exceptions.
Verdict kopylov_lemma_check(const Graph& g, const std::vector<int>& path,
                            const PathCycleLimits& limits = {});

} // namespace egt

#endif // EGT_PATH_CYCLE_HPP
