#ifndef EGT_CLIQUES_HPP
#define EGT_CLIQUES_HPP

#include "egt/bigint.hpp"
#include "egt/graph.hpp"

#include <cstdint>
#include <vector>

#include "json.hpp"

namespace egt {

// Node-count cap for the clique enumeration; exceeding it raises BudgetError
// naming the offending graph instead of truncating silently.
struct CliqueBudget {
    std::uint64_t max_nodes = 1'000'000'000;
};

// Exact counts (N_1, ..., N_omega) of complete subgraphs by size.
struct CliqueProfile {
    std::vector<BigInt> counts; // counts[j-1] = N_j; empty for the null graph
    int omega = 0;

    // N_j with the conventions N_0 = 1 and N_j = 0 for j > omega.
    BigInt count(int j) const;

    nlohmann::ordered_json to_json() const;
};

CliqueProfile clique_profile(const Graph& g, const CliqueBudget& budget = {});

// Sum over all vertices x of N_{k-1}(G[N(x)]). Equals k * N_k(G).
BigInt neighborhood_clique_sum(const Graph& g, int k, const CliqueBudget& budget = {});

} // namespace egt

#endif // EGT_CLIQUES_HPP
