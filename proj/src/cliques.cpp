#include "egt/cliques.hpp"

#include "egt/errors.hpp"

#include <bit>

namespace egt {

BigInt CliqueProfile::count(int j) const {
    if (j == 0) return BigInt(1);
    if (j < 0 || j > omega) return BigInt();
    return counts[static_cast<std::size_t>(j) - 1];
}

nlohmann::ordered_json CliqueProfile::to_json() const {
    nlohmann::ordered_json j;
    j["omega"] = omega;
    auto arr = nlohmann::ordered_json::array();
    for (const BigInt& c : counts) arr.push_back(c.to_string());
    j["counts"] = std::move(arr);
    return j;
}

namespace {

// Enumerates every clique exactly once: the current clique's common
// neighborhood restricted to vertices above the last chosen one is the
// candidate set; each recursion node is one clique. Counts fit in 64 bits
// for n <= 62 (at most C(62,31) < 2^59 cliques of one size).
struct CliqueCounter {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> by_size; // by_size[d-1] = number of d-cliques

    CliqueCounter(const Graph& graph, std::uint64_t max_nodes)
        : g(graph), budget(max_nodes), by_size(static_cast<std::size_t>(graph.vertex_count())) {}

    void extend(std::uint64_t candidates, int depth) {
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (++nodes > budget)
                throw BudgetError("clique_profile: node budget exceeded on graph " + to_graph6(g));
            by_size[static_cast<std::size_t>(depth)] += 1;
            const std::uint64_t next = candidates & g.neighbors(v);
            if (next) extend(next, depth + 1);
        }
    }
};

} // namespace

CliqueProfile clique_profile(const Graph& g, const CliqueBudget& budget) {
    CliqueCounter counter(g, budget.max_nodes);
    if (g.vertex_count() > 0) counter.extend(g.vertex_mask(), 0);
    CliqueProfile profile;
    int omega = 0;
    for (int j = g.vertex_count(); j >= 1; --j) {
        if (counter.by_size[static_cast<std::size_t>(j) - 1] != 0) {
            omega = j;
            break;
        }
    }
    profile.omega = omega;
    profile.counts.reserve(static_cast<std::size_t>(omega));
    for (int j = 1; j <= omega; ++j)
        profile.counts.push_back(BigInt::from_u64(counter.by_size[static_cast<std::size_t>(j) - 1]));
    return profile;
}

BigInt neighborhood_clique_sum(const Graph& g, int k, const CliqueBudget& budget) {
    if (k < 2) throw DomainError("neighborhood_clique_sum: k must be at least 2");
    BigInt total;
    for (int x = 0; x < g.vertex_count(); ++x) {
        const Graph gx = neighborhood_subgraph(g, x);
        total += clique_profile(gx, budget).count(k - 1);
    }
    return total;
}

} // namespace egt
