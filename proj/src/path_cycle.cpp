#include "egt/path_cycle.hpp"

#include "egt/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace egt {

namespace {

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// Inclusive bitmask of positions a..b; empty when b < a.
std::uint64_t bit_range(int a, int b) {
    if (b < a) return 0;
    std::uint64_t high = b >= 63 ? ~std::uint64_t(0) : bit(b + 1) - 1;
    return high & ~(bit(a) - 1);
}

std::uint64_t reach(const Graph& g, int start, std::uint64_t allowed) {
    allowed &= g.vertex_mask();
    std::uint64_t seen = bit(start);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & allowed & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

struct SearchBudget {
    std::uint64_t remaining;
    const Graph* host;

    void spend() {
        if (remaining == 0)
            throw BudgetError("path search: node budget exceeded on graph " + to_graph6(*host));
        --remaining;
    }
};

struct LocalPath {
    int edges = -1;
    std::vector<int> path;
};

struct LocalCycles {
    std::uint64_t spectrum = 0;
    int circumference = 0;
    std::vector<int> cycle;
};

// Shared backtrack for both DP tables: recover a path covering S that ends
// at `end`, walking predecessor states.
std::vector<int> dp_backtrack(const Graph& h, const std::vector<std::uint64_t>& dp,
                              std::uint64_t S, int end) {
    std::vector<int> path{end};
    int cur = end;
    while (S != bit(cur)) {
        const std::uint64_t prev_set = S ^ bit(cur);
        const std::uint64_t cands = dp[prev_set] & h.neighbors(cur);
        const int prev = std::countr_zero(cands);
        S = prev_set;
        cur = prev;
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// dp[S] = endpoints of simple paths covering exactly S (any start vertex).
LocalPath dp_longest_path(const Graph& h) {
    const int n = h.vertex_count();
    const std::uint64_t full = h.vertex_mask();
    std::vector<std::uint64_t> dp(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[bit(v)] = bit(v);
    int best_pc = 1;
    std::uint64_t best_set = 1;
    int best_end = 0;
    for (std::uint64_t S = 1; S <= full; ++S) {
        std::uint64_t ends = dp[S];
        if (!ends) continue;
        const int pc = std::popcount(S);
        if (pc > best_pc) {
            best_pc = pc;
            best_set = S;
            best_end = std::countr_zero(ends);
        }
        std::uint64_t e = ends;
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint64_t ext = h.neighbors(v) & ~S;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[S | bit(w)] |= bit(w);
            }
        }
    }
    return LocalPath{best_pc - 1, dp_backtrack(h, dp, best_set, best_end)};
}

// dp[S] = endpoints of paths covering S that start at min(S); a state with
// its end adjacent to min(S) closes a cycle of length |S|.
LocalCycles dp_cycles(const Graph& h) {
    const int n = h.vertex_count();
    const std::uint64_t full = h.vertex_mask();
    std::vector<std::uint64_t> dp(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[bit(v)] = bit(v);
    LocalCycles out;
    std::uint64_t best_set = 0;
    int best_end = -1;
    for (std::uint64_t S = 1; S <= full; ++S) {
        std::uint64_t ends = dp[S];
        if (!ends) continue;
        const std::uint64_t base = S & (~S + 1);
        const int root = std::countr_zero(base);
        const int pc = std::popcount(S);
        if (pc >= 3) {
            const std::uint64_t hit = ends & h.neighbors(root);
            if (hit) {
                out.spectrum |= bit(pc);
                if (pc > out.circumference) {
                    out.circumference = pc;
                    best_set = S;
                    best_end = std::countr_zero(hit);
                }
            }
        }
        const std::uint64_t above_root = ~((base << 1) - 1);
        std::uint64_t e = ends;
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint64_t ext = h.neighbors(v) & ~S & above_root;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[S | bit(w)] |= bit(w);
            }
        }
    }
    if (best_end >= 0) out.cycle = dp_backtrack(h, dp, best_set, best_end);
    return out;
}

struct PathBranchAndBound {
    const Graph& h;
    SearchBudget& budget;
    int best_edges = -1;
    std::vector<int> best_path;
    std::vector<int> cur;

    PathBranchAndBound(const Graph& graph, SearchBudget& b) : h(graph), budget(b) {}

    LocalPath run() {
        for (int s = 0; s < h.vertex_count(); ++s) {
            cur.assign(1, s);
            dfs(bit(s), s);
        }
        return LocalPath{best_edges, best_path};
    }

    void dfs(std::uint64_t inpath, int end) {
        budget.spend();
        const int edges = std::popcount(inpath) - 1;
        if (edges > best_edges) {
            best_edges = edges;
            best_path = cur;
        }
        std::uint64_t ext = h.neighbors(end) & ~inpath;
        while (ext) {
            const int w = std::countr_zero(ext);
            ext &= ext - 1;
            const std::uint64_t reachable = reach(h, w, ~inpath);
            if (std::popcount(inpath) + std::popcount(reachable) - 1 <= best_edges) continue;
            cur.push_back(w);
            dfs(inpath | bit(w), w);
            cur.pop_back();
        }
    }
};

struct CycleDepthFirst {
    const Graph& h;
    SearchBudget& budget;
    std::uint64_t all_lengths = 0;
    LocalCycles out;
    std::vector<int> cur;

    CycleDepthFirst(const Graph& graph, SearchBudget& b) : h(graph), budget(b) {}

    LocalCycles run() {
        const int n = h.vertex_count();
        all_lengths = bit_range(3, n);
        for (int r = 0; r + 2 < n && missing(); ++r) {
            cur.assign(1, r);
            dfs(r, bit(r), r);
        }
        return out;
    }

    std::uint64_t missing() const { return all_lengths & ~out.spectrum; }

    void dfs(int root, std::uint64_t inpath, int end) {
        budget.spend();
        const int pc = std::popcount(inpath);
        if (pc >= 3 && h.has_edge(end, root)) {
            out.spectrum |= bit(pc);
            if (pc > out.circumference) {
                out.circumference = pc;
                out.cycle = cur;
            }
        }
        if (!missing()) return;
        const std::uint64_t above_root = ~((bit(root) << 1) - 1);
        std::uint64_t ext = h.neighbors(end) & ~inpath & above_root;
        while (ext) {
            const int w = std::countr_zero(ext);
            ext &= ext - 1;
            // A cycle discovered deeper in this branch has length in
            // (pc, pc + |new reachable vertices|]; skip when no missing
            // length falls in that window.
            const std::uint64_t reachable = reach(h, w, ~inpath & above_root);
            const std::uint64_t window = bit_range(pc + 1, pc + std::popcount(reachable));
            if (!(missing() & window)) continue;
            cur.push_back(w);
            dfs(root, inpath | bit(w), w);
            cur.pop_back();
        }
    }
};

struct LabeledSubgraph {
    Graph graph;
    std::vector<int> labels; // local index -> host vertex
};

LabeledSubgraph extract(const Graph& g, VertexSet s) {
    return LabeledSubgraph{induced_subgraph(g, s), s.to_vector()};
}

std::vector<int> relabel(const std::vector<int>& local, const std::vector<int>& labels) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
}

LocalPath solve_path_piece(const Graph& piece, const PathCycleLimits& limits, SearchBudget& budget) {
    const int n = piece.vertex_count();
    if (n <= limits.dp_max) return dp_longest_path(piece);
    if (n <= limits.search_max) return PathBranchAndBound(piece, budget).run();
    throw BudgetError("longest_path: piece of " + std::to_string(n) +
                      " vertices exceeds the exact-search cap " + std::to_string(limits.search_max));
}

LocalCycles solve_cycle_piece(const Graph& piece, const PathCycleLimits& limits, SearchBudget& budget) {
    const int n = piece.vertex_count();
    if (n <= limits.dp_max) return dp_cycles(piece);
    if (n <= limits.search_max) return CycleDepthFirst(piece, budget).run();
    throw BudgetError("cycle search: piece of " + std::to_string(n) +
                      " vertices exceeds the exact-search cap " + std::to_string(limits.search_max));
}

struct PathOutcome {
    int edges = 0;
    std::vector<int> witness;
};

PathOutcome longest_path_impl(const Graph& g, const PathCycleLimits& limits, SearchBudget& budget) {
    PathOutcome out;
    int best = -1;
    for (const VertexSet& comp : connected_components(g)) {
        LabeledSubgraph sub = extract(g, comp);
        LocalPath local = solve_path_piece(sub.graph, limits, budget);
        if (local.edges > best) {
            best = local.edges;
            out.witness = relabel(local.path, sub.labels);
        }
    }
    out.edges = std::max(best, 0);
    return out;
}

struct CycleOutcome {
    std::uint64_t spectrum = 0;
    int circumference = 0;
    std::vector<int> witness;
};

CycleOutcome cycle_search_impl(const Graph& g, const PathCycleLimits& limits, SearchBudget& budget) {
    CycleOutcome out;
    for (const VertexSet& block : biconnected_blocks(g)) {
        if (block.count() < 3) continue; // bridges carry no cycles
        LabeledSubgraph sub = extract(g, block);
        LocalCycles local = solve_cycle_piece(sub.graph, limits, budget);
        out.spectrum |= local.spectrum;
        if (local.circumference > out.circumference) {
            out.circumference = local.circumference;
            out.witness = relabel(local.cycle, sub.labels);
        }
    }
    return out;
}

void check_path_witness(const Graph& g, const std::vector<int>& path, int want_edges) {
    if (static_cast<int>(path.size()) != want_edges + 1)
        throw std::logic_error("path witness length mismatch");
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int v = path[i];
        if (v < 0 || v >= g.vertex_count() || (seen & bit(v)))
            throw std::logic_error("path witness is not a simple vertex sequence");
        seen |= bit(v);
        if (i > 0 && !g.has_edge(path[i - 1], v))
            throw std::logic_error("path witness skips a non-edge");
    }
}

void check_cycle_witness(const Graph& g, const std::vector<int>& cycle, int want_len) {
    if (static_cast<int>(cycle.size()) != want_len || want_len < 3)
        throw std::logic_error("cycle witness length mismatch");
    check_path_witness(g, cycle, want_len - 1);
    if (!g.has_edge(cycle.back(), cycle.front()))
        throw std::logic_error("cycle witness does not close");
}

std::vector<int> spectrum_to_vector(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

bool PathCycleProfile::has_cycle_of_length_at_least(int l) const {
    return !spectrum.empty() && spectrum.back() >= l;
}

nlohmann::ordered_json PathCycleProfile::to_json() const {
    nlohmann::ordered_json j;
    j["longest_path_edges"] = longest_path_edges;
    j["circumference"] = circumference;
    j["spectrum"] = spectrum;
    j["path_witness"] = path_witness;
    j["cycle_witness"] = cycle_witness;
    return j;
}

PathCycleProfile path_cycle_profile(const Graph& g, const PathCycleLimits& limits) {
    SearchBudget budget{limits.max_nodes, &g};
    PathCycleProfile profile;
    if (g.vertex_count() > 0) {
        PathOutcome p = longest_path_impl(g, limits, budget);
        profile.longest_path_edges = p.edges;
        profile.path_witness = std::move(p.witness);
        check_path_witness(g, profile.path_witness, profile.longest_path_edges);
    }
    CycleOutcome c = cycle_search_impl(g, limits, budget);
    profile.circumference = c.circumference;
    profile.spectrum = spectrum_to_vector(c.spectrum);
    profile.cycle_witness = std::move(c.witness);
    if (profile.circumference > 0)
        check_cycle_witness(g, profile.cycle_witness, profile.circumference);
    return profile;
}

std::pair<int, std::vector<int>> longest_path(const Graph& g, const PathCycleLimits& limits) {
    if (g.vertex_count() < 1) throw DomainError("longest_path: graph must have at least one vertex");
    SearchBudget budget{limits.max_nodes, &g};
    PathOutcome p = longest_path_impl(g, limits, budget);
    check_path_witness(g, p.witness, p.edges);
    return {p.edges, std::move(p.witness)};
}

std::pair<int, std::vector<int>> circumference(const Graph& g, const PathCycleLimits& limits) {
    SearchBudget budget{limits.max_nodes, &g};
    CycleOutcome c = cycle_search_impl(g, limits, budget);
    if (c.circumference > 0) check_cycle_witness(g, c.witness, c.circumference);
    return {c.circumference, std::move(c.witness)};
}

std::vector<int> cycle_spectrum(const Graph& g, const PathCycleLimits& limits) {
    SearchBudget budget{limits.max_nodes, &g};
    return spectrum_to_vector(cycle_search_impl(g, limits, budget).spectrum);
}

std::optional<WheelWitness> max_wheel(const Graph& g, const PathCycleLimits& limits) {
    if (g.edge_count() == 0) return std::nullopt;
    SearchBudget budget{limits.max_nodes, &g};
    WheelWitness best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        LabeledSubgraph link = extract(g, VertexSet(g.neighbors(v)));
        PathOutcome p = longest_path_impl(link.graph, limits, budget);
        const int l = p.edges + 1;
        if (l > best.l) {
            best.center = v;
            best.l = l;
            best.path = relabel(p.witness, link.labels);
        }
    }
    check_path_witness(g, best.path, best.l - 1);
    for (int u : best.path) {
        if (!g.has_edge(best.center, u))
            throw std::logic_error("wheel witness path leaves the center's neighborhood");
    }
    return best;
}

std::vector<std::vector<int>> greedy_maximal_paths(const Graph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> path{s};
        std::uint64_t inpath = bit(s);
        for (;;) {
            const std::uint64_t ext = g.neighbors(path.back()) & ~inpath;
            if (!ext) break;
            const int w = std::countr_zero(ext);
            path.push_back(w);
            inpath |= bit(w);
        }
        for (;;) {
            const std::uint64_t ext = g.neighbors(path.front()) & ~inpath;
            if (!ext) break;
            const int w = std::countr_zero(ext);
            path.insert(path.begin(), w);
            inpath |= bit(w);
        }
        out.push_back(std::move(path));
    }
    return out;
}

Verdict kopylov_lemma_check(const Graph& g, const std::vector<int>& path,
                            const PathCycleLimits& limits) {
    Verdict v;
    v.theorem_id = TheoremId::KOPYLOV_LEMMA;

    bool valid = path.size() >= 2;
    std::uint64_t inpath = 0;
    for (std::size_t i = 0; valid && i < path.size(); ++i) {
        const int x = path[i];
        if (x < 0 || x >= g.vertex_count() || (inpath & bit(x))) {
            valid = false;
            break;
        }
        inpath |= bit(x);
        if (i > 0 && !g.has_edge(path[i - 1], x)) valid = false;
    }
    if (!valid || !connectivity_profile(g).two_connected) return v;

    v.premise_met = true;
    const int m = static_cast<int>(path.size()) - 1;
    const int dx = std::popcount(g.neighbors(path.front()) & inpath);
    const int dy = std::popcount(g.neighbors(path.back()) & inpath);
    const int target = std::min(m + 1, dx + dy);
    v.bound = Rational(BigInt(target));

    auto [circ, cycle] = circumference(g, limits);
    v.observed = BigInt(circ);
    v.holds = circ >= target;
    v.tight = v.holds && circ == target;

    nlohmann::ordered_json w;
    w["path"] = path;
    w["path_edges"] = m;
    w["d_path_x"] = dx;
    w["d_path_y"] = dy;
    w["cycle"] = cycle;
    v.witness = std::move(w);
    return v;
}

} // namespace egt
