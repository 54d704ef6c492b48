#include "egt/graph.hpp"

#include "egt/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace egt {

int VertexSet::count() const { return std::popcount(bits); }

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    std::uint64_t b = bits;
    while (b) {
        out.push_back(std::countr_zero(b));
        b &= b - 1;
    }
    return out;
}

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > MAX_VERTICES)
        throw DomainError("Graph: vertex count " + std::to_string(n) + " outside [0, 62]");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u, "edge endpoint");
        check_vertex(v, "edge endpoint");
        if (u == v) throw DomainError("Graph: self-loop at vertex " + std::to_string(u));
        adj_[u] |= std::uint64_t(1) << v;
        adj_[v] |= std::uint64_t(1) << u;
    }
    m_ = 0;
    for (int v = 0; v < n_; ++v) m_ += std::popcount(adj_[v]);
    m_ /= 2;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    if (n > MAX_VERTICES) throw DomainError("Graph: vertex count outside [0, 62]");
    const std::uint64_t allowed = n == 0 ? 0 : (~std::uint64_t(0) >> (64 - n));
    int total = 0;
    for (int v = 0; v < n; ++v) {
        if (adj[v] & ~allowed) throw DomainError("Graph: adjacency bit outside vertex range");
        if ((adj[v] >> v) & 1u) throw DomainError("Graph: self-loop at vertex " + std::to_string(v));
        total += std::popcount(adj[v]);
    }
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = adj[v];
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (!((adj[u] >> v) & 1u)) throw DomainError("Graph: adjacency not symmetric");
        }
    }
    Graph g;
    g.n_ = n;
    g.m_ = total / 2;
    g.adj_ = std::move(adj);
    return g;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 0 ? 0 : (~std::uint64_t(0) >> (64 - n_));
}

void Graph::check_vertex(int v, const char* op) const {
    if (v < 0 || v >= n_)
        throw DomainError(std::string(op) + ": vertex " + std::to_string(v) +
                          " outside [0, " + std::to_string(n_) + ")");
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return std::popcount(adj_[v]);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : 64;
    for (int v = 0; v < n_; ++v) d = std::min(d, std::popcount(adj_[v]));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u, "with_edge");
    check_vertex(v, "with_edge");
    if (u == v) throw DomainError("with_edge: self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    if (!g.has_edge(u, v)) {
        g.adj_[u] |= std::uint64_t(1) << v;
        g.adj_[v] |= std::uint64_t(1) << u;
        g.m_ += 1;
    }
    return g;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty record (missing header at offset 0)");
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw ParseError("graph6: long-form header at offset 0 is unsupported (n > 62)");
    if (header < 63 || header > 125)
        throw ParseError("graph6: malformed header byte at offset 0");
    const int n = header - 63;
    const int pair_bits = n * (n - 1) / 2;
    const std::size_t body_bytes = (pair_bits + 5) / 6;
    if (text.size() < 1 + body_bytes)
        throw ParseError("graph6: truncated bit section at offset " + std::to_string(text.size()) +
                         " (expected " + std::to_string(1 + body_bytes) + " bytes)");
    if (text.size() > 1 + body_bytes)
        throw ParseError("graph6: trailing garbage at offset " + std::to_string(1 + body_bytes));

    std::vector<std::uint64_t> adj(n, 0);
    int bit_index = 0;
    for (std::size_t byte = 0; byte < body_bytes; ++byte) {
        const unsigned char c = static_cast<unsigned char>(text[1 + byte]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: malformed body byte at offset " + std::to_string(1 + byte));
        const unsigned group = c - 63;
        for (int k = 5; k >= 0; --k, ++bit_index) {
            const bool on = (group >> k) & 1u;
            if (bit_index >= pair_bits) {
                if (on)
                    throw ParseError("graph6: nonzero padding bit at offset " +
                                     std::to_string(1 + byte));
                continue;
            }
            if (on) {
                // bit_index enumerates pairs (i, j), j ascending, i < j
                int j = 1;
                int acc = bit_index;
                while (acc >= j) {
                    acc -= j;
                    ++j;
                }
                const int i = acc;
                adj[i] |= std::uint64_t(1) << j;
                adj[j] |= std::uint64_t(1) << i;
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > MAX_VERTICES) throw SizeError("graph6: order above 62 unsupported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0 || n > MAX_VERTICES)
                throw ParseError("edge list: line 1: expected vertex count in [0, 62]");
            std::string rest;
            if (ls >> rest) throw ParseError("edge list: line 1: trailing token '" + rest + "'");
            continue;
        }
        long long u, v;
        if (!(ls >> u)) {
            std::string tok;
            std::istringstream probe(line);
            if (!(probe >> tok)) continue; // blank line
            throw ParseError("edge list: line " + std::to_string(line_no) + ": non-integer token '" +
                             tok + "'");
        }
        if (!(ls >> v))
            throw ParseError("edge list: line " + std::to_string(line_no) + ": missing second endpoint");
        std::string rest;
        if (ls >> rest)
            throw ParseError("edge list: line " + std::to_string(line_no) + ": trailing token '" +
                             rest + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: line " + std::to_string(line_no) + ": vertex out of range");
        if (u == v)
            throw ParseError("edge list: line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: line 1: expected vertex count in [0, 62]");
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.bits & ~g.vertex_mask())
        throw DomainError("induced_subgraph: selection contains a vertex outside the host graph");
    const std::vector<int> keep = s.to_vector(); // ascending original index
    const int k = static_cast<int>(keep.size());
    std::vector<std::uint64_t> adj(k, 0);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (g.has_edge(keep[a], keep[b])) {
                adj[a] |= std::uint64_t(1) << b;
                adj[b] |= std::uint64_t(1) << a;
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph neighborhood_subgraph(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw DomainError("neighborhood_subgraph: vertex " + std::to_string(v) + " out of range");
    return induced_subgraph(g, VertexSet(g.neighbors(v)));
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng + nh > MAX_VERTICES)
        throw SizeError("join: combined order " + std::to_string(ng + nh) + " exceeds 62");
    std::vector<std::uint64_t> adj(ng + nh, 0);
    const std::uint64_t h_mask = (nh == 0 ? 0 : (~std::uint64_t(0) >> (64 - nh))) << ng;
    const std::uint64_t g_mask = ng == 0 ? 0 : (~std::uint64_t(0) >> (64 - ng));
    for (int v = 0; v < ng; ++v) adj[v] = g.neighbors(v) | h_mask;
    for (int v = 0; v < nh; ++v) adj[ng + v] = (h.neighbors(v) << ng) | g_mask;
    return Graph::from_adjacency(std::move(adj));
}

namespace {

// Vertices reachable from `start` walking only inside `allowed`.
std::uint64_t reachable_set(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t(1) << start;
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

} // namespace

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    return reachable_set(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t rest = g.vertex_mask();
    while (rest) {
        int v = std::countr_zero(rest);
        std::uint64_t comp = reachable_set(g, v, rest);
        out.emplace_back(comp);
        rest &= ~comp;
    }
    return out;
}

namespace {

// Lowpoint DFS shared by articulation detection and block extraction.
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;
    bool has_articulation = false;
    int timer = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), -1) {}

    void run(int root) {
        dfs(root, -1);
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        std::uint64_t nb = g.neighbors(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v == parent) continue;
            if (disc[v] == -1) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if ((parent != -1 && low[v] >= disc[u]) || (parent == -1 && children > 1))
                    has_articulation = true;
                if (low[v] >= disc[u]) pop_block(u, v);
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    void pop_block(int u, int v) {
        VertexSet block;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            block.set(a);
            block.set(b);
            if (a == u && b == v) break;
        }
        if (!block.empty()) blocks.push_back(block);
    }
};

} // namespace

ConnectivityProfile connectivity_profile(const Graph& g) {
    ConnectivityProfile p;
    p.connected = is_connected(g);
    if (!p.connected || g.vertex_count() < 3) return p;
    BlockDfs dfs(g);
    dfs.run(0);
    p.two_connected = !dfs.has_articulation;
    return p;
}

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
    std::vector<VertexSet> out;
    for (const VertexSet& comp : connected_components(g)) {
        if (comp.count() == 1) continue;
        BlockDfs dfs(g);
        dfs.run(std::countr_zero(comp.bits));
        for (auto& b : dfs.blocks) out.push_back(b);
    }
    return out;
}

DisintegrationResult disintegrate(const Graph& g, int alpha) {
    if (alpha < 0) throw DomainError("disintegrate: alpha must be nonnegative");
    std::uint64_t survivors = g.vertex_mask();
    for (;;) {
        std::uint64_t doomed = 0;
        std::uint64_t rest = survivors;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(g.neighbors(v) & survivors) <= alpha)
                doomed |= std::uint64_t(1) << v;
        }
        if (!doomed) break;
        survivors &= ~doomed;
    }
    return DisintegrationResult{induced_subgraph(g, VertexSet(survivors)), VertexSet(survivors)};
}

} // namespace egt
