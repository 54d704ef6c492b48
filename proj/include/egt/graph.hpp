#ifndef EGT_GRAPH_HPP
#define EGT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egt {

inline constexpr int MAX_VERTICES = 62;

// Subset of the vertices of a host graph, as a bitmask over indices.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    bool test(int v) const { return (bits >> v) & 1u; }
    void set(int v) { bits |= std::uint64_t(1) << v; }
    void reset(int v) { bits &= ~(std::uint64_t(1) << v); }
    int count() const;
    bool empty() const { return bits == 0; }
    std::vector<int> to_vector() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Immutable simple undirected graph on at most 62 vertices, adjacency stored
// as one 64-bit mask per vertex. All transformations return new values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n); // edgeless
    Graph(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_adjacency(std::vector<std::uint64_t> adj);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    std::uint64_t vertex_mask() const; // all n bits set
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    int degree(int v) const;
    int min_degree() const; // 0 for the empty graph
    int max_degree() const;

    Graph with_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v, const char* op) const;
};

// graph6 short form: header byte n+63, then the upper triangle in column-major
// order x(0,1), x(0,2), x(1,2), x(0,3), ... packed into big-endian 6-bit groups,
// each +63. Strict: padding bits must be zero, no trailing bytes.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// First line "n", then one "u v" pair per line. Duplicate edges are idempotent.
Graph parse_edge_list(std::string_view text);

Graph induced_subgraph(const Graph& g, VertexSet s);
Graph neighborhood_subgraph(const Graph& g, int v); // G[N(v)], v excluded

// Disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);

struct ConnectivityProfile {
    bool connected = false;
    bool two_connected = false;
};
ConnectivityProfile connectivity_profile(const Graph& g);
bool is_connected(const Graph& g);

// Connected components as vertex sets, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// Maximal vertex sets inducing 2-connected subgraphs plus bridge pairs;
// every cycle of g lies inside exactly one of these.
std::vector<VertexSet> biconnected_blocks(const Graph& g);

// Iteratively remove every vertex of degree <= alpha until all surviving
// vertices have degree > alpha within the survivor set. Deletion happens in
// batch rounds; the fixpoint is independent of deletion order.
struct DisintegrationResult {
    Graph graph;
    VertexSet survivors; // original labels of the retained vertices
};
DisintegrationResult disintegrate(const Graph& g, int alpha);

} // namespace egt

#endif // EGT_GRAPH_HPP
