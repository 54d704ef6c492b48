#include "egt/constructions.hpp"

#include "egt/errors.hpp"

#include <string>

namespace egt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

long long param(const ConstructionSpec& spec, const char* key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw DomainError(std::string("construction: missing parameter '") + key + "'");
    return it->second;
}

} // namespace

Graph build_hnkc(int n, int k, int c) {
    require(k >= 1, "build_hnkc: k must be at least 1");
    require(c > k, "build_hnkc: c must exceed k");
    require(k <= c - k, "build_hnkc: the k attachment vertices must fit inside K_{c-k}");
    require(n >= c - k, "build_hnkc: n must be at least c-k");
    require(n <= MAX_VERTICES, "build_hnkc: n exceeds 62");
    const int core = c - k;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < core; ++u)
        for (int v = u + 1; v < core; ++v) edges.emplace_back(u, v);
    for (int x = core; x < n; ++x)
        for (int a = 0; a < k; ++a) edges.emplace_back(x, a);
    return Graph(n, edges);
}

Graph build_disjoint_cliques(int n, int l) {
    require(l >= 2, "build_disjoint_cliques: l must be at least 2");
    require(n >= 0 && n <= MAX_VERTICES, "build_disjoint_cliques: n outside [0, 62]");
    require(n % (l - 1) == 0, "build_disjoint_cliques: l-1 must divide n");
    const int block = l - 1;
    std::vector<std::pair<int, int>> edges;
    for (int start = 0; start < n; start += block)
        for (int u = start; u < start + block; ++u)
            for (int v = u + 1; v < start + block; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph build_shared_vertex_cliques(int n, int l) {
    require(l >= 3, "build_shared_vertex_cliques: l must be at least 3");
    require(n >= 1 && n <= MAX_VERTICES, "build_shared_vertex_cliques: n outside [1, 62]");
    require((n - 1) % (l - 2) == 0, "build_shared_vertex_cliques: l-2 must divide n-1");
    const int block = l - 2; // vertices per clique besides the hub
    std::vector<std::pair<int, int>> edges;
    for (int start = 1; start < n; start += block) {
        for (int u = start; u < start + block; ++u) {
            edges.emplace_back(0, u);
            for (int v = u + 1; v < start + block; ++v) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph build_clique_plus_pendants(int n) {
    require(n >= 5, "build_clique_plus_pendants: n must be at least 5");
    require(n <= MAX_VERTICES, "build_clique_plus_pendants: n exceeds 62");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n - 2; ++u)
        for (int v = u + 1; v < n - 2; ++v) edges.emplace_back(u, v);
    edges.emplace_back(0, n - 2);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph build(const ConstructionSpec& spec) {
    switch (spec.kind) {
    case ConstructionKind::HNKC:
        return build_hnkc(static_cast<int>(param(spec, "n")), static_cast<int>(param(spec, "k")),
                          static_cast<int>(param(spec, "c")));
    case ConstructionKind::DISJOINT_CLIQUES:
        return build_disjoint_cliques(static_cast<int>(param(spec, "n")),
                                      static_cast<int>(param(spec, "l")));
    case ConstructionKind::SHARED_VERTEX_CLIQUES:
        return build_shared_vertex_cliques(static_cast<int>(param(spec, "n")),
                                           static_cast<int>(param(spec, "l")));
    case ConstructionKind::CLIQUE_PLUS_PENDANTS:
        return build_clique_plus_pendants(static_cast<int>(param(spec, "n")));
    }
    throw DomainError("construction: unknown kind");
}

const char* construction_kind_name(ConstructionKind kind) {
    switch (kind) {
    case ConstructionKind::HNKC: return "hnkc";
    case ConstructionKind::DISJOINT_CLIQUES: return "disjoint-cliques";
    case ConstructionKind::SHARED_VERTEX_CLIQUES: return "shared-cliques";
    case ConstructionKind::CLIQUE_PLUS_PENDANTS: return "clique-pendants";
    }
    return "?";
}

} // namespace egt
