#ifndef EGT_CONSTRUCTIONS_HPP
#define EGT_CONSTRUCTIONS_HPP

#include "egt/graph.hpp"
#include "egt/verdict.hpp"

#include <string_view>

namespace egt {

// Extremal families used as tightness certificates and harness inputs.

// K_{c-k} on vertices 0..c-k-1 plus n-(c-k) outside vertices, each adjacent
// to exactly the k lowest-indexed clique vertices. Requires c > k >= 1,
// k <= c-k, and n >= c-k.
Graph build_hnkc(int n, int k, int c);

// n/(l-1) pairwise disjoint copies of K_{l-1}; (l-1) must divide n, l >= 2.
Graph build_disjoint_cliques(int n, int l);

// (n-1)/(l-2) copies of K_{l-1} all sharing vertex 0; (l-2) must divide n-1,
// l >= 3.
Graph build_shared_vertex_cliques(int n, int l);

// K_{n-2} on vertices 0..n-3 plus two pendant vertices attached to vertex 0;
// n >= 5.
Graph build_clique_plus_pendants(int n);

enum class ConstructionKind { HNKC, DISJOINT_CLIQUES, SHARED_VERTEX_CLIQUES, CLIQUE_PLUS_PENDANTS };

struct ConstructionSpec {
    ConstructionKind kind{};
    ParamMap params; // n plus k/c or l as the kind requires
};

Graph build(const ConstructionSpec& spec);

const char* construction_kind_name(ConstructionKind kind);

} // namespace egt

#endif // EGT_CONSTRUCTIONS_HPP
