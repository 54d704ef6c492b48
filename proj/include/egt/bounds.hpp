#ifndef EGT_BOUNDS_HPP
#define EGT_BOUNDS_HPP

#include "egt/bigint.hpp"
#include "egt/cliques.hpp"

#include <utility>

namespace egt {

// Exact closed-form bound evaluation. Everything here is rational arithmetic;
// no floating point. Out-of-range binomials are 0 by convention.

// Number of s-cliques in the two-level extremal graph on K_{c-k} plus
// n-(c-k) outside vertices: C(c-k, s) + C(k, s-1) * (n - (c-k)).
BigInt f_s(long long n, long long k, long long c, long long s);

struct EdgeBounds {
    Rational cycle_bound; // (l-1)(n-1)/2, graphs with no cycle of length >= l
    Rational path_bound;  // (l-2)n/2, P_l-free graphs
};
// l >= 3 applies to the cycle bound, l >= 2 to the path bound; the stricter
// precondition is only enforced for the bound it guards.
EdgeBounds eg_bounds(long long n, long long l);

struct CliqueCountBounds {
    Rational cycle_bound; // (n-1)/(l-2) * C(l-1, s)
    Rational path_bound;  // n/(l-1) * C(l-1, s)
};
CliqueCountBounds luo_bounds(long long n, long long s, long long l);

// Lower bound on the longest path edge count from the clique profile:
// (s+1) N_{s+1} / N_s + s - 1, with N_{s+1} = 0 at s = omega. 1 <= s <= omega.
Rational extended_eg_bound(const CliqueProfile& profile, long long s);

// max{f_s(n,k,c), f_s(n, floor((c-1)/2), c)} for 2-connected graphs of
// circumference < c and minimum degree >= k. n >= c >= 5, s >= 2, k >= 2.
BigInt kopylov_family_bound(long long n, long long k, long long c, long long s);

// Path variant: max{f_s(n,k,l-1), f_s(n, floor(l/2)-1, l-1)} for connected
// P_l-free graphs of minimum degree >= k. n >= l >= 4, s >= 2, k >= 1.
BigInt kopylov_family_path_bound(long long n, long long k, long long l, long long s);

} // namespace egt

#endif // EGT_BOUNDS_HPP
