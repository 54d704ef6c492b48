#ifndef EGT_SPECTRAL_HPP
#define EGT_SPECTRAL_HPP

#include "egt/graph.hpp"
#include "egt/verdict.hpp"
#include "egt/verdicts.hpp"

namespace egt {

struct SpectralResult {
    double mu = 0.0;     // largest adjacency eigenvalue
    double tolerance = 0.0;
    long long iterations = 0;
};

struct SpectralOptions {
    double tol = 1e-9;
    long long max_iterations = 1'000'000;
};

// Power iteration on A + I per connected component (the shift defeats the
// period-2 oscillation of bipartite components), all-ones start vector,
// stop when successive Rayleigh quotients differ by < tol/4. Deterministic.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options = {});

// Cycle lengths 3..floor(3 N_3 / N_2 + 2) must all be present.
Verdict check_fact1(const Graph& g, const CheckOptions& options = {});

} // namespace egt

#endif // EGT_SPECTRAL_HPP
