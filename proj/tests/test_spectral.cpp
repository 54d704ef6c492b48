#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "egt/errors.hpp"
#include "egt/harness.hpp"
#include "egt/spectral.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace egt;
using namespace egt::test;

TEST_CASE("spectral radius closed forms") {
    CHECK(spectral_radius(complete_graph(4)).mu == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(spectral_radius(cycle_graph(5)).mu == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(spectral_radius(complete_bipartite(2, 3)).mu ==
          doctest::Approx(std::sqrt(6.0)).epsilon(1e-8));
    CHECK(spectral_radius(Graph(1)).mu == doctest::Approx(0.0));
    CHECK(spectral_radius(Graph(5)).mu == doctest::Approx(0.0));
    CHECK_THROWS_AS(spectral_radius(Graph(0)), DomainError);
    CHECK_THROWS_AS(spectral_radius(complete_graph(3), SpectralOptions{0.0, 100}), DomainError);
}

TEST_CASE("disconnected graphs take the max over components") {
    // K_4 plus an isolated edge
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    edges.emplace_back(4, 5);
    CHECK(spectral_radius(Graph(6, edges)).mu == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("balanced complete bipartite graphs sit exactly at the threshold") {
    for (int n = 2; n <= 30; ++n) {
        const Graph g = complete_bipartite(n / 2, (n + 1) / 2);
        const double want = std::sqrt(static_cast<double>((n * n) / 4));
        const SpectralResult r = spectral_radius(g);
        REQUIRE(std::abs(r.mu - want) <= 2 * r.tolerance + 1e-12);
    }
}

TEST_CASE("rayleigh sandwich on random graphs") {
    SplitMix64 rng(112233);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(14));
        const Graph g = random_graph(rng, n);
        const SpectralResult r = spectral_radius(g);
        const double avg = g.vertex_count() ? 2.0 * g.edge_count() / g.vertex_count() : 0.0;
        CHECK(avg <= r.mu + 1e-6);
        CHECK(r.mu <= g.max_degree() + 1e-6);
    }
}

TEST_CASE("small spectral gaps still land within tolerance") {
    // the successive-Rayleigh test alone stalls early on long paths; the
    // residual certificate keeps the result inside tol
    const double pi = std::acos(-1.0);
    for (int n : {40, 62}) {
        const SpectralResult r = spectral_radius(path_graph(n));
        CHECK(std::abs(r.mu - 2.0 * std::cos(pi / (n + 1))) <= 1e-9);
    }
    const SpectralResult star = spectral_radius(Graph(62, [] {
        std::vector<std::pair<int, int>> e;
        for (int v = 1; v < 62; ++v) e.emplace_back(0, v);
        return e;
    }()));
    CHECK(std::abs(star.mu - std::sqrt(61.0)) <= 1e-9);
    CHECK(std::abs(spectral_radius(cycle_graph(62)).mu - 2.0) <= 1e-9);
}

TEST_CASE("determinism") {
    const Graph g = sample_gnp(14, 0.5, 99);
    const SpectralResult a = spectral_radius(g);
    const SpectralResult b = spectral_radius(g);
    CHECK(a.mu == b.mu);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("cycle-range fact fixed examples") {
    const Verdict k5 = check_fact1(complete_graph(5));
    CHECK(k5.premise_met);
    CHECK(k5.bound == Rational(BigInt(5)));
    CHECK(k5.holds);
    CHECK(k5.tight);

    const Verdict k4 = check_fact1(complete_graph(4));
    CHECK(k4.holds);
    CHECK(k4.bound == Rational(BigInt(4)));

    const Verdict pet = check_fact1(petersen()); // triangle-free: requirement is empty
    CHECK(pet.premise_met);
    CHECK(pet.holds);

    CHECK_FALSE(check_fact1(Graph(2)).premise_met);
}

TEST_CASE("cycle-range fact on exhaustive n <= 6 and seeded samples") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, ClassFilter::ALL, [&](const Graph& g) {
            const Verdict v = check_fact1(g);
            if (v.premise_met) REQUIRE(v.holds);
        });
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Graph g = sample_gnp(12, 0.4, seed);
        const Verdict v = check_fact1(g);
        if (v.premise_met) REQUIRE(v.holds);
    }
}
