#include "egt/spectral.hpp"

#include "egt/errors.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace egt {

namespace {

// Perron value of (A + I) restricted to one component, minus the shift.
// Stops when successive Rayleigh quotients differ by < tol/4 and the
// residual norm ||(A+I)x - theta x|| certifies the eigenvalue to tol/2
// (the successive-difference test alone under-delivers on small-gap
// graphs such as long paths).
double component_mu(const Graph& g, const std::vector<int>& verts, const SpectralOptions& opt,
                    long long& iterations) {
    const std::size_t k = verts.size();
    if (k == 1) return 0.0;
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < k; ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k))), y(k, 0.0);
    double rayleigh_prev = 0.0;
    double residual = 0.0;
    for (long long it = 1; it <= opt.max_iterations; ++it) {
        ++iterations;
        for (std::size_t i = 0; i < k; ++i) {
            double acc = x[i]; // identity shift
            std::uint64_t nb = g.neighbors(verts[i]);
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                acc += x[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])];
            }
            y[i] = acc;
        }
        double dot_xy = 0.0, norm2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            dot_xy += x[i] * y[i]; // x is unit length
            norm2 += y[i] * y[i];
        }
        const double rayleigh = dot_xy;
        // componentwise, not via ||y||^2 - rayleigh^2: that form cancels
        // catastrophically once the iterate is nearly converged
        double res2 = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double d = y[i] - rayleigh * x[i];
            res2 += d * d;
        }
        residual = std::sqrt(res2);
        const double scale = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < k; ++i) x[i] = y[i] * scale;
        if (it > 1 && std::abs(rayleigh - rayleigh_prev) < opt.tol / 4.0 &&
            residual < opt.tol / 2.0)
            return rayleigh - 1.0;
        rayleigh_prev = rayleigh;
    }
    throw ConvergenceError("spectral_radius: no convergence within " +
                           std::to_string(opt.max_iterations) + " iterations (residual " +
                           std::to_string(residual) + ")");
}

} // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options) {
    if (g.vertex_count() < 1) throw DomainError("spectral_radius: graph must have a vertex");
    if (!(options.tol > 0)) throw DomainError("spectral_radius: tolerance must be positive");
    SpectralResult result;
    result.tolerance = options.tol;
    double mu = 0.0;
    for (const VertexSet& comp : connected_components(g)) {
        mu = std::max(mu, component_mu(g, comp.to_vector(), options, result.iterations));
    }
    result.mu = mu;
    return result;
}

Verdict check_fact1(const Graph& g, const CheckOptions& options) {
    return check(TheoremId::FACT1, g, {}, options);
}

} // namespace egt
