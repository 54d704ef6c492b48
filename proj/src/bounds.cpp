#include "egt/bounds.hpp"

#include "egt/errors.hpp"

#include <string>

namespace egt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

} // namespace

BigInt f_s(long long n, long long k, long long c, long long s) {
    require(k >= 0, "f_s: k must be nonnegative");
    require(c - k >= 0, "f_s: c-k must be nonnegative");
    require(n >= c - k, "f_s: n must be at least c-k");
    require(s >= 1, "f_s: s must be at least 1");
    return binomial(c - k, s) + binomial(k, s - 1) * BigInt(n - (c - k));
}

EdgeBounds eg_bounds(long long n, long long l) {
    require(n >= 1, "eg_bounds: n must be at least 1");
    require(l >= 2, "eg_bounds: l must be at least 2");
    return EdgeBounds{
        Rational(BigInt(l - 1) * BigInt(n - 1), BigInt(2)),
        Rational(BigInt(l - 2) * BigInt(n), BigInt(2)),
    };
}

CliqueCountBounds luo_bounds(long long n, long long s, long long l) {
    require(n >= 1, "luo_bounds: n must be at least 1");
    require(s >= 2, "luo_bounds: s must be at least 2");
    require(l >= 2, "luo_bounds: l must be at least 2");
    const BigInt choose = binomial(l - 1, s);
    // The cycle-free bound needs l >= 3 to be meaningful; at l = 2 its
    // denominator would vanish, so it is pinned to 0 (C(1, s) = 0 anyway
    // for s >= 2).
    return CliqueCountBounds{
        l >= 3 ? Rational(BigInt(n - 1) * choose, BigInt(l - 2)) : Rational(),
        Rational(BigInt(n) * choose, BigInt(l - 1)),
    };
}

Rational extended_eg_bound(const CliqueProfile& profile, long long s) {
    require(s >= 1 && s <= profile.omega,
            "extended_eg_bound: s must be in [1, omega], got s=" + std::to_string(s) +
                " with omega=" + std::to_string(profile.omega));
    const BigInt upper = profile.count(static_cast<int>(s) + 1); // 0 at s = omega
    const BigInt lower = profile.count(static_cast<int>(s));
    return Rational(BigInt(s + 1) * upper, lower) + Rational(BigInt(s - 1));
}

BigInt kopylov_family_bound(long long n, long long k, long long c, long long s) {
    require(n >= c, "kopylov_family_bound: n must be at least c");
    require(c >= 5, "kopylov_family_bound: c must be at least 5");
    require(s >= 2, "kopylov_family_bound: s must be at least 2");
    require(k >= 2, "kopylov_family_bound: k must be at least 2");
    const BigInt at_k = f_s(n, k, c, s);
    const BigInt at_t = f_s(n, (c - 1) / 2, c, s);
    return std::max(at_k, at_t);
}

BigInt kopylov_family_path_bound(long long n, long long k, long long l, long long s) {
    require(n >= l, "kopylov_family_path_bound: n must be at least l");
    require(l >= 4, "kopylov_family_path_bound: l must be at least 4");
    require(s >= 2, "kopylov_family_path_bound: s must be at least 2");
    require(k >= 1, "kopylov_family_path_bound: k must be at least 1");
    const BigInt at_k = f_s(n, k, l - 1, s);
    const BigInt at_t = f_s(n, l / 2 - 1, l - 1, s);
    return std::max(at_k, at_t);
}

} // namespace egt
