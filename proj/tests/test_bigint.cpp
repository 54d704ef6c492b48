#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "egt/bigint.hpp"
#include "egt/errors.hpp"
#include "egt/harness.hpp"

#include <string>

using namespace egt;

namespace {

BigInt big_from_u128(unsigned __int128 v) {
    BigInt r;
    BigInt base = BigInt::from_u64(1ULL << 32) * BigInt::from_u64(1ULL << 32);
    r = BigInt::from_u64(static_cast<std::uint64_t>(v >> 64)) * base +
        BigInt::from_u64(static_cast<std::uint64_t>(v));
    return r;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return out;
}

} // namespace

TEST_CASE("small integer construction and printing") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(123456789012345678LL).to_string() == "123456789012345678");
    CHECK(BigInt::from_u64(~std::uint64_t(0)).to_string() == "18446744073709551615");
    CHECK(BigInt(42).to_ll() == 42);
    CHECK(BigInt(-42).to_ll() == -42);
}

TEST_CASE("arithmetic agrees with a 128-bit oracle") {
    SplitMix64 rng(0xb15b00b5);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng.next() >> (rng.below(40));
        const std::uint64_t b = rng.next() >> (rng.below(40));
        const unsigned __int128 wa = a, wb = b;
        CHECK(big_from_u128(wa + wb) == BigInt::from_u64(a) + BigInt::from_u64(b));
        CHECK(big_from_u128(wa * wb) == BigInt::from_u64(a) * BigInt::from_u64(b));
        if (a >= b) CHECK(big_from_u128(wa - wb) == BigInt::from_u64(a) - BigInt::from_u64(b));
        CHECK((big_from_u128(wa * wb)).to_string() == u128_to_string(wa * wb));
        if (b != 0) {
            auto [q, r] = BigInt::divmod(big_from_u128(wa * wb + wa), BigInt::from_u64(b));
            CHECK(q == big_from_u128((wa * wb + wa) / wb));
            CHECK(r == big_from_u128((wa * wb + wa) % wb));
        }
    }
}

TEST_CASE("signed subtraction and comparison") {
    CHECK(BigInt(5) - BigInt(9) == BigInt(-4));
    CHECK(BigInt(-5) * BigInt(-4) == BigInt(20));
    CHECK(BigInt(-5) * BigInt(4) == BigInt(-20));
    CHECK(BigInt(-3) < BigInt(2));
    CHECK(BigInt(-3) > BigInt(-4));
    CHECK(BigInt(7) + BigInt(-7) == BigInt(0));
    auto [q, r] = BigInt::divmod(BigInt(-7), BigInt(2));
    CHECK(q == BigInt(-3)); // truncation toward zero
    CHECK(r == BigInt(-1));
}

TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
}

TEST_CASE("rational normalization and printing") {
    CHECK(Rational::of(21, 2).to_string() == "21/2");
    CHECK(Rational::of(36, 2).to_string() == "18/1");
    CHECK(Rational::of(-4, -8).to_string() == "1/2");
    CHECK(Rational::of(4, -8).to_string() == "-1/2");
    CHECK(Rational::of(0, 7).to_string() == "0/1");
    CHECK_THROWS_AS(Rational::of(1, 0), DomainError);
}

TEST_CASE("rational comparison and arithmetic") {
    CHECK(Rational::of(1, 3) < Rational::of(1, 2));
    CHECK(Rational::of(2, 4) == Rational::of(1, 2));
    CHECK(Rational::of(1, 3) + Rational::of(1, 6) == Rational::of(1, 2));
    CHECK(Rational::of(3, 2) * Rational::of(4, 3) == Rational(BigInt(2)));
    CHECK(Rational::of(7, 2) - Rational::of(1, 2) == Rational(BigInt(3)));
    CHECK(Rational::of(5, 2) > BigInt(2));
    CHECK(Rational::of(4, 2) == BigInt(2));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational::of(7, 2).floor() == BigInt(3));
    CHECK(Rational::of(7, 2).ceil() == BigInt(4));
    CHECK(Rational::of(6, 2).floor() == BigInt(3));
    CHECK(Rational::of(6, 2).ceil() == BigInt(3));
    CHECK(Rational::of(-7, 2).floor() == BigInt(-4));
    CHECK(Rational::of(-7, 2).ceil() == BigInt(-3));
    CHECK(Rational::of(0, 5).floor() == BigInt(0));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == BigInt(6));
    CHECK(binomial(62, 0) == BigInt(1));
    CHECK(binomial(4, 5) == BigInt(0));
    CHECK(binomial(2, 4) == BigInt(0));
    CHECK(binomial(-1, 0) == BigInt(0));
    CHECK(binomial(3, -1) == BigInt(0));
    CHECK(binomial(62, 31).to_string() == "465428353255261088");
    // Pascal identity over the cached range
    for (int n = 1; n < 40; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    // beyond the cache
    CHECK(binomial(70, 2) == BigInt(70 * 69 / 2));
}
