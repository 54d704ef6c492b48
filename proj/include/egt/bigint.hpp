#ifndef EGT_BIGINT_HPP
#define EGT_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace egt {

// Arbitrary-precision signed integer, base 2^32 limbs, little-endian.
// Clique counts and bound numerators at n <= 62 stay around 130 bits,
// so schoolbook arithmetic is plenty.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_u64(std::uint64_t v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncating division; remainder has the sign of the dividend. b != 0.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b); // nonnegative result

    std::string to_string() const;

    // Value must fit; throws DomainError otherwise. Used for small observables
    // (path lengths, spectrum endpoints) extracted from exact arithmetic.
    long long to_ll() const;
    bool fits_ll() const;

private:
    int sign_ = 0;                      // -1, 0, +1; 0 iff limbs_ empty
    std::vector<std::uint32_t> limbs_;  // magnitude, no leading zero limbs

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

// Exact rational with normalized representation: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n) : num_(n), den_(1) {}
    static Rational of(long long n, long long d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const Rational& a, const BigInt& b);

    BigInt floor() const;
    BigInt ceil() const;

    // Always "num/den", e.g. "18/1", "21/2", "-3/4".
    std::string to_string() const;

private:
    BigInt num_, den_;
    void normalize();
};

// C(n, k) with the standard out-of-range convention: 0 when k < 0 or k > n
// or n < 0, and C(n, 0) = 1. Backed by a cached Pascal triangle.
BigInt binomial(long long n, long long k);

} // namespace egt

#endif // EGT_BIGINT_HPP
