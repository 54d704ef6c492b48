#include "egt/bigint.hpp"

#include "egt/errors.hpp"

#include <algorithm>

namespace egt {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid UB for LLONG_MIN by negating in unsigned space.
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = 1;
    r.limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) r.limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(d);
    }
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.sign_ = big.sign_;
        r.limbs_ = BigInt::sub_mag(big.limbs_, small.limbs_);
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw DomainError("BigInt: division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    if (cmp_mag(a, b) < 0) return {BigInt(), a};

    // Binary long division on magnitudes; operands stay tiny here.
    BigInt q, r;
    const BigInt bm = b.abs();
    q.limbs_.assign(a.limbs_.size(), 0);
    const std::size_t total_bits = a.limbs_.size() * 32;
    for (std::size_t bit = total_bits; bit-- > 0;) {
        // r = r*2 + bit(a, bit)
        std::uint32_t carry = (a.limbs_[bit / 32] >> (bit % 32)) & 1u;
        for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
            std::uint32_t next = r.limbs_[i] >> 31;
            r.limbs_[i] = (r.limbs_[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.limbs_.push_back(carry);
        r.sign_ = r.limbs_.empty() ? 0 : 1;

        if (cmp_mag(r, bm) >= 0) {
            r.limbs_ = sub_mag(r.limbs_, bm.limbs_);
            r.trim();
            q.limbs_[bit / 32] |= (1u << (bit % 32));
        }
    }
    q.sign_ = 1;
    q.trim();
    if (q.sign_ != 0) q.sign_ = a.sign_ * b.sign_;
    if (r.sign_ != 0) r.sign_ = a.sign_;
    return {q, r};
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a, b) * (a.sign_ == 0 ? 0 : a.sign_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        // divide magnitude by 1e9 in place
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        std::string group = std::to_string(rem);
        if (!mag.empty()) group.insert(0, 9 - group.size(), '0');
        out.insert(0, group);
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return mag <= 0x7fffffffffffffffULL;
    return mag <= 0x8000000000000000ULL;
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw DomainError("BigInt: value does not fit in long long: " + to_string());
    if (sign_ == 0) return 0;
    std::uint64_t mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (sign_ > 0) return static_cast<long long>(mag);
    return static_cast<long long>(~mag + 1);
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DomainError("Rational: zero denominator");
    normalize();
}

Rational Rational::of(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

bool operator==(const Rational& a, const BigInt& b) { return a.num_ == b && a.is_integer(); }

std::strong_ordering operator<=>(const Rational& a, const BigInt& b) {
    return a.num_ <=> (b * a.den_);
}

BigInt Rational::floor() const {
    auto [q, r] = BigInt::divmod(num_, den_);
    if (!r.is_zero() && num_.sign() < 0) return q - BigInt(1);
    return q;
}

BigInt Rational::ceil() const {
    auto [q, r] = BigInt::divmod(num_, den_);
    if (!r.is_zero() && num_.sign() > 0) return q + BigInt(1);
    return q;
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

namespace {

constexpr int PASCAL_ROWS = 64;

const std::vector<std::vector<BigInt>>& pascal_table() {
    static const std::vector<std::vector<BigInt>> table = [] {
        std::vector<std::vector<BigInt>> t(PASCAL_ROWS);
        for (int n = 0; n < PASCAL_ROWS; ++n) {
            t[n].resize(n + 1);
            t[n][0] = BigInt(1);
            t[n][n] = BigInt(1);
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

} // namespace

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return BigInt();
    if (n < PASCAL_ROWS) return pascal_table()[n][k];
    // Fallback for large n: multiplicative formula with exact division.
    k = std::min(k, n - k);
    BigInt c(1);
    for (long long i = 1; i <= k; ++i) {
        c = c * BigInt(n - k + i);
        c = c / BigInt(i);
    }
    return c;
}

} // namespace egt
