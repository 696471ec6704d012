#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polysum {

using std::int64_t;
using std::uint64_t;

// Checked 64-bit arithmetic. Overflow is a hard error, never wraparound.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Largest s >= 0 with s*s <= n.
inline int64_t isqrt64(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt64: negative argument");
    auto s = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && (__int128)s * s > n) --s;
    while ((__int128)(s + 1) * (s + 1) <= n) ++s;
    return s;
}

inline bool is_square(int64_t n, int64_t& root) {
    if (n < 0) return false;
    root = isqrt64(n);
    return root * root == n;
}

// n mod m in [0, m), m > 0.
inline int64_t pos_mod(int64_t n, int64_t m) {
    int64_t r = n % m;
    return r < 0 ? r + m : r;
}

// p-adic valuation of n != 0.
inline int valuation(int64_t n, int64_t p, int64_t& unit_part) {
    if (n == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    unit_part = n;
    return v;
}

// Exact rational on int64 with reduced representation, den > 0.
// Denominators in this project stay tiny (2 and 2(m-2)), so plain
// 64-bit arithmetic with a post-reduction range check is enough.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make_checked((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                            (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make_checked((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                            (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_checked((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make_checked((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int64_t floor() const {
        int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    int64_t ceil() const {
        int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    bool is_integer() const { return den_ == 1; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    static Rational make_checked(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<int64_t>(n);
        r.den_ = static_cast<int64_t>(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    int64_t num_;
    int64_t den_;
};

// Draw uniformly from [0, n) with rejection, independent of any
// standard-library distribution implementation.
template <typename Rng>
uint64_t uniform_below(Rng& rng, uint64_t n) {
    if (n == 0) throw std::domain_error("uniform_below: empty range");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % n;
}

}  // namespace polysum
