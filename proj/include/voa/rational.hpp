#pragma once
// Exact rational scalar used throughout the engine. Numerator/denominator
// are 64-bit with 128-bit intermediates; any result that does not fit after
// reduction throws instead of silently wrapping. Linear algebra that can
// grow entries beyond this range uses BigRat (see linalg.hpp).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace voa {

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(n, d); }

    static Rat parse(std::string_view s);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.num_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        __int128 n = i128(a.num_) * b.den_;
        __int128 d = i128(a.den_) * b.num_;
        return make(n, d);
    }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }
    Rat inverse() const { return Rat(1) / *this; }

    // Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const { return -((-*this).floor()); }

    std::string str() const;

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }
    static Rat make(__int128 n, __int128 d);
    void assign(long long n, long long d);

    long long num_;
    long long den_;  // > 0, gcd(|num|, den) == 1
};

// Binomial coefficient binom(x, k) for integer x (possibly negative), k >= 0,
// as the polynomial x(x-1)...(x-k+1)/k!.
Rat binomial(long long x, int k);

}  // namespace voa
