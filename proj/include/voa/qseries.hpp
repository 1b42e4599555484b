#pragma once
// Truncated q-expansions with rational exponents on a fixed lattice (1/D)Z.
// A series knows every coefficient for exponents <= order(); storage is
// sparse. All arithmetic is exact and truncation-correct: products never
// claim coefficients beyond the range where all cross terms are available.

#include <map>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

class QSeries {
public:
    // Empty (zero) series valid to `order`, exponents in (1/denom)Z.
    QSeries(long long denom, Rat order);

    long long denom() const { return denom_; }
    Rat order() const { return order_; }

    // Coefficient of q^e (zero if absent). Throws if e is beyond the
    // truncation order or not on the exponent lattice.
    Rat coeff(const Rat& e) const;
    void set_coeff(const Rat& e, const Rat& c);
    void add_coeff(const Rat& e, const Rat& c);

    // Smallest exponent with nonzero coefficient, or order()+1 if zero.
    Rat leading_exponent() const;

    bool is_zero() const { return c_.empty(); }

    // Exponents with nonzero coefficient, ascending.
    std::vector<Rat> support() const;

    QSeries truncated(Rat new_order) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& b) { *this = *this + b; return *this; }
    QSeries& operator-=(const QSeries& b) { *this = *this - b; return *this; }
    QSeries& operator*=(const QSeries& b) { *this = *this * b; return *this; }

    QSeries scaled(const Rat& c) const;
    // Multiplication by q^e.
    QSeries shifted(const Rat& e) const;

    // Reciprocal of a series with nonzero constant term; exponents must be
    // integral multiples of 1/denom >= 0 with unit leading exponent 0.
    QSeries inverse() const;

    // Comparison of all coefficients up to min(order, both). Returns true
    // and sets *mismatch to the first differing exponent otherwise.
    bool equal_to(const QSeries& b, Rat up_to, Rat* mismatch = nullptr) const;

    // One line per nonzero coefficient: "q^(e): c", ascending exponents.
    std::string str() const;

    // 1 (constant series).
    static QSeries one(long long denom, Rat order);

    // 1 / prod_{n>=1} (1 - q^n)^d, exact d-colored partition counts.
    static QSeries qpochhammer_inverse(int d, long long denom, Rat order);

    // prod_{n>=1} (1 + q^n)^{-d}.
    static QSeries plus_pochhammer_inverse(int d, long long denom, Rat order);

private:
    long long key(const Rat& e) const;   // e*denom, throws off-lattice
    Rat exp_of(long long k) const { return Rat(k, denom_); }

    long long denom_;
    Rat order_;
    std::map<long long, Rat> c_;  // key = exponent * denom
};

}  // namespace voa
