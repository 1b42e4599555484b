#pragma once
// Exact dense linear algebra over arbitrary-precision rationals, used for
// rank/kernel/eigenspace computations in the highest-weight census and the
// fixed-point dimension cross-checks. Entries produced by the mode engine
// are small, but Gaussian elimination can grow intermediates past 64 bits,
// hence the big-rational scalar here.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

using BigRat = boost::multiprecision::cpp_rational;

inline BigRat to_big(const Rat& r) { return BigRat(r.num(), r.den()); }

using QMatrix = std::vector<std::vector<BigRat>>;  // row-major

QMatrix qmatrix(std::size_t rows, std::size_t cols);

// Reduced row echelon form in place; returns the rank.
std::size_t rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Basis of {x : M x = 0} as columns (each returned vector has size cols).
// cols must be passed explicitly so that a constraint-free system (zero
// rows) correctly yields the full standard basis.
std::vector<std::vector<BigRat>> kernel(const QMatrix& m, std::size_t cols);

// C = A * B.
QMatrix matmul(const QMatrix& a, const QMatrix& b);

}  // namespace voa
