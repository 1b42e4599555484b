#include "doctest.h"
#include "oracles.hpp"
#include "voa/qseries.hpp"

using namespace voa;

TEST_CASE("qpochhammer_inverse matches the knapsack partition oracle") {
    for (int d : {0, 1, 2, 3}) {
        QSeries s = QSeries::qpochhammer_inverse(d, 30, Rat(12));
        auto dp = oracle::colored_partitions(d, 12);
        for (int k = 0; k <= 12; ++k) CHECK(s.coeff(Rat(k)) == Rat(dp[k]));
    }
}

TEST_CASE("frozen partition values") {
    QSeries p1 = QSeries::qpochhammer_inverse(1, 30, Rat(4));
    CHECK(p1.coeff(Rat(0)) == Rat(1));
    CHECK(p1.coeff(Rat(1)) == Rat(1));
    CHECK(p1.coeff(Rat(2)) == Rat(2));
    CHECK(p1.coeff(Rat(3)) == Rat(3));
    CHECK(p1.coeff(Rat(4)) == Rat(5));
    CHECK(QSeries::qpochhammer_inverse(3, 30, Rat(2)).coeff(Rat(2)) == Rat(9));
    CHECK(QSeries::qpochhammer_inverse(0, 30, Rat(5)).coeff(Rat(0)) == Rat(1));
    CHECK(QSeries::qpochhammer_inverse(0, 30, Rat(5)).coeff(Rat(5)) == Rat(0));
}

TEST_CASE("series arithmetic truncates correctly") {
    QSeries a(30, Rat(5));
    a.set_coeff(Rat(1, 3), Rat(1));
    a.set_coeff(Rat(2), Rat(-2));
    QSeries b(30, Rat(5));
    b.set_coeff(Rat(0), Rat(1));
    b.set_coeff(Rat(5, 3), Rat(3));
    QSeries p = a * b;
    CHECK(p.coeff(Rat(1, 3)) == Rat(1));
    CHECK(p.coeff(Rat(2)) == Rat(1));  // 1/3 + 5/3 gives 3, plus -2
    CHECK(p.coeff(Rat(11, 3)) == Rat(-6));
    // order of the product extends by the other factor's leading exponent
    CHECK(p.order() >= Rat(5));
}

TEST_CASE("inverse of a unit series") {
    QSeries phi(30, Rat(10));
    // prod (1-q^n) via its inverse's inverse
    QSeries inv = QSeries::qpochhammer_inverse(1, 30, Rat(10));
    QSeries recovered = inv.inverse();
    // Euler: prod(1-q^n) = 1 - q - q^2 + q^5 + q^7 - ...
    CHECK(recovered.coeff(Rat(0)) == Rat(1));
    CHECK(recovered.coeff(Rat(1)) == Rat(-1));
    CHECK(recovered.coeff(Rat(2)) == Rat(-1));
    CHECK(recovered.coeff(Rat(3)) == Rat(0));
    CHECK(recovered.coeff(Rat(5)) == Rat(1));
    CHECK(recovered.coeff(Rat(7)) == Rat(1));
    CHECK((recovered * inv).coeff(Rat(0)) == Rat(1));
    for (int k = 1; k <= 10; ++k) CHECK((recovered * inv).coeff(Rat(k)) == Rat(0));
}

TEST_CASE("equal_to reports the first mismatch") {
    QSeries a(30, Rat(4)), b(30, Rat(4));
    a.set_coeff(Rat(1), Rat(2));
    b.set_coeff(Rat(1), Rat(2));
    b.set_coeff(Rat(3), Rat(1));
    Rat bad;
    CHECK(!a.equal_to(b, Rat(4), &bad));
    CHECK(bad == Rat(3));
    CHECK(a.equal_to(b, Rat(2)));
}

TEST_CASE("off-lattice exponents are rejected") {
    QSeries a(30, Rat(4));
    CHECK_THROWS(a.set_coeff(Rat(1, 7), Rat(1)));
}
