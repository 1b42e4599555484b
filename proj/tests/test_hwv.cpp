#include "doctest.h"
#include "voa/hwv.hpp"

using namespace voa;

namespace {
std::array<Rat, 4> tup(Rat a, Rat b, Rat c, Rat d) { return {a, b, c, d}; }
}  // namespace

TEST_CASE("census at W = 0, 1, 2: frozen tuple lists") {
    auto c0 = hw_census(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0].h == tup(Rat(0), Rat(0), Rat(0), Rat(0)));
    CHECK(c0[0].multiplicity == 1);

    auto c1 = hw_census(1);
    REQUIRE(c1.size() == 4);
    CHECK(c1[1].h == tup(Rat(0), Rat(0), Rat(2, 3), Rat(1, 3)));
    CHECK(c1[2].h == tup(Rat(0), Rat(3, 5), Rat(1, 15), Rat(1, 3)));
    CHECK(c1[3].h == tup(Rat(1, 2), Rat(1, 10), Rat(1, 15), Rat(1, 3)));
    for (const auto& t : c1) CHECK(t.multiplicity == 1);

    auto c2 = hw_census(2);
    REQUIRE(c2.size() == 12);
    // the eight new weight-2 tuples
    const std::array<Rat, 4> expected[8] = {
        tup(Rat(0), Rat(0), Rat(2, 3), Rat(4, 3)),
        tup(Rat(0), Rat(3, 5), Rat(1, 15), Rat(4, 3)),
        tup(Rat(0), Rat(3, 5), Rat(2, 5), Rat(1)),
        tup(Rat(0), Rat(3, 5), Rat(7, 5), Rat(0)),
        tup(Rat(1, 2), Rat(1, 10), Rat(1, 15), Rat(4, 3)),
        tup(Rat(1, 2), Rat(1, 10), Rat(2, 5), Rat(1)),
        tup(Rat(1, 2), Rat(1, 10), Rat(7, 5), Rat(0)),
        tup(Rat(1, 2), Rat(3, 2), Rat(0), Rat(0)),
    };
    std::size_t found = 0;
    for (const auto& t : c2) {
        if (t.weight != Rat(2)) continue;
        CHECK(t.multiplicity == 1);
        bool ok = false;
        for (const auto& e : expected)
            if (t.h == e) ok = true;
        INFO(t.str());
        CHECK(ok);
        ++found;
    }
    CHECK(found == 8);
}

TEST_CASE("census is stable under a larger ambient cutoff") {
    auto a = hw_census(1), b = hw_census(1, 4);
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("census against the decomposition table with bookkeeping") {
    Report rep = census_vs_theorem(2);
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("zero-mode sum is the grading and zero modes commute") {
    // L^1(0)+...+L^4(0) = w * id on the weight-w piece
    for (long long w = 0; w <= 3; ++w) {
        QMatrix sum;
        for (int i = 1; i <= 4; ++i) {
            QMatrix m = virasoro_action_matrix(w, i, 0, 3);
            if (sum.empty())
                sum = m;
            else
                for (std::size_t r = 0; r < m.size(); ++r)
                    for (std::size_t c = 0; c < m[r].size(); ++c) sum[r][c] += m[r][c];
        }
        for (std::size_t r = 0; r < sum.size(); ++r)
            for (std::size_t c = 0; c < sum[r].size(); ++c)
                CHECK(sum[r][c] == (r == c ? BigRat(w) : BigRat(0)));
    }
    // [L^i(0), L^j(0)] = 0 at weights <= 3 via explicit matrices
    for (long long w = 0; w <= 3; ++w) {
        std::vector<QMatrix> L0;
        for (int i = 1; i <= 4; ++i) L0.push_back(virasoro_action_matrix(w, i, 0, 3));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                QMatrix ab = matmul(L0[i], L0[j]), ba = matmul(L0[j], L0[i]);
                CHECK(ab == ba);
            }
    }
}

TEST_CASE("L^i(1) kills the weight-1 piece of V_N") {
    for (int i = 1; i <= 4; ++i) {
        QMatrix m = virasoro_action_matrix(1, i, 1, 2);
        for (const auto& row : m)
            for (const auto& v : row) CHECK(v == 0);
    }
}

TEST_CASE("pairwise commutators vanish for distinct conformal vectors") {
    Report rep = commuting_zero_modes(2);
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("cross-census in V_L^+ via the rho images") {
    auto fixed = hw_census_fixed_point(1);
    auto direct = hw_census(1);
    REQUIRE(fixed.size() == direct.size());
    for (std::size_t i = 0; i < fixed.size(); ++i) CHECK(fixed[i] == direct[i]);
}

TEST_CASE("census rejects out-of-range cutoffs") {
    CHECK_THROWS(hw_census(4));
    CHECK_THROWS(hw_census(-1));
}
