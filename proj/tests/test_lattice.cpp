#include "doctest.h"
#include "oracles.hpp"
#include "voa/lattice.hpp"

using namespace voa;

namespace {
const LatticeVector a1 = LatticeVector::alpha(1);
const LatticeVector a2 = LatticeVector::alpha(2);
const LatticeVector a3 = LatticeVector::alpha(3);
}  // namespace

TEST_CASE("gram form") {
    CHECK(gram(a1, a1) == Rat(2));
    CHECK(gram(a1, a2) == Rat(0));
    // square length of the rescaled roots: <sqrt2 b_i, sqrt2 b_i> = 4, so
    // <b_i, b_i> = 2
    CHECK(gram(sqrt2_beta(1), sqrt2_beta(1)) == Rat(4));
    CHECK(norm(gamma_vec()) == Rat(6));
    // bilinear + symmetric spot checks
    LatticeVector u{Rat(1, 3), Rat(-2), Rat(5)};
    LatticeVector v{Rat(7), Rat(1, 2), Rat(0)};
    CHECK(gram(u, v) == gram(v, u));
    CHECK(gram(u + v, v) == gram(u, v) + gram(v, v));
}

TEST_CASE("named lattice Gram matrices") {
    auto GN = build_named("N").gram_matrix();
    // 2 * Cartan(A3)
    long long cartan[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(GN[i][j] == Rat(2 * cartan[i][j]));
    auto GE = build_named("E").gram_matrix();
    CHECK(GE[0][0] == Rat(4));
    CHECK(GE[0][1] == Rat(-2));
    CHECK(GE[1][0] == Rat(-2));
    CHECK(GE[1][1] == Rat(4));
    auto GF = build_named("F").gram_matrix();
    CHECK(GF[0][0] == Rat(6));
    CHECK_THROWS(build_named("X"));
}

TEST_CASE("membership in N: congruence and solve agree") {
    const Lattice& N = build_named("N");
    CHECK(!membership(a1, N));
    CHECK(membership(a1 + a2, N));
    CHECK(membership(a1.scaled(Rat(2)), N));
    // every integral vector with <x,x> <= 20 keeps the two criteria in sync
    // (membership() itself throws if they ever disagree)
    for (long long x = -3; x <= 3; ++x)
        for (long long y = -3; y <= 3; ++y)
            for (long long z = -3; z <= 3; ++z) {
                LatticeVector v{Rat(x), Rat(y), Rat(z)};
                if (norm(v) > Rat(20)) continue;
                bool in = membership(v, N);
                CHECK(in == (((2 * (x + y + z)) % 4 + 4) % 4 == 0));
            }
}

TEST_CASE("coset decomposition of L by N and D") {
    const Lattice &L = build_named("L"), &N = build_named("N"), &D = build_named("D");
    auto ln = coset_decompose(L, N);
    REQUIRE(ln.size() == 2);
    CHECK(ln[0] == Coset(N, LatticeVector()));
    CHECK(ln[1] == Coset(N, a1));

    auto ld = coset_decompose(L, D);
    REQUIRE(ld.size() == 3);
    CHECK(ld[0] == Coset(D, LatticeVector()));
    bool has_plus = false, has_minus = false;
    for (const auto& c : ld) {
        if (c == Coset(D, a2)) has_plus = true;
        if (c == Coset(D, -a2)) has_minus = true;
    }
    CHECK(has_plus);
    CHECK(has_minus);
    CHECK(!(Coset(D, a2) == Coset(D, -a2)));

    auto ll = coset_decompose(L, L);
    CHECK(ll.size() == 1);
    CHECK(ll[0] == Coset(L, LatticeVector()));

    CHECK_THROWS(coset_decompose(N, L));  // L is not a sublattice of N
}

TEST_CASE("coset equality and canonical representatives") {
    const Lattice& D = build_named("D");
    CHECK(Coset(D, a2) == Coset(D, a2 + sqrt2_beta(1)));
    CHECK(Coset(D, a2) == Coset(D, a3));  // a3 - a2 = sqrt2 b2 in D
    // different representatives canonicalize to one shift, nonnegative and
    // below the folding period
    Coset x(D, a2), y(D, a2 + gamma_vec()), z(D, a3 - sqrt2_beta(1).scaled(Rat(5)));
    CHECK(x.shift() == y.shift());
    CHECK(x.shift() == z.shift());
    for (int i = 0; i < 3; ++i) {
        CHECK(x.shift()[i] >= Rat(0));
        CHECK(x.shift()[i] < Rat(3));
    }
}

TEST_CASE("orthogonal split of D+-a2") {
    const Lattice &D = build_named("D"), &E = build_named("E"), &F = build_named("F");
    auto [ce, cf] = orthogonal_split(Coset(D, a2));
    LatticeVector eshift = (sqrt2_beta(1) - sqrt2_beta(2)).scaled(Rat(1, 3));
    LatticeVector fshift = gamma_vec().scaled(Rat(1, 3));
    CHECK(ce == Coset(E, eshift));
    CHECK(cf == Coset(F, fshift));
    // the shift identity a2 = sqrt2(b1-b2)/3 + gamma/3, exactly
    CHECK(eshift + fshift == a2);
    CHECK(gram(eshift, fshift) == Rat(0));
    auto [ce2, cf2] = orthogonal_split(Coset(D, -a2));
    CHECK(ce2 == Coset(E, -eshift));
    CHECK(cf2 == Coset(F, -fshift));
    CHECK_THROWS(orthogonal_split(Coset(D, LatticeVector())));
}

TEST_CASE("theta series frozen values") {
    const Lattice &L = build_named("L"), &N = build_named("N"), &F = build_named("F");
    QSeries tl = theta_series(L, Rat(2));
    CHECK(tl.coeff(Rat(0)) == Rat(1));
    CHECK(tl.coeff(Rat(1)) == Rat(6));
    CHECK(tl.coeff(Rat(2)) == Rat(12));
    QSeries tn = theta_series(N, Rat(2));
    CHECK(tn.coeff(Rat(0)) == Rat(1));
    CHECK(tn.coeff(Rat(1)) == Rat(0));
    CHECK(tn.coeff(Rat(2)) == Rat(12));
    QSeries tf = theta_series(F, Rat(3));
    CHECK(tf.coeff(Rat(0)) == Rat(1));
    CHECK(tf.coeff(Rat(1)) == Rat(0));
    CHECK(tf.coeff(Rat(2)) == Rat(0));
    CHECK(tf.coeff(Rat(3)) == Rat(2));
}

TEST_CASE("theta series against the basis-enumeration oracle to q^10") {
    const Rat order(10);
    std::vector<Coset> cosets;
    for (const char* n : {"L", "N", "D", "E", "F"})
        cosets.emplace_back(build_named(n), LatticeVector());
    cosets.emplace_back(build_named("D"), a2);
    cosets.emplace_back(build_named("D"), -a2);
    cosets.emplace_back(build_named("E"), (sqrt2_beta(1) - sqrt2_beta(2)).scaled(Rat(1, 3)));
    cosets.emplace_back(build_named("F"), gamma_vec().scaled(Rat(1, 3)));
    for (const auto& c : cosets) {
        QSeries th = theta_series(c, order);
        auto counts = oracle::theta_counts_by_basis(c, order);
        for (const auto& [e, n] : counts) CHECK(th.coeff(e) == Rat(n));
        // and the series has no coefficients the oracle missed
        for (const Rat& e : th.support()) CHECK(counts.count(e) == 1);
    }
}

TEST_CASE("coset theta series sum to the full theta series") {
    const Lattice &L = build_named("L"), &N = build_named("N"), &D = build_named("D");
    QSeries tl = theta_series(L, Rat(8));
    for (const Lattice* S : {&N, &D}) {
        QSeries sum(30, Rat(8));
        for (const auto& c : coset_decompose(L, *S)) sum += theta_series(c, Rat(8));
        CHECK(sum.equal_to(tl, Rat(8)));
    }
}

TEST_CASE("lattice and coset serialization") {
    const Lattice& N = build_named("N");
    CHECK(N.str() == "lattice rank=3 basis=[[1,1,0],[0,-1,1],[-1,1,0]]");
    Coset c(build_named("F"), gamma_vec().scaled(Rat(1, 3)));
    CHECK(c.str() == "coset shift=" + c.shift().str());
    LatticeVector v{Rat(1, 3), Rat(-2), Rat(0)};
    CHECK(LatticeVector::parse(v.str()) == v);
    // round trips
    for (const char* name : {"L", "N", "D", "E", "F"}) {
        const Lattice& M = build_named(name);
        Lattice back = Lattice::parse(M.str());
        CHECK(back.basis() == M.basis());
    }
    CHECK(Coset::parse(c.str(), build_named("F")) == c);
    CHECK_THROWS_AS(Lattice::parse("nonsense"), parse_error);
}
