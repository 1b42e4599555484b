#include <random>

#include "doctest.h"
#include "voa/autos.hpp"
#include "voa/chars.hpp"
#include "voa/conformal.hpp"
#include "voa/linalg.hpp"
#include "voa/vertex.hpp"

using namespace voa;

namespace {
FockElement expel(const LatticeVector& b) {
    return FockElement(FockMonomial::lattice_point(b));
}
const LatticeVector a1 = LatticeVector::alpha(1);
const LatticeVector a2v = LatticeVector::alpha(2);
}  // namespace

TEST_CASE("monomial automorphisms: signs and isometries") {
    CHECK(psi1().apply(expel(a1)) == expel(a1).scaled(Rat(-1)));
    CHECK(psi1().apply(FockElement(FockMonomial().with_boson(0, -1))) ==
          FockElement(FockMonomial().with_boson(0, -1)));
    CHECK(psi2().apply(FockElement(FockMonomial().with_boson(0, -1))) ==
          FockElement(FockMonomial().with_boson(0, -1)).scaled(Rat(-1)));
    CHECK(psi2().apply(expel(a1)) == expel(-a1));
    CHECK(phi().apply(expel(a2v)) == expel(a2v).scaled(Rat(-1)));
    CHECK(phi().apply(expel(a1)) == expel(a1));
    // theta_1 on the first factor only
    CHECK(theta1(0).apply(expel(a1)) == expel(a1).scaled(Rat(-1)));
    CHECK(theta1(0).apply(expel(a2v)) == expel(a2v));
    // sign ill-defined on fractional points
    CHECK_THROWS(psi1().apply(expel(gamma_vec().scaled(Rat(1, 3)))));
}

TEST_CASE("monomial_to_tree evaluates back to the monomial") {
    auto check_roundtrip = [](const FockMonomial& m) {
        TensorTriple t = tensor_split(m);
        for (auto strat : {RewriteStrategy::ModesAscending, RewriteStrategy::ModesDescending}) {
            std::array<FockElement, 3> fs;
            for (int f = 0; f < 3; ++f)
                fs[f] = monomial_to_tree(t[f], f, strat).evaluate(identity_images());
            CHECK(tensor_combine(fs) == FockElement(m));
        }
    };
    check_roundtrip(FockMonomial::parse("a1(-2) e[0,0,0]"));
    check_roundtrip(FockMonomial::parse("a1(-1)^2 e[0,0,0]"));
    check_roundtrip(FockMonomial::parse("e[2,0,0]"));
    check_roundtrip(FockMonomial::parse("e[-2,1,0]"));
    check_roundtrip(FockMonomial::parse("a1(-3) a2(-1) e[1,-1,2]"));
    auto basis = fock_basis(Coset(build_named("L"), LatticeVector()), Rat(4));
    std::mt19937 rng(314159);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int i = 0; i < 25; ++i) check_roundtrip(basis[pick(rng)]);
}

TEST_CASE("monomial_to_tree shapes for the generator rewriting") {
    // a(-2)1 = (a(-1)1)_{-2} 1
    Rank1Monomial am2{{-2}, 0};
    ModeExpr t = monomial_to_tree(am2, 0);
    REQUIRE(!t.is_leaf());
    CHECK(t.mode == -2);
    CHECK(t.left->leaf == ModeExpr::Leaf::Boson);
    CHECK(t.right->leaf == ModeExpr::Leaf::Vacuum);
    // e^{2a} = (e^a)_{-3} e^a
    Rank1Monomial e2{{}, 2};
    t = monomial_to_tree(e2, 0);
    REQUIRE(!t.is_leaf());
    CHECK(t.mode == -3);
    CHECK(t.left->leaf == ModeExpr::Leaf::ExpPlus);
    CHECK(t.right->leaf == ModeExpr::Leaf::ExpPlus);
    // a(-1)^2 1 = (a(-1)1)_{-1} (a(-1)1)_{-1} 1
    Rank1Monomial sq{{-1, -1}, 0};
    t = monomial_to_tree(sq, 0);
    REQUIRE(!t.is_leaf());
    CHECK(t.mode == -1);
    CHECK(t.left->leaf == ModeExpr::Leaf::Boson);
    REQUIRE(!t.right->is_leaf());
    CHECK(t.right->mode == -1);
    CHECK(t.right->right->leaf == ModeExpr::Leaf::Vacuum);
}

TEST_CASE("sigma on the rank-1 generators and squares") {
    Automorphism s = sigma(0);
    FockElement h(FockMonomial().with_boson(0, -1));
    FockElement e = expel(a1), f = expel(-a1);
    CHECK(s.apply(h) == e + f);
    CHECK(s.apply(e + f) == h);
    CHECK(s.apply(e - f) == (e - f).scaled(Rat(-1)));
    CHECK(s.apply(e) == (h - e + f).scaled(Rat(1, 2)));
    // sigma(a(-1)^2) = a(-1)^2, the non-obvious identity
    CHECK(s.apply(oscillator_square(a1)) == oscillator_square(a1));
}

TEST_CASE("rewriting independence of sigma") {
    Automorphism sa = sigma(0), sd = sigma(0);
    sa.set_strategy(RewriteStrategy::ModesAscending);
    sd.set_strategy(RewriteStrategy::ModesDescending);
    Lattice za1({a1}, "Za1");
    for (auto& m : fock_basis(Coset(za1, LatticeVector()), Rat(4))) {
        FockElement e = expand_monomial(m, {a1});
        CHECK(sa.apply(e) == sd.apply(e));
    }
}

TEST_CASE("relation suite at weight 3") {
    Report rep = verify_relations(3);
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("image identities (tau and rho on the conformal vectors)") {
    Report rep = verify_images();
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("tau is multiplicative on vertex modes") {
    Automorphism t = tau();
    Coset L(build_named("L"), LatticeVector());
    std::vector<FockMonomial> basis;
    for (auto& m : fock_basis(L, Rat(2)))
        if (m.weight() >= Rat(1)) basis.push_back(m);
    std::mt19937 rng(2718281);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> pn(-3, 2);
    for (int i = 0; i < 50; ++i) {
        FockElement u(basis[pick(rng)]), v(basis[pick(rng)]);
        int n = pn(rng);
        CHECK(t.apply(vertex_mode(u, n, v)) == vertex_mode(t.apply(u), n, t.apply(v)));
    }
}

TEST_CASE("monomial automorphisms are multiplicative too") {
    std::mt19937 rng(1618033);
    Coset L(build_named("L"), LatticeVector());
    std::vector<FockMonomial> basis;
    for (auto& m : fock_basis(L, Rat(2)))
        if (m.weight() >= Rat(1)) basis.push_back(m);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> pn(-3, 2);
    for (const Automorphism& g : {psi1(), psi2(), phi(), theta2_111()}) {
        for (int i = 0; i < 15; ++i) {
            FockElement u(basis[pick(rng)]), v(basis[pick(rng)]);
            int n = pn(rng);
            CHECK(g.apply(vertex_mode(u, n, v)) == vertex_mode(g.apply(u), n, g.apply(v)));
        }
    }
}

TEST_CASE("fixed subspaces of psi_1 and psi_2") {
    Coset L(build_named("L"), LatticeVector());
    auto f1 = fixed_subspace(psi1(), L, Rat(1), 1);
    CHECK(f1.size() == 3);  // the three oscillators
    for (const auto& v : f1) CHECK(psi1().apply(v) == v);
    auto f2 = fixed_subspace(psi2(), L, Rat(1), 1);
    CHECK(f2.size() == 3);  // e^{a_i} + e^{-a_i}
    for (const auto& v : f2) CHECK(psi2().apply(v) == v);
    auto f2m = fixed_subspace(psi2(), L, Rat(1), -1);
    CHECK(f2m.size() == 6);
    CHECK(fixed_subspace(psi1(), L, Rat(2), 1).size() == 21);
    CHECK(fixed_subspace(psi1(), L, Rat(2), 1).size() ==
          static_cast<std::size_t>(graded_dim(Coset(build_named("N"), LatticeVector()),
                                              Rat(2))));
    CHECK_THROWS(fixed_subspace(tau(), L, Rat(1), 1));
}

TEST_CASE("V_N = fixed points of psi_1, weight by weight") {
    Coset L(build_named("L"), LatticeVector());
    Coset N(build_named("N"), LatticeVector());
    for (long long w = 0; w <= 4; ++w)
        CHECK(fixed_subspace(psi1(), L, Rat(w), 1).size() ==
              static_cast<std::size_t>(graded_dim(N, Rat(w))));
}

TEST_CASE("tau maps V_N onto V_L^+ at weights <= 3") {
    // each tau image is psi_2-fixed, and the images span a space of the same
    // dimension as the +1 eigenspace, both ways
    Automorphism t = tau(), p2 = psi2();
    Coset L(build_named("L"), LatticeVector());
    Coset N(build_named("N"), LatticeVector());
    for (long long w = 0; w <= 3; ++w) {
        std::vector<FockElement> images;
        for (auto& m : fock_basis(N, Rat(w)))
            if (m.weight() == Rat(w)) {
                FockElement img = t.apply(FockElement(m));
                CHECK(p2.apply(img) == img);
                images.push_back(std::move(img));
            }
        std::size_t plus_dim = fixed_subspace(p2, L, Rat(w), 1).size();
        CHECK(images.size() == plus_dim);
        // rank of the image span equals the dimension
        std::map<FockMonomial, std::size_t> idx;
        for (const auto& e : images)
            for (const auto& [m, c] : e.terms()) idx.emplace(m, idx.size());
        QMatrix M = qmatrix(images.size(), idx.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            for (const auto& [m, c] : images[i].terms()) M[i][idx[m]] = to_big(c);
        CHECK(rank(M) == plus_dim);
    }
}

TEST_CASE("every automorphism kind preserves the weight") {
    Coset L(build_named("L"), LatticeVector());
    auto basis = fock_basis(L, Rat(3));
    for (const Automorphism& g : {psi1(), psi2(), phi(), tau(), rho()}) {
        for (const auto& m : basis) {
            FockElement img = g.apply(FockElement(m));
            REQUIRE(!img.is_zero());
            CHECK(img.homogeneous_weight() == m.weight());
        }
    }
}

TEST_CASE("psi_2 involution example on w_beta") {
    // psi_2 fixes each w_beta^{+-}: both summands are symmetric under x -> -x
    for (const auto& x : positive_roots(3)) {
        CHECK(psi2().apply(w_pm(x, 1)) == w_pm(x, 1));
        CHECK(psi2().apply(w_pm(x, -1)) == w_pm(x, -1));
    }
}
