// The slow invariants: full-depth Virasoro certification at weight cutoff 6,
// the automorphism relation sweep at weight 4, operator-level commutativity
// at weight 4, and the weight-3 census.

#include "doctest.h"
#include "voa/autos.hpp"
#include "voa/chars.hpp"
#include "voa/conformal.hpp"
#include "voa/hwv.hpp"
#include "voa/linalg.hpp"

using namespace voa;

TEST_CASE("is_conformal at weight cutoff 6, modes [-2,2], all five vectors") {
    for (int i = 1; i <= 4; ++i) {
        Report r = is_conformal(build_omega_i(i), 6, 2, "w^" + std::to_string(i));
        INFO(r.text());
        CHECK(r.all_pass());
    }
    Report r = is_conformal(virasoro_omega(), 6, 2, "omega");
    INFO(r.text());
    CHECK(r.all_pass());
}

TEST_CASE("automorphism relations at weight 4") {
    Report rep = verify_relations(4);
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("pairwise mode commutativity at weight 4") {
    Report rep = commuting_zero_modes(4);
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("census at weight 3") {
    Report rep = census_vs_theorem(3);
    for (const auto& c : rep.checks) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
    // weight 3 adds exactly (0,0,0,3) and (1/2,3/2,2/3,1/3)
    auto cs = hw_census(3);
    long long at3 = 0;
    for (const auto& t : cs)
        if (t.weight == Rat(3)) {
            ++at3;
            bool known = t.h == std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(3)} ||
                         t.h == std::array<Rat, 4>{Rat(1, 2), Rat(3, 2), Rat(2, 3),
                                                   Rat(1, 3)};
            INFO(t.str());
            CHECK(known);
        }
    CHECK(at3 == 2);
}

TEST_CASE("tau image spans V_L^+ at weight 4") {
    Automorphism t = tau(), p2 = psi2();
    Coset L(build_named("L"), LatticeVector());
    Coset N(build_named("N"), LatticeVector());
    std::vector<FockElement> images;
    for (auto& m : fock_basis(N, Rat(4)))
        if (m.weight() == Rat(4)) {
            FockElement img = t.apply(FockElement(m));
            CHECK(p2.apply(img) == img);
            images.push_back(std::move(img));
        }
    std::size_t plus_dim = fixed_subspace(p2, L, Rat(4), 1).size();
    CHECK(images.size() == plus_dim);
    std::map<FockMonomial, std::size_t> idx;
    for (const auto& e : images)
        for (const auto& [m, c] : e.terms()) idx.emplace(m, idx.size());
    QMatrix M = qmatrix(images.size(), idx.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        for (const auto& [m, c] : images[i].terms()) M[i][idx[m]] = to_big(c);
    CHECK(rank(M) == plus_dim);
}
