#pragma once
// Structural verification of the decomposition at low weight: the four
// commuting Virasoro zero-modes L^i(0) = (omega^i)_1 acting on truncated
// V_N, joint highest-weight vectors (kernel of all L^i(1), L^i(2)), and the
// census of (h1,h2,h3,h4) eigenvalue tuples against the decomposition table.

#include <array>

#include "voa/conformal.hpp"
#include "voa/fock.hpp"
#include "voa/linalg.hpp"
#include "voa/report.hpp"

namespace voa {

struct HwTuple {
    std::array<Rat, 4> h;
    long long multiplicity = 0;
    Rat weight;  // h1+h2+h3+h4

    friend bool operator==(const HwTuple&, const HwTuple&) = default;
    std::string str() const;
};

// Exact matrix of L^i(m) from the weight-w piece of V_N to the weight-(w-m)
// piece (rows index the target block).
QMatrix virasoro_action_matrix(long long w, int i, int m, long long ambient_cutoff);

// Joint eigenvalue census of {L^i(0)} on the intersection of ker L^i(1) and
// ker L^i(2) across all weights <= W. W <= 3; ambient_cutoff >= W controls
// the basis truncation (the census must not depend on it).
std::vector<HwTuple> hw_census(long long W, long long ambient_cutoff = -1);

// Census in V_L^+ using the rho-images tilde w^i, cross-checking the V_N
// census through the fixed-point isomorphism.
std::vector<HwTuple> hw_census_fixed_point(long long W);

// Census multiset == theorem tuples with sum <= W, plus the descendant
// bookkeeping: sum over found tuples of the tensor-product graded dimensions
// reproduces graded_dim(N, w) for every w <= W.
Report census_vs_theorem(long long W);

// [L^i(m), L^j(n)] = 0 exactly for i != j on all weight <= W pieces of V_N,
// m, n in {0, +-1, 2}.
Report commuting_zero_modes(long long W);

}  // namespace voa
