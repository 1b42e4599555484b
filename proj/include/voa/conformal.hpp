#pragma once
// The conformal vectors of V_N (~ V_{sqrt2 A_3}): w_beta^{+-}, the partial
// sums s^i, the decomposition omega = omega^1 + ... + omega^4, central
// charges, and finite certification of the Virasoro relations on truncated
// ambient space.

#include "voa/fock.hpp"
#include "voa/report.hpp"

namespace voa {

struct ConformalSet {
    std::vector<FockElement> vectors;  // omega^1..omega^4
    std::vector<Rat> charges;          // 1/2, 7/10, 4/5, 1
};

// w_beta^{+-} = beta(-1)^2 +- 2(e^{sqrt2 beta} + e^{-sqrt2 beta}), handed the
// ambient vector x = sqrt2 beta (so beta(-1)^2 = x(-1)^2 / 2). Requires
// <x,x> = 4 and x in N.
FockElement w_pm(const LatticeVector& sqrt2_root, int sign);

// The positive roots of A_l in ambient sqrt2-coordinates, l <= 3.
std::vector<LatticeVector> positive_roots(int l);

// s^i = 1/(2(i+3)) sum_{beta in Phi_i^+} w_beta^-, for i = 1..3.
FockElement build_s(int i);

// omega^1 = s^1, omega^{i+1} = s^{i+1} - s^i, omega^4 = omega - s^3.
FockElement build_omega_i(int i);

// The Virasoro element 1/4 sum_i a_i(-1)^2 of V_L (rank 3, charge 3).
FockElement virasoro_omega();

// Virasoro element of the rank-2 subalgebra over E: 1/6 sum_{Phi_2^+} beta(-1)^2.
FockElement virasoro_omega_E();

ConformalSet conformal_set();

// 2 * (vacuum coefficient of v_3 v); throws if v_3 v is not a multiple of
// the vacuum.
Rat central_charge(const FockElement& v);

// Checks [L^v(m), L^v(n)] = (m-n) L^v(m+n) + delta_{m+n,0} (m^3-m) c/12 on
// every basis monomial of V_L of weight <= weight_cutoff, m,n in
// [-mode_range, mode_range], with c extracted from v_3 v. Exact.
Report is_conformal(const FockElement& v, long long weight_cutoff, int mode_range,
                    const std::string& name);

// (omega^i)_1 omega^j = 0 for i != j and (omega^i)_1 omega^i = 2 omega^i;
// the values (omega^i)_3 omega^j are recorded in the report without being
// asserted.
Report orthogonality(const ConformalSet& set);

// The full product suite: eigenvalue 2, (omega^i)_2 omega^i = 0, central
// charges, pairwise orthogonality, sum = omega.
Report conformal_suite();

}  // namespace voa
