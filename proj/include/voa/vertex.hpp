#pragma once
// Exact vertex-operator mode computation u_n v on Fock elements.
//
// Conventions. Y(h(-1),z) = sum h(n) z^{-n-1} with h(0) e^g = <h,g> e^g.
// Y(e^b,z) = E^-(b,z) E^+(b,z) e_b z^b, and for a general monomial
// u = a_{i1}(-n1) ... a_{ik}(-nk) e^b,
//   Y(u,z) = : d^(n1-1) a_{i1}(z) ... d^(nk-1) a_{ik}(z) Y(e^b,z) :
// with d^(m) = (1/m!) (d/dz)^m. Normal ordering places creation modes and
// e_b left of annihilation modes; zero modes h(0) act with the annihilation
// side, i.e. on the lattice point before the e_b shift.
//
// A single mode application is exact: at a fixed power of z only finitely
// many expansion terms contribute, so no truncation enters the engine.
// Every element-level call checks the grading wt(u_n v) = wt(u)+wt(v)-n-1
// on homogeneous inputs and throws on violation.

#include "voa/fock.hpp"

namespace voa {

// a_dir(n) on v: multiplication (n<0), <a_dir, point> (n=0), or the
// commutator action [a_i(n), a_j(m)] = 2 delta_ij n delta_{n+m,0} (n>0).
FockElement heis_mode(int dir, int n, const FockElement& v);

// Coefficient of z^{-n-1} of Y(e^beta, z) applied to v. beta must pair
// integrally with every lattice point of v.
FockElement exp_mode(const LatticeVector& beta, long long n, const FockElement& v);

// General u_n v, bilinear in u and v; agrees with heis_mode for
// u = a_i(-1)1 and with exp_mode for u = e^beta.
FockElement vertex_mode(const FockElement& u, long long n, const FockElement& v);

// Single-monomial core, accumulating coeff * (u_n v) into out. Exposed for
// the mode-matrix machinery in conformal/hwv.
void vertex_mode_accumulate(const FockMonomial& u, long long n, const FockMonomial& v,
                            const Rat& coeff, std::map<FockMonomial, Rat>& out);

// Weight-one Lie algebra of V_L: [u,v] = u_0 v and <u,v>1 = u_1 v.
// Both require homogeneous weight-1 inputs.
FockElement lie_bracket(const FockElement& u, const FockElement& v);
Rat pairing(const FockElement& u, const FockElement& v);

}  // namespace voa
