#pragma once
// Graded characters and the character-level verifications. All characters
// are unshifted graded dimensions (no q^{-c/24} prefactor): both sides of
// every identity carry the same shift, so it cancels, and integral gradings
// stay integral. The default exponent lattice is (1/30)Z, the lcm of all
// conformal-weight denominators in scope.

#include <array>

#include "voa/lattice.hpp"
#include "voa/qseries.hpp"
#include "voa/report.hpp"

namespace voa {

constexpr long long kDefaultDenom = 30;

struct VirasoroLabel {
    Rat c;
    Rat h;
    VirasoroLabel(Rat c_, Rat h_);  // validates minimal-model pairs for c < 1
    friend bool operator==(const VirasoroLabel&, const VirasoroLabel&) = default;
    std::string str() const { return "L(" + c.str() + "," + h.str() + ")"; }
};

// Rocha-Caridi character of the (p,p') minimal model at Kac label (r,s),
// normalized to leading term q^{h_{r,s}}:
//   ch = phi(q)^{-1} sum_{n in Z} (q^{D(2pp'n + (p'r - ps))} - q^{D(2pp'n + (p'r + ps))}),
//   D(x) = (x^2 - (p-p')^2) / (4pp').
QSeries minimal_char(int p, int pp, int r, int s, const Rat& order,
                     long long denom = kDefaultDenom);

// c = 1 characters: (q^{m^2} - q^{(m+1)^2})/phi(q) for h = m^2 a perfect
// square, q^h/phi(q) otherwise.
QSeries c1_char(const Rat& h, const Rat& order, long long denom = kDefaultDenom);

// Character of L(c,h) for the central charges in scope (1/2, 7/10, 4/5, 1).
QSeries virasoro_char(const VirasoroLabel& label, const Rat& order,
                      long long denom = kDefaultDenom);

Rat kac_h(int p, int pp, int r, int s);

// Theta_coset / prod (1-q^n)^rank.
QSeries coset_char(const Coset& c, const Rat& order, long long denom = kDefaultDenom);

// ch V_M^{+-} = 1/2 (Theta_M / phi^d +- prod (1+q^n)^{-d}): the psi_2 trace.
QSeries fixed_char(const Lattice& M, int sign, const Rat& order,
                   long long denom = kDefaultDenom);

// --- the decomposition table ------------------------------------------------

enum class C1Family {
    FourMSquared,   // h4 = 4m^2, m >= 0
    ThreeMSquared,  // h4 = 3m^2, m >= 1
    OddSquared,     // h4 = (2m+1)^2, m >= 0
    ThirdSquared,   // h4 = (3m+1)^2/3, m in Z
};

struct DecompSummand {
    std::array<VirasoroLabel, 3> triple;  // c = 1/2, 7/10, 4/5
    std::vector<C1Family> families;
};

// h4 values of the family with leading exponent <= cap, ascending.
std::vector<Rat> family_values(C1Family f, const Rat& cap);

// The main decomposition: three blocks of four triples, tensored with the
// indicated c = 1 families.
const std::vector<DecompSummand>& theorem_table();

// All (h1,h2,h3,h4) with h1+h2+h3+h4 <= max_sum, with multiplicity (each
// tuple occurs once).
std::vector<std::array<Rat, 4>> theorem_tuples(const Rat& max_sum);

// The coset shift of the middle coset module over E.
LatticeVector e_coset_shift();  // sqrt2(b1 - b2)/3

// Exact q-series identity checks. Ids: 3.1, 3.2, 3.3, 3.4 (three
// sub-identities), lemma3.3 (three parts), lemma3.4 (two parts).
Report verify_display(const std::string& id, const Rat& order,
                      long long denom = kDefaultDenom);

// Theta_N/phi^3 against the decomposition table, plus the spot coefficients
// (q^0, q^1, q^2) = (1, 3, 21).
Report verify_theorem(const Rat& order, long long denom = kDefaultDenom);

}  // namespace voa
