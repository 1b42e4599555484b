#pragma once
// Exact geometry of the ambient rank-3 lattice L = Z a1 + Z a2 + Z a3 with
// <a_i, a_j> = 2 delta_ij, its sublattices N, D = E (+) F, and their cosets.
// All coordinates are rationals in the a-basis; the form <u,v> = 2 sum u_i v_i
// absorbs the sqrt(2) rescaling of the A_n root systems, so no radicals
// appear anywhere.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "voa/qseries.hpp"
#include "voa/rational.hpp"

namespace voa {

class LatticeVector {
public:
    LatticeVector() : c_{Rat(0), Rat(0), Rat(0)} {}
    LatticeVector(Rat x, Rat y, Rat z) : c_{x, y, z} {}
    static LatticeVector alpha(int i);  // i in {1,2,3}

    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }

    bool is_zero() const;
    bool is_integral() const;

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
    LatticeVector operator-() const;
    LatticeVector scaled(const Rat& c) const;

    friend bool operator==(const LatticeVector& a, const LatticeVector& b);
    friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b);  // lexicographic

    std::string str() const;  // "[p, q/r, s]"
    static LatticeVector parse(std::string_view s);

private:
    std::array<Rat, 3> c_;
};

// <u,v> = 2 sum_i u_i v_i.
Rat gram(const LatticeVector& u, const LatticeVector& v);
inline Rat norm(const LatticeVector& u) { return gram(u, u); }

// Named generators: alpha_1..alpha_3, the A_3 simple roots scaled by sqrt(2)
// (sqrt2_beta(i) = sqrt(2) beta_i, an element of L), and gamma.
LatticeVector sqrt2_beta(int i);
LatticeVector gamma_vec();

class Lattice {
public:
    explicit Lattice(std::vector<LatticeVector> basis, std::string name = "");

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<LatticeVector>& basis() const { return basis_; }
    const std::string& name() const { return name_; }

    // Gram matrix of the basis under the ambient form.
    std::vector<std::vector<Rat>> gram_matrix() const;

    // Does x lie in the lattice? Exact solve against the basis.
    bool contains(const LatticeVector& x) const;

    // Coordinates of x in this basis, if x lies in the rational span.
    std::optional<std::vector<Rat>> coordinates(const LatticeVector& x) const;

    bool is_sublattice_of(const Lattice& M) const;

    std::string str() const;
    // Parses the str() form "lattice rank=r basis=[[..],[..]]".
    static Lattice parse(std::string_view line);

private:
    std::vector<LatticeVector> basis_;
    std::string name_;
    // Cached inverse Gram for span-membership solves.
    std::vector<std::vector<Rat>> gram_inv_;
};

// The named lattices of the construction, bases fixed as:
//   L: {a1, a2, a3};  N: {a1+a2, -a2+a3, -a1+a2};  E: {a1+a2, -a2+a3};
//   F: {gamma};  D: {a1+a2, -a2+a3, gamma}.
const Lattice& build_named(const std::string& name);

// Membership in N via the congruence <a1+a2+a3, x> = 0 (mod 4); for
// membership(x, N) both this criterion and the basis solve are evaluated and
// compared, and a disagreement is a hard error.
bool membership(const LatticeVector& x, const Lattice& M);

class Coset {
public:
    Coset(Lattice lattice, LatticeVector shift);

    const Lattice& lattice() const { return lat_; }
    const LatticeVector& shift() const { return shift_; }

    bool contains(const LatticeVector& x) const;
    bool operator==(const Coset& o) const;

    std::string str() const;  // "coset shift=[...]"
    // Parses the str() form against an explicitly supplied lattice.
    static Coset parse(std::string_view line, const Lattice& lattice);

private:
    void canonicalize();
    Lattice lat_;
    LatticeVector shift_;
};

// All cosets of S in M (S a finite-index sublattice of M), canonical
// representatives, deterministic order.
std::vector<Coset> coset_decompose(const Lattice& M, const Lattice& S);

// Orthogonal splitting of D+-a2 = (E + proj_E) (+) (F + proj_F) per the
// decomposition of the shift along span(E) (+) span(F).
std::pair<Coset, Coset> orthogonal_split(const Coset& c);

// All x in the coset with <x,x> <= max_norm, enumerated over the ambient
// cube |x_i| <= ceil(sqrt(max_norm/2)) + 1 (complete since <x,x> = 2 sum x_i^2).
std::vector<LatticeVector> coset_points(const Coset& c, const Rat& max_norm);

// Theta series sum_x q^{<x,x>/2} to the given order.
QSeries theta_series(const Coset& c, const Rat& order, long long denom = 30);
QSeries theta_series(const Lattice& M, const Rat& order, long long denom = 30);

}  // namespace voa
