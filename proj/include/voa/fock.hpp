#pragma once
// Sparse exact elements of the untwisted Fock spaces M(1) (x) C[L+lambda].
// A monomial is a multiset of oscillators a_i(n), n < 0, in the ambient
// directions together with a lattice point e^beta; elements are finite
// rational combinations in canonical form (bosons sorted, no zero terms,
// deterministic iteration order).
//
// The group algebra uses the trivial 2-cocycle: every product e^beta e^gamma
// carries coefficient +1. All inner products in the ambient lattice are even
// (Gram = 2*identity), so the commutator condition (-1)^{<beta,gamma>} = 1
// holds and the central extension splits.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voa/lattice.hpp"
#include "voa/rational.hpp"

namespace voa {

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxBosons = 24;

struct Boson {
    int8_t dir;   // direction index (ambient: 0..2)
    int8_t mode;  // strictly negative
    friend bool operator==(const Boson&, const Boson&) = default;
    friend auto operator<=>(const Boson&, const Boson&) = default;
};

// Lattice point with small exact rational coordinates n[i]/d.
struct Point {
    std::array<int16_t, 3> n{0, 0, 0};
    int16_t d = 1;

    static Point from(const LatticeVector& v);
    LatticeVector vec() const;
    Rat coord(int i) const { return Rat(n[i], d); }
    bool is_zero() const { return n[0] == 0 && n[1] == 0 && n[2] == 0; }
    bool is_integral() const { return d == 1; }
    // <p,p>/2 = sum n_i^2 / d^2.
    Rat half_norm() const;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

class FockMonomial {
public:
    FockMonomial() = default;  // the vacuum 1 (x) e^0

    static FockMonomial lattice_point(const LatticeVector& p);

    int boson_count() const { return nb_; }
    const Boson& boson(int k) const { return b_[k]; }
    const Point& point() const { return p_; }
    LatticeVector point_vec() const { return p_.vec(); }

    // Copies with the boson multiset edited; insertion keeps canonical order.
    FockMonomial with_boson(int dir, int mode) const;
    FockMonomial without_boson(int k) const;
    FockMonomial with_point(const LatticeVector& p) const;

    // Multiplicity of the oscillator a_dir(mode).
    int multiplicity(int dir, int mode) const;

    long long boson_weight() const;          // sum of -mode
    Rat weight() const;                      // boson_weight + <p,p>/2

    friend bool operator==(const FockMonomial& a, const FockMonomial& b);
    friend bool operator<(const FockMonomial& a, const FockMonomial& b);

    // Text form "a1(-2) a1(-1)^2 a3(-1) e[1,0,-1]"; the vacuum is "e[0,0,0]".
    std::string str() const;
    static FockMonomial parse(std::string_view s);

private:
    std::array<Boson, kMaxBosons> b_{};
    int8_t nb_ = 0;
    Point p_;
};

class FockElement {
public:
    FockElement() = default;
    explicit FockElement(const FockMonomial& m, Rat c = Rat(1)) { add_term(m, c); }

    static FockElement vacuum() { return FockElement(FockMonomial()); }
    static FockElement zero() { return FockElement(); }

    void add_term(const FockMonomial& m, const Rat& c);

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::map<FockMonomial, Rat>& terms() const { return t_; }
    Rat coeff(const FockMonomial& m) const;

    friend FockElement operator+(const FockElement& a, const FockElement& b);
    friend FockElement operator-(const FockElement& a, const FockElement& b);
    FockElement& operator+=(const FockElement& b);
    FockElement& operator-=(const FockElement& b);
    FockElement scaled(const Rat& c) const;

    friend bool operator==(const FockElement& a, const FockElement& b) {
        return a.t_ == b.t_;
    }

    // The common weight when every monomial agrees, std::nullopt otherwise
    // (the zero element reports weight 0).
    std::optional<Rat> homogeneous_weight() const;

    // One term per line, "coeff * monomial"; the zero element prints "0".
    std::string str() const;
    static FockElement parse(std::string_view text);

private:
    std::map<FockMonomial, Rat> t_;
};

// Oscillator directions of the Fock space over a coset: the ambient alphas
// for full-rank lattices, the coset's lattice basis otherwise.
std::vector<LatticeVector> oscillator_frame(const Coset& c);

// All canonical monomials of weight <= max_weight, ordered by (weight, lex).
// Boson directions index oscillator_frame(c); for full-rank cosets these are
// global monomials as-is.
std::vector<FockMonomial> fock_basis(const Coset& c, const Rat& max_weight);

long long graded_dim(const Coset& c, const Rat& weight);

// Rewrite a frame-relative monomial as a global element, expanding each
// oscillator d(n) = sum_j d_j a_j(n). Identity on the ambient frame.
FockElement expand_monomial(const FockMonomial& m, const std::vector<LatticeVector>& frame);

// --- Tensor view V_L = V_{Za1} (x) V_{Za2} (x) V_{Za3} ------------------

struct Rank1Monomial {
    std::vector<int8_t> modes;  // negative, ascending
    long long charge = 0;       // point = charge * alpha_factor
};
using TensorTriple = std::array<Rank1Monomial, 3>;

// Requires an integral point; round-trip with tensor_merge is the identity.
TensorTriple tensor_split(const FockMonomial& m);
FockMonomial tensor_merge(const TensorTriple& t);

// Product of elements supported on disjoint tensor factors (no cocycle signs).
FockElement tensor_combine(const std::array<FockElement, 3>& factors);

// x(-1)^2 1 expanded over the oscillator monomials.
FockElement oscillator_square(const LatticeVector& x);

}  // namespace voa
