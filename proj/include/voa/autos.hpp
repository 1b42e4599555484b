#pragma once
// Automorphisms of V_L = V_{Za1} (x) V_{Za2} (x) V_{Za3}:
//   - monomial kind: a sign character (-1)^{<mu, point>/2} composed with a
//     signed-permutation isometry of the ambient lattice (theta_1, theta_2,
//     psi_1, psi_2, phi and their tensor mixtures);
//   - generator-defined kind (sigma, tau = sigma (x) sigma (x) sigma): images
//     of the weight-one generators per tensor factor, extended by rewriting
//     each monomial as an iterated-mode expression in the generators and
//     re-evaluating after substitution;
//   - composites, stored unevaluated and applied right-to-left.

#include <array>
#include <memory>

#include "voa/fock.hpp"
#include "voa/report.hpp"

namespace voa {

// A node evaluates to (left)_mode(right); leaves are the weight-one
// generators of a single tensor factor (or the vacuum).
struct ModeExpr {
    enum class Leaf { None, Vacuum, Boson, ExpPlus, ExpMinus };

    Leaf leaf = Leaf::None;
    int factor = -1;  // tensor factor of a leaf generator
    long long mode = 0;
    std::shared_ptr<ModeExpr> left, right;

    static ModeExpr make_leaf(Leaf g, int factor);
    static ModeExpr node(ModeExpr l, long long mode, ModeExpr r);

    bool is_leaf() const { return leaf != Leaf::None; }

    // Evaluate with vertex_mode, substituting `images` for the leaf
    // generators of each factor (identity images reproduce the original).
    struct FactorImages {
        FockElement boson;      // image of a_f(-1)1
        FockElement exp_plus;   // image of e^{a_f}
        FockElement exp_minus;  // image of e^{-a_f}
    };
    FockElement evaluate(const std::array<FactorImages, 3>& images) const;
};

std::array<ModeExpr::FactorImages, 3> identity_images();

enum class RewriteStrategy { ModesAscending, ModesDescending };

// Tree over generator leaves evaluating exactly to the rank-1 factor content
// of m in the given tensor factor. e^{ka} is built by iterated leading
// exponential modes, a(-n) as (a(-1)1)_{-n}.
ModeExpr monomial_to_tree(const Rank1Monomial& m, int factor,
                          RewriteStrategy strategy = RewriteStrategy::ModesAscending);

class Automorphism {
public:
    enum class Kind { Monomial, GeneratorDefined, Composite };

    // sign (-1)^{<mu, point>/2} then the signed permutation iso (rows:
    // iso[i] = image of alpha_i as a +-1 multiple of some alpha_j).
    static Automorphism monomial(std::array<std::array<int, 3>, 3> iso, LatticeVector mu,
                                 std::string name);
    static Automorphism generator_defined(std::array<ModeExpr::FactorImages, 3> images,
                                          std::string name);
    // Applied right-to-left: composite({g, h})(v) = g(h(v)).
    static Automorphism composite(std::vector<Automorphism> parts, std::string name);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    FockElement apply(const FockElement& v) const;
    FockElement apply(const FockMonomial& m) const { return apply(FockElement(m)); }

    void set_strategy(RewriteStrategy s) { strategy_ = s; }

private:
    Automorphism() = default;
    Kind kind_ = Kind::Monomial;
    std::string name_;
    RewriteStrategy strategy_ = RewriteStrategy::ModesAscending;
    // Monomial
    std::array<std::array<int, 3>, 3> iso_{};
    LatticeVector mu_;
    // GeneratorDefined
    std::array<ModeExpr::FactorImages, 3> images_;
    // Composite
    std::vector<Automorphism> parts_;
};

// The named automorphisms. theta_1/theta_2/sigma act on the single tensor
// factor given (0-based); psi_i, tau, phi, rho act on all of V_L.
Automorphism theta1(int factor);
Automorphism theta2(int factor);
Automorphism sigma(int factor);
Automorphism psi1();
Automorphism psi2();
Automorphism tau();
Automorphism phi();
Automorphism theta2_111();  // theta_2 (x) 1 (x) 1
Automorphism rho();         // (theta_2 (x) 1 (x) 1) phi tau

// Eigenbasis of a monomial involution at the given weight of the Fock space
// over `space` (+1 or -1 eigenspace).
std::vector<FockElement> fixed_subspace(const Automorphism& g, const Coset& space,
                                        const Rat& weight, int sign);

// sigma theta_1 sigma = theta_2 (rank one), tau psi_1 tau = psi_2,
// rho psi_1 = psi_2 rho, commutation of (theta_2 (x) 1 (x) 1) phi with psi_2,
// and the involution checks, all on basis monomials of weight <= cutoff.
Report verify_relations(long long weight_cutoff);

// The image identities: tau(s^i), tau(omega), rho(s^i), rho(omega), and the
// Virasoro element (1/12) gamma(-1)^2 of V_F.
Report verify_images();

}  // namespace voa
