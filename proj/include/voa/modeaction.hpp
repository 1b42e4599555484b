#pragma once
// Graded matrix action of the modes of a fixed element on the weight blocks
// of an integrally graded Fock space (V_L, V_N, ...). Columns are assembled
// lazily per (mode, block) with vertex_mode and cached; this is what makes
// the Virasoro commutator sweeps tractable: every repeated application is a
// sparse column lookup instead of a fresh vertex-operator evaluation.

#include <map>
#include <vector>

#include "voa/fock.hpp"
#include "voa/vertex.hpp"

namespace voa {

using SparseVec = std::vector<std::pair<int, Rat>>;  // (row, value), rows ascending

class ModeAction {
public:
    // Blocks of the Fock space over `space` up to max_weight (inclusive);
    // all monomial weights must be integers.
    ModeAction(FockElement v, Coset space, long long max_weight);

    const FockElement& vector() const { return v_; }
    long long max_weight() const { return maxw_; }

    const std::vector<FockMonomial>& block(long long w) const;
    long long dim(long long w) const;

    // L(m) = v_{m+1} applied to basis monomial #idx of block w; rows index
    // block w-m. Assembles and caches the whole (m, w) block on first use.
    const SparseVec& column(int m, long long w, int idx);

    // y += c * L(m) x with x sparse over block w, y dense over block w-m.
    void apply(int m, long long w, const SparseVec& x, const Rat& c,
               std::vector<Rat>& y, std::vector<int>& touched);

private:
    const std::vector<SparseVec>& assemble(int m, long long w);

    FockElement v_;
    Coset space_;
    long long maxw_;
    std::vector<std::vector<FockMonomial>> blocks_;
    std::vector<std::map<FockMonomial, int>> index_;
    std::map<std::pair<int, long long>, std::vector<SparseVec>> cols_;
};

}  // namespace voa
