#pragma once
// Independent oracles for the unit and acceptance suites. These deliberately
// avoid the code paths they check: theta counts enumerate by basis
// coefficients instead of the ambient cube, character coefficients come from
// Shapovalov-Gram ranks of Verma modules instead of character formulas, and
// partition counts use a knapsack recurrence instead of series products.

#include <map>
#include <vector>

#include "voa/lattice.hpp"
#include "voa/linalg.hpp"

namespace voa::oracle {

// Counts {<x,x>/2 -> #points} over the coset for <x,x>/2 <= order,
// enumerated over basis-coefficient boxes (Cauchy-Schwarz bound from the
// inverse Gram). The shift must lie in the rational span of the lattice.
std::map<Rat, long long> theta_counts_by_basis(const Coset& c, const Rat& order);

// dim of the level-n piece of the irreducible L(c,h), as the rank of the
// Shapovalov Gram matrix of the Verma module at level n.
long long verma_irreducible_dim(const BigRat& c, const BigRat& h, int level);

// d-colored partition counts p_d(0..n) via the unbounded-knapsack recurrence.
std::vector<long long> colored_partitions(int d, int n);

}  // namespace voa::oracle
