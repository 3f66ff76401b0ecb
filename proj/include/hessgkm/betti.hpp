#pragma once

#include <cstdint>
#include <vector>

#include "hessgkm/combinatorics.hpp"
#include "hessgkm/symbolic.hpp"

namespace hessgkm {

/// Complex dimension, sum of h(j) - j.
int dimension(const HessenbergFunction& h);

/// Counts permutations by h-restricted inversions.
PoincarePolynomial poincare_bruteforce(const HessenbergFunction& h, int cap = kDefaultCapN);

/// Recursion over the position of n: sum_j q^{h(j)-j} P(reduce(h, j)). Memoized.
PoincarePolynomial poincare_inductive(const HessenbergFunction& h);

/// prod_{i=1}^n (1 + q + ... + q^{i-1}).
PoincarePolynomial flag_poincare(int n);

/// Second Betti number from the L/bottom sets. Throws NotConnected.
std::int64_t b2_closed_form(const HessenbergFunction& h);

/// b_0, b_2, ..., b_{2d} under h(j) >= j+d on [n-d]. Throws PreconditionUnmet.
std::vector<std::int64_t> betti_low_degree(const HessenbergFunction& h, int d);

/// Number of connected components: n! / prod (block sizes)!, the blocks being
/// the maximal intervals of [n] not split by some h(j) = j.
std::int64_t component_count(const HessenbergFunction& h);

}  // namespace hessgkm
