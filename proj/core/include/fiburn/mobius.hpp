// Moebius functions of the subgroup lattice and of the normal-subgroup poset,
// deflation numbers, and the coefficients of the primitive idempotents of the
// rational Burnside ring.  The two posets have independent recursions and are
// never conflated.

#ifndef FIBURN_MOBIUS_HPP
#define FIBURN_MOBIUS_HPP

#include <vector>

#include "fiburn/group.hpp"
#include "fiburn/rational.hpp"

namespace fiburn {

/// mu(K, H) in the subgroup lattice of the parent; requires K <= H.
long mobius_subgroup(const Subgroup& k, const Subgroup& h);

/// mu(K, L) in the poset of normal subgroups of the parent; both normal.
long mobius_normal(const Subgroup& k, const Subgroup& l);

/// Deflation number m_{G,N} = (1/|G|) * sum over X <= G with XN = G of
/// |X| mu(X, G).
Rat deflation_number(const GroupPtr& g, const Subgroup& n);

/// e_H^G as an element of B_Q(G): coefficients on the conjugacy classes
/// [G/K], folded over conjugate K <= H.  Pairs are keyed by class
/// representatives and sorted by (order, elems).
std::vector<std::pair<Subgroup, Rat>> burnside_idempotent_coeffs(
    const GroupPtr& g, const Subgroup& h);

}  // namespace fiburn

#endif  // FIBURN_MOBIUS_HPP
