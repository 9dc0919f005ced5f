// Brute-force set-level composition of transitive fibered bisets.
//
// The fiber group is modelled as Z/e with e the lcm of the three group
// exponents; each transitive fibered biset is realised as the concrete set
// (A x G x H) / {(upsilon(u)^-1, u)}, the composition is computed as the
// A-free part of the (A x H)-orbit space of the product, and stabilizing
// pairs are read off the result.  This is the independent correctness oracle
// for mackey_product and is deliberately kept free of the algebra module's
// product machinery.

#ifndef FIBURN_ORACLE_HPP
#define FIBURN_ORACLE_HPP

#include "fiburn/algebra.hpp"

namespace fiburn {

/// Multiset of transitive pieces of x o y, returned as an element of B(G,K)
/// with multiplicity coefficients.  CapExceeded when a factor order exceeds
/// caps().oracle.
AlgebraElement tensor_oracle(const FiberedPair& x, const FiberedPair& y);

}  // namespace fiburn

#endif  // FIBURN_ORACLE_HPP
