// Evaluations of the monomial Burnside functor F(G) = B_Q^{C^x}(G, 1) and
// their decomposition by the epsilon idempotent system.  The trivial group is
// an explicit object, so module vectors reuse the algebra machinery with no
// special cases.

#ifndef FIBURN_FUNCTOR_EVAL_HPP
#define FIBURN_FUNCTOR_EVAL_HPP

#include <vector>

#include "fiburn/algebra.hpp"
#include "fiburn/idempotents.hpp"

namespace fiburn {

/// A module vector is just an element of B(G, 1).
using ModuleVector = AlgebraElement;

SpacePtr module_space(const GroupPtr& g);

/// Conjugacy classes of pairs (U <= G, upsilon in U^*): the standard basis of
/// F(G).
const std::vector<BasisLabel>& module_basis(const GroupPtr& g);

ModuleVector module_unit(const GroupPtr& g, const BasisLabel& label);

/// Functor action: composition with x in B(G, H) sends F(H) to F(G).
ModuleVector act(const AlgebraElement& x, const ModuleVector& v);

struct EpsilonComponent {
  EpsilonIndex index;
  int dimension = 0;
  std::vector<ModuleVector> image_basis;  // independent epsilon-images in F(G)
  bool invariance_ok = true;  // components fixed by Iso(c_g), g in N_G(T,S)
};

struct DecompositionReport {
  GroupPtr group;
  int total_rank = 0;
  std::vector<EpsilonComponent> components;
  bool dims_sum_ok = false;     // dimensions add up to the total rank
  bool direct_sum_ok = false;   // joint rank of all images equals the sum
  bool uv_identity_ok = false;  // U o V and V o U are identities on a spanning set
};

DecompositionReport decompose(const GroupPtr& g);

}  // namespace fiburn

#endif  // FIBURN_FUNCTOR_EVAL_HPP
