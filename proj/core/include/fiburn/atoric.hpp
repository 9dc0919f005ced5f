// Atoric p-groups, atoric parts, the block idempotents c_M / b_L, central
// resolutions and the special-class predicates.

#ifndef FIBURN_ATORIC_HPP
#define FIBURN_ATORIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fiburn/algebra.hpp"
#include "fiburn/idempotents.hpp"

namespace fiburn {

struct AtoricBreakdown {
  bool atoric = false;
  bool criterion_normal_meet = false;  // every nontrivial normal N meets Phi(P)
  bool criterion_omega = false;        // Omega_1 Z(P) <= Phi(P)
  std::optional<bool> criterion_no_factor;  // direct-factor search, |P| <= 32 only
};

/// Atoricity with the per-criterion breakdown; the two always-on criteria are
/// asserted to agree.  Requires a p-group (or the trivial group).
AtoricBreakdown is_atoric(const GroupPtr& p);

struct AtoricPart {
  GroupPtr part;    // P^@ = P / N
  Subgroup kernel;  // the chosen maximal N with N n Phi(P) = 1
};

/// The atoric part P^@.  All maximal admissible kernels are verified to give
/// isomorphic quotients and the quotient is verified atoric.
AtoricPart atoric_part(const GroupPtr& p);

/// Whether M is isomorphic to a subquotient of P (section sweep).
bool is_subquotient(const GroupPtr& m, const GroupPtr& p);

/// Bouc's fibered block idempotent c_M^P: sum of the epsilon idempotents over
/// the indices with (T/K)^@ isomorphic to M.  M must be atoric.
AlgebraElement c_m(const GroupPtr& p, const GroupPtr& m);

/// The ordinary (trivial-fiber) block idempotent b_L^P built from Bouc's phi.
AlgebraElement b_l(const GroupPtr& p, const GroupPtr& l);

/// b_L^P * c_M^P; nonzero-ness feeds the central-resolution equivalence.
AlgebraElement check_restriction_block(const GroupPtr& p, const GroupPtr& l,
                                       const GroupPtr& m);

struct ResolutionWitness {
  std::string q_spec;
  GroupPtr q;
  Subgroup k, s;
};

struct ResolveResult {
  std::optional<ResolutionWitness> witness;  // empty: none within the catalog
  int catalog_bound = 0;                     // largest order searched
};

using Catalog = std::vector<std::pair<std::string, GroupPtr>>;

/// All family-constructible p-groups of order <= max_order for the prime p,
/// as (spec string, group) pairs sorted by order.
Catalog default_catalog(int p, int max_order);

/// First witness (Q, K, S) of the central resolution M ~> L inside the
/// catalog (Q atoric, K central cyclic, K,S <= Phi(Q), K n S = 1,
/// (Q/K)^@ = M, (Q/S)^@ = L), or none-within-catalog.  Not a proof of
/// non-existence.
ResolveResult central_resolution(const GroupPtr& m, const GroupPtr& l,
                                 const Catalog& catalog);

enum class SpecialTag { None, Cyclic, GeneralizedExtraspecial, QuasiExtraspecial };

struct SpecialClass {
  SpecialTag tag = SpecialTag::None;
  bool generalized_extraspecial = false;
  bool quasi_extraspecial = false;
  Subgroup center, derived, frattini;       // the evidence
  std::optional<std::string> family_match;  // constructed family isomorphic to P
};

SpecialClass special_class(const GroupPtr& p);

std::string special_tag_name(SpecialTag t);

/// Dimensions of c_M^P F(P) for every atoric subquotient class M of P.
/// Returned as (representative group, spec-ish name, dimension).
struct VertexSupportEntry {
  GroupPtr m;
  int dimension = 0;
};
std::vector<VertexSupportEntry> vertex_support(const GroupPtr& p);

/// Atoric subquotients of P up to isomorphism (candidate vertices), sorted by
/// order.
std::vector<GroupPtr> atoric_subquotients(const GroupPtr& p);

}  // namespace fiburn

#endif  // FIBURN_ATORIC_HPP
