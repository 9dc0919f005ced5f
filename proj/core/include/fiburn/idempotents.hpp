// The idempotent systems of the truncated algebra E(G) and of the full double
// fibered Burnside algebra: lifted Burnside idempotents, the Y sandwich
// elements, the pair idempotents and their Moebius combinations phi, the
// orbit sums, the partial idempotents u/v and the section idempotents
// epsilon, together with machine-checkable verification reports.

#ifndef FIBURN_IDEMPOTENTS_HPP
#define FIBURN_IDEMPOTENTS_HPP

#include <string>
#include <vector>

#include "fiburn/algebra.hpp"
#include "fiburn/characters.hpp"
#include "fiburn/mobius.hpp"

namespace fiburn {

/// Lifted Burnside idempotent: sum over K <= H of
/// (1/|N_G(H)|) |K| mu(K,H) [Delta(K), 1] in B(G,G).
AlgebraElement e_tilde(const GroupPtr& g, const Subgroup& h);

/// Y_{U,upsilon} = e_tilde(G,G) [U,upsilon] e_tilde(G,G); U must be covering.
AlgebraElement y_element(const GroupPtr& g, const FiberedPair& pair);

/// e_tilde_(K,kappa) = e_tilde * e_(K,kappa) for K <= Phi(G); the two
/// one-sided forms are computed and asserted equal.
AlgebraElement e_tilde_pair(const GroupPtr& g, const PairTag& tag);

/// f_(K,kappa) = sum over (L,lambda) >= (K,kappa) in M_G^G of
/// mu_normal(K,L) e_(L,lambda).
AlgebraElement f_pair(const GroupPtr& g, const PairTag& tag);

/// phi_(K,kappa) = sum over (L,lambda) >= (K,kappa) in M_{Phi(G)}^G of
/// mu_normal(K,L) e_tilde_(L,lambda).  For p-groups with faithful kappa the
/// rank-restricted fast form is computed as well and asserted equal.
AlgebraElement phi(const GroupPtr& g, const PairTag& tag);

/// Orbit sum phi_[K,kappa] over an Out(G)-orbit of tags.
AlgebraElement phi_orbit(const GroupPtr& g, const std::vector<PairTag>& orbit);

/// Bouc's trivial-fiber idempotent: sum over N <= L <= Phi(G), L normal, of
/// mu_normal(N,L) Y_{Delta_L(G), 1}.
AlgebraElement phi_bouc(const GroupPtr& g, const Subgroup& n);

/// Index of one epsilon idempotent: a minimal section class together with an
/// Out(T/S)-orbit of faithful Frattini pairs of T/S.
struct EpsilonIndex {
  Section section;
  Subgroup joint_normalizer;
  GroupPtr quot;               // T/S
  std::vector<PairTag> orbit;  // tags on quot, sorted; front() = representative
  int normalizer_index = 1;    // |N_G(T,S) : T|
};

std::vector<EpsilonIndex> epsilon_indices(const GroupPtr& g);

struct UVPair {
  AlgebraElement u;  // B(G, T/S)
  AlgebraElement v;  // B(T/S, G)
};
UVPair uv(const GroupPtr& g, const EpsilonIndex& idx);

AlgebraElement epsilon(const GroupPtr& g, const EpsilonIndex& idx);

/// Iso(c_g) on T/S for coset representatives g of T in N_G(T,S).
std::vector<AlgebraElement> normalizer_isos(const GroupPtr& g,
                                            const EpsilonIndex& idx);
/// Their sum as one element of B(T/S, T/S).
AlgebraElement normalizer_iso_sum(const GroupPtr& g, const EpsilonIndex& idx);

// --- verification ---------------------------------------------------------------

struct VerifyItem {
  std::string identity;
  bool pass = true;
  std::string witness;  // first failing witness, empty when passing
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_pass() const;
  VerifyItem& item(const std::string& identity);
  void fail(const std::string& identity, const std::string& witness);
};

/// e_tilde system, phi system (orthogonality, idempotency, sum), the fast
/// p-group form, the Inf/Def commutation lemmas, the vanishing theorems and
/// the phi * Y product law.  Whole-basis sweeps are included when the product
/// lattice fits the cap.
VerifyReport verify_phi_system(const GroupPtr& g);

/// u/v opposites, the v*u evaluation, cross-index vanishing, idempotency,
/// orthogonality and completeness of the epsilon system.
VerifyReport verify_epsilon_system(const GroupPtr& g);

}  // namespace fiburn

#endif  // FIBURN_IDEMPOTENTS_HPP
