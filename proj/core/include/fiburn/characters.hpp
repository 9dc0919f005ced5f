// Linear characters with exact Q/Z values, the pair posets M_G^G and their
// Frattini / faithful variants, and the Out(G)-action on pairs.

#ifndef FIBURN_CHARACTERS_HPP
#define FIBURN_CHARACTERS_HPP

#include <vector>

#include "fiburn/group.hpp"
#include "fiburn/rational.hpp"

namespace fiburn {

/// Exact homomorphism U -> C^x written additively in Q/Z: the stored fraction
/// a/b at x means x acts by exp(2*pi*i*a/b).
struct Character {
  Subgroup domain;
  std::vector<QZ> values;  // aligned with domain.elems

  QZ value_at(Elt e) const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.domain == b.domain && a.values == b.values;
  }
};

Character trivial_character(const Subgroup& u);
bool is_character(const Character& c);  // full homomorphism check

/// All |U / [U,U]| characters of U, validated, in a deterministic order
/// (sorted by value vector).  Cached per subgroup.
const std::vector<Character>& hom_group(const Subgroup& u);

Character char_product(const Character& a, const Character& b);
Character char_inverse(const Character& a);
Character char_restrict(const Character& a, const Subgroup& v);
/// Pullback along a surjective pi: G -> Q of a character on a subgroup of Q;
/// the result lives on the full preimage of the domain.
Character char_inflate(const Character& bar, const GroupMap& pi);
Subgroup char_kernel(const Character& a);
bool char_is_faithful(const Character& a);
/// Invariance under conjugation by the parent group; the domain must be
/// normal.
bool char_is_invariant(const Character& a);
bool chars_agree_on(const Character& a, const Character& b,
                    const std::vector<Elt>& elems);

/// x -> a(g^-1 x g), defined on the conjugated domain g D g^-1.
Character char_conjugate(const Character& a, Elt g);
/// Transport along a bijective map f: x -> a(f^-1(x)) on f(domain).
Character char_transport(const Character& a, const GroupMap& f);

/// (K, kappa) with K normal in G and kappa G-invariant.
struct PairTag {
  Subgroup K;
  Character kappa;
  friend bool operator==(const PairTag& a, const PairTag& b) {
    return a.K == b.K && a.kappa == b.kappa;
  }
};

/// Deterministic order: by (|K|, K elements, value list).
bool pair_tag_less(const PairTag& a, const PairTag& b);
/// (K,kappa) <= (L,lambda) iff K <= L and lambda|_K = kappa.
bool pair_leq(const PairTag& a, const PairTag& b);

enum class PosetVariant { All = 0, Frattini = 1, FaithfulFrattini = 2 };

struct PairPoset {
  std::vector<PairTag> tags;           // sorted by pair_tag_less
  std::vector<std::vector<bool>> leq;  // leq[i][j] iff tags[i] <= tags[j]
  int index_of(const PairTag& t) const;
};

const PairPoset& pair_poset(const GroupPtr& g, PosetVariant variant);

/// Full Aut(G)-orbit of the tag (the action factors through Out(G)),
/// deduplicated and sorted; front() is the lexicographically minimal
/// representative.
std::vector<PairTag> out_orbit(const GroupPtr& g, const PairTag& tag);

/// A subgroup of a registered direct product together with a character on it;
/// the label data of a transitive fibered biset.
struct FiberedPair {
  Subgroup U;
  Character upsilon;
  friend bool operator==(const FiberedPair& a, const FiberedPair& b) {
    return a.U == b.U && a.upsilon == b.upsilon;
  }
};

}  // namespace fiburn

#endif  // FIBURN_CHARACTERS_HPP
