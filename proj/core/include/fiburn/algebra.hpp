// The fibered double Burnside algebra B_Q^{C^x}(G, H): canonical basis labels
// for transitive fibered bisets, the Mackey product, opposites, elementary
// bisets and the pair idempotents e_(K,kappa).
//
// Elements are sparse exact-rational combinations of canonical labels; a
// label is the lexicographically minimal (U, upsilon) in its
// (G x H)-conjugacy class.  Zero coefficients are always dropped, so equality
// of elements is literal map equality.

#ifndef FIBURN_ALGEBRA_HPP
#define FIBURN_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fiburn/characters.hpp"
#include "fiburn/group.hpp"
#include "fiburn/rational.hpp"

namespace fiburn {

struct BasisLabel {
  std::vector<Elt> elems;  // subgroup of the product group, sorted
  std::vector<QZ> values;  // character values aligned with elems

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend bool operator<(const BasisLabel& a, const BasisLabel& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    if (a.elems != b.elems) return a.elems < b.elems;
    return a.values < b.values;
  }
};

/// Left/right invariants of a fibered pair together with the kernels of the
/// two character components.
struct PairInvariants {
  Subgroup p1, k1, p2, k2;
  Character upsilon1, upsilon2;
  Subgroup ker1, ker2;
};

class BisetSpace;
using SpacePtr = std::shared_ptr<BisetSpace>;

/// The context of B(G, H): the registered product G x H plus the canonical
/// label and product caches.  One instance per ordered pair of groups.
class BisetSpace : public std::enable_shared_from_this<BisetSpace> {
 public:
  static SpacePtr get(const GroupPtr& dst, const GroupPtr& src);

  const GroupPtr& dst() const { return dst_; }
  const GroupPtr& src() const { return src_; }
  const GroupPtr& product() const { return prod_; }

  Elt pair(Elt a, Elt b) const { return a * src_->order() + b; }
  Elt left_of(Elt e) const { return e / src_->order(); }
  Elt right_of(Elt e) const { return e % src_->order(); }

  /// Canonical label: orbit minimum of (U, upsilon) under conjugation by
  /// G x H.  Cached together with the whole orbit.
  const BasisLabel& canonical(const FiberedPair& pair) const;
  BasisLabel encode(const FiberedPair& pair) const;
  FiberedPair decode(const BasisLabel& label) const;

  PairInvariants invariants(const FiberedPair& pair) const;
  PairInvariants invariants(const BasisLabel& label) const;

  /// All canonical labels, i.e. the standard basis of B(G, H).  Needs the
  /// product lattice (CapExceeded beyond caps().lattice).
  const std::vector<BasisLabel>& basis() const;

  // term-product cache used by mackey_product
  std::map<std::tuple<const Group*, BasisLabel, BasisLabel>,
           std::map<BasisLabel, Rat>>&
  product_cache() const {
    return product_cache_;
  }

 private:
  BisetSpace() = default;
  GroupPtr dst_, src_, prod_;
  mutable std::map<BasisLabel, BasisLabel> canon_cache_;
  mutable std::optional<std::vector<BasisLabel>> basis_;
  mutable std::map<std::tuple<const Group*, BasisLabel, BasisLabel>,
                   std::map<BasisLabel, Rat>>
      product_cache_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(SpacePtr space) : space_(std::move(space)) {}

  static AlgebraElement from_pair(const SpacePtr& space, const FiberedPair& p,
                                  const Rat& coeff = 1);

  const SpacePtr& space() const { return space_; }
  const GroupPtr& dst() const { return space_->dst(); }
  const GroupPtr& src() const { return space_->src(); }
  const std::map<BasisLabel, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  void add_term(const BasisLabel& label, const Rat& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rat& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(const Rat& s, AlgebraElement a) {
    a *= s;
    return a;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.space_.get() == b.space_.get() && a.terms_ == b.terms_;
  }

 private:
  SpacePtr space_;
  std::map<BasisLabel, Rat> terms_;
};

/// [Delta(G), 1], the identity of B(G, G).
AlgebraElement identity_element(const GroupPtr& g);

/// Bilinear Mackey product B(G,H) x B(H,K) -> B(G,K).
AlgebraElement mackey_product(const AlgebraElement& x, const AlgebraElement& y);

/// The opposite anti-homomorphism B(G,H) -> B(H,G).
AlgebraElement opposite(const AlgebraElement& x);

/// Star product U*V with the composite character; MathError when the
/// characters disagree on k2(U) n k1(V) (the Mackey condition).
FiberedPair star(const FiberedPair& u, const FiberedPair& v);
bool star_defined(const FiberedPair& u, const FiberedPair& v);

// Elementary bisets.  Subgroups and quotients are materialised through the
// identity-stable caches of the parent group.
AlgebraElement ind(const Subgroup& h);                     // B(G, H)
AlgebraElement res(const Subgroup& h);                     // B(H, G)
AlgebraElement inflate(const GroupPtr& g, const Subgroup& n);  // B(G, G/N)
AlgebraElement deflate(const GroupPtr& g, const Subgroup& n);  // B(G/N, G)
AlgebraElement iso(const GroupMap& f);                     // B(H, G), f: G -> H
AlgebraElement indinf(const Section& ts);                  // B(G, T/S)
AlgebraElement defres(const Section& ts);                  // B(T/S, G)

/// e_(K,kappa) = [G x G / (Delta_K(G), phi_kappa)]; requires kappa
/// G-invariant.
AlgebraElement e_pair(const GroupPtr& g, const PairTag& tag);

/// The twisted diagonal Delta_K(G) = {(g,h) : gK = hK} with its character
/// phi_kappa(g, h) = kappa(h^-1 g), as a fibered pair over G x G.
FiberedPair delta_pair(const GroupPtr& g, const PairTag& tag);

/// Minimal generating sequence of a subgroup (greedy by descending element
/// order, tie-break by id); used by the serialisers.
std::vector<Elt> subgroup_generators(const Subgroup& s);

}  // namespace fiburn

#endif  // FIBURN_ALGEBRA_HPP
