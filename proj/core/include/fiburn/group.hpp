// Finite groups as exact multiplication tables.
//
// A Group is immutable after construction: the Cayley table is validated once
// (identity at id 0, Latin square, associativity) and every derived structure
// (subgroup lattice, conjugacy classes, automorphisms, quotients) is computed
// lazily and cached inside the group object.  Derived groups built through a
// group (materialised subgroups, quotients, direct products) are cached by
// their defining data, so rebuilding the same object returns the identical
// instance; algebra spaces rely on that identity.

#ifndef FIBURN_GROUP_HPP
#define FIBURN_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiburn {

using Elt = int;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Size limits for the expensive enumerations.  The defaults document the
/// desk scale this library is built for; the CLI can lower or raise them.
struct Caps {
  int lattice = 256;        // largest order with a full subgroup lattice
  int automorphisms = 32;   // largest order for Aut(G) enumeration
  int oracle = 8;           // largest factor order for the set-level oracle
  int product = 4096;       // hard cap on direct-product order
};
Caps& caps();

struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> elems;  // strictly sorted, contains 0

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(Elt e) const;
  bool contains(const Subgroup& other) const;
  bool is_whole() const;
  int position_of(Elt e) const;  // index into elems, -1 if absent

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent.get() == b.parent.get() && a.elems == b.elems;
  }
};

/// A section (T, S): S normal in T.  Minimal sections additionally have
/// S contained in the Frattini subgroup of T.
struct Section {
  Subgroup T;
  Subgroup S;
  friend bool operator==(const Section&, const Section&) = default;
};

struct GroupMap {
  GroupPtr src, dst;
  std::vector<Elt> images;  // indexed by src element id
  bool injective = false;
  bool surjective = false;

  Elt operator()(Elt e) const { return images[e]; }
  bool is_bijective() const { return injective && surjective; }
};

GroupMap identity_map(const GroupPtr& g);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);  // outer o inner
GroupMap inverse(const GroupMap& f);
bool is_homomorphism(const GroupMap& f);

/// Goursat quintuple of a subgroup U of a direct product: projections,
/// kernels, and the quotient isomorphism eta: p2/k2 -> p1/k1 recorded as a
/// coset-representative map indexed by the position of an element in p2.
struct GoursatData {
  Subgroup p1, k1, p2, k2;
  std::vector<Elt> eta;  // eta[i] in p1: image coset of p2.elems[i]
};

struct ProductInfo {
  GroupPtr left, right;
};

/// Full subgroup lattice with its conjugacy classification.
struct SubgroupLattice {
  std::vector<std::vector<Elt>> subs;  // sorted by (order, elems)
  std::vector<int> class_of;           // subgroup index -> class index
  std::vector<int> class_rep;          // class index -> subgroup index
  std::vector<int> class_size;         // orbit sizes
  std::vector<Elt> to_rep;             // g with g S g^-1 = class rep

  int index_of(const std::vector<Elt>& elems) const;
  int num_classes() const { return static_cast<int>(class_rep.size()); }
};

struct SectionClass {
  Section section;
  Subgroup joint_normalizer;  // N_G(T) intersect N_G(S)
  int orbit_size = 1;
};

struct MaterializedSubgroup {
  GroupPtr group;
  GroupMap embed;  // group -> parent
};

struct QuotientGroup {
  GroupPtr group;
  GroupMap projection;  // parent -> group, kernel exactly N
};

/// Cached data of a section quotient T/S.
struct SectionQuotient {
  GroupPtr t_group;  // materialised T
  GroupMap t_embed;  // materialised T -> parent
  GroupPtr group;    // T/S
  GroupMap t_to_q;   // materialised T -> T/S
};

namespace detail {
struct ModuleCaches;
}

class Group : public std::enable_shared_from_this<Group> {
 public:
  /// Validates and wraps a Cayley table (row-major, n*n, ids 0..n-1 with 0 the
  /// identity).  Throws MathError on a Latin-square or associativity failure.
  static GroupPtr make(int order, std::vector<std::uint16_t> table,
                       std::string name,
                       std::optional<ProductInfo> product = std::nullopt);

  ~Group();

  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elt power(Elt a, long k) const;
  int elt_order(Elt a) const { return elt_order_[a]; }
  int exponent() const;
  bool is_abelian() const;
  bool is_cyclic() const;

  const std::string& name() const { return name_; }
  /// The prime p when |G| is a power of p (set automatically).
  std::optional<int> prime_hint() const { return prime_hint_; }
  const std::optional<ProductInfo>& product_info() const { return product_; }

  GroupPtr self() const { return shared_from_this(); }

  // --- subgroups -----------------------------------------------------------
  Subgroup whole() const;
  Subgroup trivial_subgroup() const;
  Subgroup closure(const std::vector<Elt>& gens) const;
  /// Validates closedness; throws MathError otherwise.
  Subgroup subgroup(std::vector<Elt> elems) const;
  Subgroup conjugate(const Subgroup& s, Elt g) const;
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const;
  Subgroup join(const Subgroup& a, const Subgroup& b) const;
  bool is_normal(const Subgroup& s) const;  // normal in the whole group
  bool normalizes(const Subgroup& s, Elt g) const;
  Subgroup normalizer(const Subgroup& s) const;

  // --- cached structure ----------------------------------------------------
  const SubgroupLattice& lattice() const;  // CapExceeded above caps().lattice
  std::vector<Subgroup> subgroups() const;
  std::vector<std::pair<Subgroup, int>> subgroup_classes() const;
  /// Conjugacy-class representative of s together with a conjugator onto it.
  std::pair<Subgroup, Elt> subgroup_class_rep(const Subgroup& s) const;
  std::vector<Subgroup> normal_subgroups() const;
  std::vector<Subgroup> maximal_subgroups() const;
  Subgroup center() const;
  Subgroup derived() const;
  Subgroup frattini() const;
  Subgroup omega1_center() const;  // requires prime_hint

  Subgroup frattini_of(const Subgroup& t) const;  // Frattini of a subgroup
  std::vector<SectionClass> minimal_sections() const;

  // --- morphisms -----------------------------------------------------------
  /// Minimal generating sequence, greedy by descending element order with id
  /// tie-break.
  std::vector<Elt> minimal_generators() const;
  const std::vector<GroupMap>& automorphisms() const;
  const std::vector<bool>& inner_automorphism_flags() const;
  GroupMap conjugation_map(Elt g) const;  // x -> g x g^-1 as a GroupMap

  // --- derived groups (identity-cached) -------------------------------------
  const MaterializedSubgroup& materialize(const Subgroup& s) const;
  const QuotientGroup& quotient(const Subgroup& n) const;  // n normal

  detail::ModuleCaches& module_caches() const { return *caches_; }

 private:
  Group() = default;
  int n_ = 1;
  std::vector<std::uint16_t> table_;
  std::vector<Elt> inv_;
  std::vector<int> elt_order_;
  std::string name_;
  std::optional<int> prime_hint_;
  std::optional<ProductInfo> product_;
  std::unique_ptr<detail::ModuleCaches> caches_;
};

// --- products and quotients --------------------------------------------------

struct ProductGroup {
  GroupPtr group;  // pair numbering (g, h) -> g*|H| + h
  GroupMap embed_left, embed_right;
  GroupMap proj_left, proj_right;
};

/// Registered direct product; repeated calls with the same factors return the
/// identical group object.
const ProductGroup& direct_product(const GroupPtr& g, const GroupPtr& h);

inline Elt pair_elt(const GroupPtr& h, Elt a, Elt b) { return a * h->order() + b; }

/// Central product of G and H over central elements of equal order n > 1:
/// (G x H) / <(zG, zH^-1)>.
GroupPtr central_product(const GroupPtr& g, Elt zg, const GroupPtr& h, Elt zh);

GoursatData goursat(const Subgroup& u);  // parent must be a registered product

/// T/S with the maps through the materialised T; identity-cached per section.
const SectionQuotient& section_quotient(const Section& ts);

std::optional<GroupMap> is_isomorphic(const GroupPtr& g, const GroupPtr& h);

/// The one trivial group shared by everything (functor evaluations use it as
/// the right-hand slot of B(G, 1)).
const GroupPtr& trivial_group();

}  // namespace fiburn

#endif  // FIBURN_GROUP_HPP
