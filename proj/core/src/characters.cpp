#include "fiburn/characters.hpp"

#include <algorithm>
#include <map>

#include "module_caches.hpp"

namespace fiburn {

QZ Character::value_at(Elt e) const {
  int pos = domain.position_of(e);
  if (pos < 0) throw MathError("character evaluated outside its domain");
  return values[pos];
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(),
                     [](const QZ& v) { return v.is_zero(); });
}

Character trivial_character(const Subgroup& u) {
  return Character{u, std::vector<QZ>(u.elems.size())};
}

bool is_character(const Character& c) {
  const Group& g = *c.domain.parent;
  const auto& el = c.domain.elems;
  if (c.values.size() != el.size()) return false;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      int pos = c.domain.position_of(g.mul(el[i], el[j]));
      if (pos < 0) return false;
      if (!(c.values[pos] == c.values[i] + c.values[j])) return false;
    }
  return true;
}

namespace {

// Cyclic basis of a small abelian group: generators with orders, found by
// splitting off a maximal-order cyclic subgroup and recursing on a
// complement.
void abelian_basis(const GroupPtr& a, std::vector<std::pair<Elt, int>>& out) {
  if (a->order() == 1) return;
  Elt gen = 0;
  for (Elt x = 1; x < a->order(); ++x)
    if (gen == 0 || a->elt_order(x) > a->elt_order(gen)) gen = x;
  Subgroup c = a->closure({gen});
  out.emplace_back(gen, c.order());
  if (c.order() == a->order()) return;
  for (const auto& b : a->subgroups()) {
    if (b.order() * c.order() != a->order()) continue;
    if (a->intersect(b, c).order() != 1) continue;
    const MaterializedSubgroup& mb = a->materialize(b);
    std::vector<std::pair<Elt, int>> inner;
    abelian_basis(mb.group, inner);
    for (auto& [g, o] : inner) out.emplace_back(mb.embed.images[g], o);
    return;
  }
  throw MathError("abelian_basis: no complement found (group not abelian?)");
}

std::vector<Character> compute_hom_group(const Subgroup& u) {
  const Group& parent = *u.parent;
  const MaterializedSubgroup& mu = parent.materialize(u);
  const GroupPtr& um = mu.group;
  const QuotientGroup& ab = um->quotient(um->derived());
  const GroupPtr& a = ab.group;

  std::vector<std::pair<Elt, int>> basis;
  abelian_basis(a, basis);
  int k = static_cast<int>(basis.size());

  // Exponent tuple of every element of the abelianisation.
  std::vector<std::vector<int>> tuple_of(a->order());
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = basis[i].second;
  std::vector<int> t(k, 0);
  while (true) {
    Elt e = 0;
    for (int i = 0; i < k; ++i) e = a->mul(e, a->power(basis[i].first, t[i]));
    tuple_of[e] = t;
    int i = k - 1;
    while (i >= 0 && ++t[i] == radix[i]) t[i--] = 0;
    if (i < 0) break;
  }

  std::vector<Character> out;
  std::vector<int> cs(k, 0);
  while (true) {
    Character ch;
    ch.domain = u;
    ch.values.resize(u.elems.size());
    for (std::size_t pos = 0; pos < u.elems.size(); ++pos) {
      Elt img = ab.projection.images[static_cast<Elt>(pos)];
      QZ v;
      for (int i = 0; i < k; ++i)
        v = v + QZ(static_cast<std::int64_t>(cs[i]) * tuple_of[img][i], radix[i]);
      ch.values[pos] = v;
    }
    out.push_back(std::move(ch));
    int i = k - 1;
    while (i >= 0 && ++cs[i] == radix[i]) cs[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Character& x, const Character& y) {
    return x.values < y.values;
  });
  for (const Character& ch : out)
    if (!is_character(ch)) throw MathError("hom_group produced a non-character");
  return out;
}

}  // namespace

const std::vector<Character>& hom_group(const Subgroup& u) {
  auto& caches = u.parent->module_caches().hom_groups;
  auto it = caches.find(u.elems);
  if (it != caches.end()) return it->second;
  return caches.emplace(u.elems, compute_hom_group(u)).first->second;
}

Character char_product(const Character& a, const Character& b) {
  if (!(a.domain == b.domain)) throw MathError("char_product: domains differ");
  Character c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    c.values[i] = a.values[i] + b.values[i];
  return c;
}

Character char_inverse(const Character& a) {
  Character c = a;
  for (auto& v : c.values) v = -v;
  return c;
}

Character char_restrict(const Character& a, const Subgroup& v) {
  if (v.parent.get() != a.domain.parent.get() || !a.domain.contains(v))
    throw MathError("char_restrict: not a subgroup of the domain");
  Character c;
  c.domain = v;
  c.values.reserve(v.elems.size());
  for (Elt e : v.elems) c.values.push_back(a.value_at(e));
  return c;
}

Character char_inflate(const Character& bar, const GroupMap& pi) {
  if (!pi.surjective) throw MathError("char_inflate: map is not surjective");
  if (bar.domain.parent.get() != pi.dst.get())
    throw MathError("char_inflate: domain lives in the wrong group");
  std::vector<Elt> pre;
  for (Elt g = 0; g < pi.src->order(); ++g)
    if (bar.domain.contains(pi.images[g])) pre.push_back(g);
  Character c;
  c.domain = Subgroup{pi.src, std::move(pre)};
  c.values.reserve(c.domain.elems.size());
  for (Elt g : c.domain.elems) c.values.push_back(bar.value_at(pi.images[g]));
  return c;
}

Subgroup char_kernel(const Character& a) {
  std::vector<Elt> ker;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i].is_zero()) ker.push_back(a.domain.elems[i]);
  return Subgroup{a.domain.parent, std::move(ker)};
}

bool char_is_faithful(const Character& a) {
  return char_kernel(a).order() == 1;
}

bool char_is_invariant(const Character& a) {
  const Group& g = *a.domain.parent;
  if (!g.is_normal(a.domain)) return false;
  for (Elt x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < a.domain.elems.size(); ++i)
      if (!(a.value_at(g.conj(x, a.domain.elems[i])) == a.values[i]))
        return false;
  return true;
}

bool chars_agree_on(const Character& a, const Character& b,
                    const std::vector<Elt>& elems) {
  for (Elt e : elems)
    if (!(a.value_at(e) == b.value_at(e))) return false;
  return true;
}

Character char_conjugate(const Character& a, Elt g) {
  const Group& gr = *a.domain.parent;
  Subgroup d = gr.conjugate(a.domain, g);
  Character c;
  c.domain = d;
  c.values.reserve(d.elems.size());
  for (Elt y : d.elems) c.values.push_back(a.value_at(gr.conj(gr.inv(g), y)));
  return c;
}

Character char_transport(const Character& a, const GroupMap& f) {
  if (!f.is_bijective()) throw MathError("char_transport: map is not bijective");
  GroupMap finv = inverse(f);
  std::vector<Elt> dom;
  dom.reserve(a.domain.elems.size());
  for (Elt x : a.domain.elems) dom.push_back(f.images[x]);
  std::sort(dom.begin(), dom.end());
  Character c;
  c.domain = Subgroup{f.dst, std::move(dom)};
  c.values.reserve(c.domain.elems.size());
  for (Elt y : c.domain.elems) c.values.push_back(a.value_at(finv.images[y]));
  return c;
}

// --- pair posets ----------------------------------------------------------------

bool pair_tag_less(const PairTag& a, const PairTag& b) {
  if (a.K.order() != b.K.order()) return a.K.order() < b.K.order();
  if (a.K.elems != b.K.elems) return a.K.elems < b.K.elems;
  return a.kappa.values < b.kappa.values;
}

bool pair_leq(const PairTag& a, const PairTag& b) {
  if (!b.K.contains(a.K)) return false;
  for (std::size_t i = 0; i < a.K.elems.size(); ++i)
    if (!(b.kappa.value_at(a.K.elems[i]) == a.kappa.values[i])) return false;
  return true;
}

int PairPoset::index_of(const PairTag& t) const {
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (tags[i] == t) return static_cast<int>(i);
  return -1;
}

const PairPoset& pair_poset(const GroupPtr& g, PosetVariant variant) {
  auto& cache = g->module_caches().pair_posets;
  int key = static_cast<int>(variant);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PairPoset poset;
  Subgroup phi = g->frattini();
  for (const auto& k : g->normal_subgroups()) {
    if (variant != PosetVariant::All && !phi.contains(k)) continue;
    for (const Character& ch : hom_group(k)) {
      if (!char_is_invariant(ch)) continue;
      if (variant == PosetVariant::FaithfulFrattini && !char_is_faithful(ch))
        continue;
      poset.tags.push_back(PairTag{k, ch});
    }
  }
  std::sort(poset.tags.begin(), poset.tags.end(), pair_tag_less);
  std::size_t n = poset.tags.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      poset.leq[i][j] = pair_leq(poset.tags[i], poset.tags[j]);
  return cache.emplace(key, std::move(poset)).first->second;
}

std::vector<PairTag> out_orbit(const GroupPtr& g, const PairTag& tag) {
  std::vector<PairTag> orbit;
  for (const GroupMap& f : g->automorphisms()) {
    Character moved = char_transport(tag.kappa, f);
    PairTag t{moved.domain, moved};
    if (std::find(orbit.begin(), orbit.end(), t) == orbit.end())
      orbit.push_back(std::move(t));
  }
  std::sort(orbit.begin(), orbit.end(), pair_tag_less);
  return orbit;
}

}  // namespace fiburn
