#include "fiburn/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace fiburn {

// --- BisetSpace ------------------------------------------------------------------

SpacePtr BisetSpace::get(const GroupPtr& dst, const GroupPtr& src) {
  static std::map<std::pair<const Group*, const Group*>, SpacePtr> registry;
  auto key = std::make_pair(dst.get(), src.get());
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto sp = std::shared_ptr<BisetSpace>(new BisetSpace());
  sp->dst_ = dst;
  sp->src_ = src;
  sp->prod_ = direct_product(dst, src).group;
  registry.emplace(key, sp);
  return sp;
}

BasisLabel BisetSpace::encode(const FiberedPair& pair) const {
  if (pair.U.parent.get() != prod_.get())
    throw MathError("encode: pair lives in a foreign product");
  return BasisLabel{pair.U.elems, pair.upsilon.values};
}

FiberedPair BisetSpace::decode(const BasisLabel& label) const {
  Subgroup u{prod_, label.elems};
  return FiberedPair{u, Character{u, label.values}};
}

namespace {

BasisLabel conjugate_label(const Group& prod, const BasisLabel& l, Elt g) {
  std::vector<std::pair<Elt, QZ>> moved;
  moved.reserve(l.elems.size());
  for (std::size_t i = 0; i < l.elems.size(); ++i)
    moved.emplace_back(prod.conj(g, l.elems[i]), l.values[i]);
  std::sort(moved.begin(), moved.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  BasisLabel out;
  out.elems.reserve(moved.size());
  out.values.reserve(moved.size());
  for (auto& [e, v] : moved) {
    out.elems.push_back(e);
    out.values.push_back(v);
  }
  return out;
}

}  // namespace

const BasisLabel& BisetSpace::canonical(const FiberedPair& pair) const {
  BasisLabel start = encode(pair);
  auto hit = canon_cache_.find(start);
  if (hit != canon_cache_.end()) return hit->second;

  std::vector<Elt> gens = prod_->minimal_generators();
  std::set<BasisLabel> seen;
  seen.insert(start);
  std::vector<const BasisLabel*> queue{&*seen.begin()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elt g : gens) {
      auto [it, fresh] = seen.insert(conjugate_label(*prod_, *queue[i], g));
      if (fresh) queue.push_back(&*it);
    }
  }
  const BasisLabel& minimum = *seen.begin();
  const BasisLabel* result = nullptr;
  for (const BasisLabel& s : seen) {
    auto [it, _] = canon_cache_.emplace(s, minimum);
    if (s == start) result = &it->second;
  }
  return *result;
}

PairInvariants BisetSpace::invariants(const FiberedPair& fp) const {
  if (fp.U.parent.get() != prod_.get())
    throw MathError("invariants: pair lives in a foreign product");
  std::set<Elt> p1s, k1s, p2s, k2s;
  for (Elt e : fp.U.elems) {
    Elt a = left_of(e), b = right_of(e);
    p1s.insert(a);
    p2s.insert(b);
    if (b == 0) k1s.insert(a);
    if (a == 0) k2s.insert(b);
  }
  PairInvariants inv;
  inv.p1 = Subgroup{dst_, {p1s.begin(), p1s.end()}};
  inv.k1 = Subgroup{dst_, {k1s.begin(), k1s.end()}};
  inv.p2 = Subgroup{src_, {p2s.begin(), p2s.end()}};
  inv.k2 = Subgroup{src_, {k2s.begin(), k2s.end()}};
  inv.upsilon1.domain = inv.k1;
  for (Elt a : inv.k1.elems) inv.upsilon1.values.push_back(fp.upsilon.value_at(pair(a, 0)));
  inv.upsilon2.domain = inv.k2;
  for (Elt b : inv.k2.elems) inv.upsilon2.values.push_back(-fp.upsilon.value_at(pair(0, b)));
  inv.ker1 = char_kernel(inv.upsilon1);
  inv.ker2 = char_kernel(inv.upsilon2);
  return inv;
}

PairInvariants BisetSpace::invariants(const BasisLabel& label) const {
  return invariants(decode(label));
}

const std::vector<BasisLabel>& BisetSpace::basis() const {
  if (basis_) return *basis_;
  std::set<BasisLabel> set;
  for (const auto& [u, size] : prod_->subgroup_classes()) {
    (void)size;
    for (const Character& ch : hom_group(u))
      set.insert(canonical(FiberedPair{u, ch}));
  }
  basis_.emplace(set.begin(), set.end());
  return *basis_;
}

// --- AlgebraElement ----------------------------------------------------------------

AlgebraElement AlgebraElement::from_pair(const SpacePtr& space,
                                         const FiberedPair& p, const Rat& coeff) {
  AlgebraElement e(space);
  e.add_term(space->canonical(p), coeff);
  return e;
}

void AlgebraElement::add_term(const BasisLabel& label, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(label, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (space_.get() != other.space_.get())
    throw MathError("algebra addition: spaces differ");
  for (const auto& [l, c] : other.terms_) add_term(l, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  if (space_.get() != other.space_.get())
    throw MathError("algebra subtraction: spaces differ");
  for (const auto& [l, c] : other.terms_) add_term(l, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, c] : terms_) c *= scalar;
  return *this;
}

// --- star and Mackey ---------------------------------------------------------------

namespace {

struct PairFactors {
  GroupPtr left, right;
};

PairFactors factors_of(const FiberedPair& p) {
  const auto& info = p.U.parent->product_info();
  if (!info) throw MathError("fibered pair does not live in a registered product");
  return {info->left, info->right};
}

}  // namespace

bool star_defined(const FiberedPair& u, const FiberedPair& v) {
  PairFactors fu = factors_of(u), fv = factors_of(v);
  if (fu.right.get() != fv.left.get())
    throw MathError("star: middle groups differ");
  int nk = fv.right->order();
  // x in k2(U) iff (1,x) in U, encoded as x; x in k1(V) iff (x,1) in V,
  // encoded as x*nk.  Compare upsilon2(x) = -u(1,x) with omega1(x) = v(x,1).
  for (Elt x = 0; x < fu.right->order(); ++x) {
    if (!u.U.contains(x)) continue;
    if (!v.U.contains(x * nk)) continue;
    if (!(-u.upsilon.value_at(x) == v.upsilon.value_at(x * nk))) return false;
  }
  return true;
}

FiberedPair star(const FiberedPair& u, const FiberedPair& v) {
  PairFactors fu = factors_of(u), fv = factors_of(v);
  if (fu.right.get() != fv.left.get())
    throw MathError("star: middle groups differ");
  if (!star_defined(u, v))
    throw MathError("star: characters disagree on k2(U) n k1(V)");
  int nh = fu.right->order();
  int nk = fv.right->order();
  std::vector<std::vector<std::pair<Elt, QZ>>> buckets(nh);
  for (std::size_t i = 0; i < v.U.elems.size(); ++i) {
    Elt e = v.U.elems[i];
    buckets[e / nk].emplace_back(e % nk, v.upsilon.values[i]);
  }
  std::map<Elt, QZ> out;
  for (std::size_t i = 0; i < u.U.elems.size(); ++i) {
    Elt e = u.U.elems[i];
    Elt g = e / nh, h = e % nh;
    for (const auto& [k, val] : buckets[h]) {
      Elt r = g * nk + k;
      QZ total = u.upsilon.values[i] + val;
      auto [it, fresh] = out.emplace(r, total);
      if (!fresh) assert(it->second == total);
    }
  }
  const ProductGroup& pgk = direct_product(fu.left, fv.right);
  FiberedPair res;
  res.U.parent = pgk.group;
  res.U.elems.reserve(out.size());
  res.upsilon.values.reserve(out.size());
  for (auto& [e, val] : out) {
    res.U.elems.push_back(e);
    res.upsilon.values.push_back(val);
  }
  res.upsilon.domain = res.U;
  return res;
}

namespace {

// One Mackey decomposition of a product of transitive pairs: terms indexed by
// double cosets p2(U) \ H / p1(V) whose conjugated characters agree on the
// middle intersection.
std::vector<FiberedPair> mackey_terms(const BisetSpace& sx, const FiberedPair& x,
                                      const BisetSpace& sy, const FiberedPair& y) {
  const GroupPtr& h = sx.src();
  PairInvariants ix = sx.invariants(x);
  PairInvariants iy = sy.invariants(y);

  std::vector<char> seen(h->order(), 0);
  std::vector<Elt> reps;
  for (Elt t = 0; t < h->order(); ++t) {
    if (seen[t]) continue;
    reps.push_back(t);
    for (Elt a : ix.p2.elems)
      for (Elt b : iy.p1.elems) seen[h->mul(h->mul(a, t), b)] = 1;
  }

  int nk = sy.src()->order();
  std::vector<FiberedPair> out;
  for (Elt t : reps) {
    // ^(t,1) y: (hh, k) -> (t hh t^-1, k) with the same character values.
    std::vector<std::pair<Elt, QZ>> moved;
    moved.reserve(y.U.elems.size());
    for (std::size_t i = 0; i < y.U.elems.size(); ++i) {
      Elt e = y.U.elems[i];
      moved.emplace_back(h->conj(t, e / nk) * nk + e % nk, y.upsilon.values[i]);
    }
    std::sort(moved.begin(), moved.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FiberedPair w;
    w.U.parent = y.U.parent;
    for (auto& [e, v] : moved) {
      w.U.elems.push_back(e);
      w.upsilon.values.push_back(v);
    }
    w.upsilon.domain = w.U;
    if (star_defined(x, w)) out.push_back(star(x, w));
  }
  return out;
}

}  // namespace

AlgebraElement mackey_product(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.src().get() != y.dst().get())
    throw MathError("mackey_product: middle groups differ");
  SpacePtr space = BisetSpace::get(x.dst(), y.src());
  AlgebraElement out(space);
  auto& cache = space->product_cache();
  for (const auto& [lx, cx] : x.terms()) {
    for (const auto& [ly, cy] : y.terms()) {
      auto key = std::make_tuple(x.src().get(), lx, ly);
      auto it = cache.find(key);
      if (it == cache.end()) {
        std::map<BasisLabel, Rat> combined;
        for (const FiberedPair& t :
             mackey_terms(*x.space(), x.space()->decode(lx), *y.space(),
                          y.space()->decode(ly)))
          combined[space->canonical(t)] += 1;
        it = cache.emplace(std::move(key), std::move(combined)).first;
      }
      Rat c = cx * cy;
      for (const auto& [lbl, mult] : it->second) out.add_term(lbl, c * mult);
    }
  }
  return out;
}

AlgebraElement opposite(const AlgebraElement& x) {
  SpacePtr space = BisetSpace::get(x.src(), x.dst());
  int ndst = x.dst()->order();
  int nsrc = x.src()->order();
  AlgebraElement out(space);
  for (const auto& [l, c] : x.terms()) {
    std::vector<std::pair<Elt, QZ>> moved;
    moved.reserve(l.elems.size());
    for (std::size_t i = 0; i < l.elems.size(); ++i) {
      Elt a = l.elems[i] / nsrc, b = l.elems[i] % nsrc;
      moved.emplace_back(b * ndst + a, l.values[i]);
    }
    std::sort(moved.begin(), moved.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    FiberedPair fp;
    fp.U.parent = space->product();
    for (auto& [e, v] : moved) {
      fp.U.elems.push_back(e);
      fp.upsilon.values.push_back(v);
    }
    fp.upsilon.domain = fp.U;
    out.add_term(space->canonical(fp), c);
  }
  return out;
}

// --- elementary bisets ---------------------------------------------------------------

namespace {

AlgebraElement one_term(const SpacePtr& space, std::vector<Elt> elems) {
  std::sort(elems.begin(), elems.end());
  FiberedPair fp;
  fp.U = Subgroup{space->product(), std::move(elems)};
  fp.upsilon = trivial_character(fp.U);
  return AlgebraElement::from_pair(space, fp);
}

}  // namespace

AlgebraElement identity_element(const GroupPtr& g) {
  SpacePtr space = BisetSpace::get(g, g);
  std::vector<Elt> elems;
  elems.reserve(g->order());
  for (Elt x = 0; x < g->order(); ++x) elems.push_back(space->pair(x, x));
  return one_term(space, std::move(elems));
}

AlgebraElement ind(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  const MaterializedSubgroup& m = g->materialize(h);
  SpacePtr space = BisetSpace::get(g, m.group);
  std::vector<Elt> elems;
  for (Elt i = 0; i < m.group->order(); ++i)
    elems.push_back(space->pair(m.embed.images[i], i));
  return one_term(space, std::move(elems));
}

AlgebraElement res(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  const MaterializedSubgroup& m = g->materialize(h);
  SpacePtr space = BisetSpace::get(m.group, g);
  std::vector<Elt> elems;
  for (Elt i = 0; i < m.group->order(); ++i)
    elems.push_back(space->pair(i, m.embed.images[i]));
  return one_term(space, std::move(elems));
}

AlgebraElement inflate(const GroupPtr& g, const Subgroup& n) {
  const QuotientGroup& q = g->quotient(n);
  SpacePtr space = BisetSpace::get(g, q.group);
  std::vector<Elt> elems;
  for (Elt x = 0; x < g->order(); ++x)
    elems.push_back(space->pair(x, q.projection.images[x]));
  return one_term(space, std::move(elems));
}

AlgebraElement deflate(const GroupPtr& g, const Subgroup& n) {
  const QuotientGroup& q = g->quotient(n);
  SpacePtr space = BisetSpace::get(q.group, g);
  std::vector<Elt> elems;
  for (Elt x = 0; x < g->order(); ++x)
    elems.push_back(space->pair(q.projection.images[x], x));
  return one_term(space, std::move(elems));
}

AlgebraElement iso(const GroupMap& f) {
  if (!f.is_bijective() || !is_homomorphism(f))
    throw MathError("iso: map is not an isomorphism");
  SpacePtr space = BisetSpace::get(f.dst, f.src);
  std::vector<Elt> elems;
  for (Elt x = 0; x < f.src->order(); ++x)
    elems.push_back(space->pair(f.images[x], x));
  return one_term(space, std::move(elems));
}

AlgebraElement indinf(const Section& ts) {
  const SectionQuotient& sq = section_quotient(ts);
  SpacePtr space = BisetSpace::get(ts.T.parent, sq.group);
  std::vector<Elt> elems;
  for (Elt i = 0; i < sq.t_group->order(); ++i)
    elems.push_back(space->pair(sq.t_embed.images[i], sq.t_to_q.images[i]));
  return one_term(space, std::move(elems));
}

AlgebraElement defres(const Section& ts) {
  const SectionQuotient& sq = section_quotient(ts);
  SpacePtr space = BisetSpace::get(sq.group, ts.T.parent);
  std::vector<Elt> elems;
  for (Elt i = 0; i < sq.t_group->order(); ++i)
    elems.push_back(space->pair(sq.t_to_q.images[i], sq.t_embed.images[i]));
  return one_term(space, std::move(elems));
}

FiberedPair delta_pair(const GroupPtr& g, const PairTag& tag) {
  SpacePtr space = BisetSpace::get(g, g);
  FiberedPair fp;
  fp.U.parent = space->product();
  for (Elt a = 0; a < g->order(); ++a)
    for (Elt b = 0; b < g->order(); ++b) {
      Elt d = g->mul(g->inv(b), a);
      if (!tag.K.contains(d)) continue;
      fp.U.elems.push_back(space->pair(a, b));
      fp.upsilon.values.push_back(tag.kappa.value_at(d));
    }
  fp.upsilon.domain = fp.U;
  return fp;
}

AlgebraElement e_pair(const GroupPtr& g, const PairTag& tag) {
  if (tag.K.parent.get() != g.get()) throw MathError("e_pair: foreign tag");
  if (!g->is_normal(tag.K) || !char_is_invariant(tag.kappa))
    throw MathError("e_pair: tag is not G-invariant");
  SpacePtr space = BisetSpace::get(g, g);
  return AlgebraElement::from_pair(space, delta_pair(g, tag));
}

std::vector<Elt> subgroup_generators(const Subgroup& s) {
  const Group& g = *s.parent;
  std::vector<Elt> gens;
  Subgroup cur{s.parent, {0}};
  while (cur.order() < s.order()) {
    Elt best = -1;
    for (Elt x : s.elems) {
      if (cur.contains(x)) continue;
      if (best < 0 || g.elt_order(x) > g.elt_order(best)) best = x;
    }
    gens.push_back(best);
    std::vector<Elt> gg = gens;
    cur = g.closure(gg);
  }
  return gens;
}

}  // namespace fiburn
