#include "fiburn/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "module_caches.hpp"

namespace fiburn {

Caps& caps() {
  static Caps c;
  return c;
}

// --- Subgroup ----------------------------------------------------------------

bool Subgroup::contains(Elt e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elems.begin(), elems.end(), other.elems.begin(),
                       other.elems.end());
}

bool Subgroup::is_whole() const {
  return order() == parent->order();
}

int Subgroup::position_of(Elt e) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), e);
  if (it == elems.end() || *it != e) return -1;
  return static_cast<int>(it - elems.begin());
}

// --- GroupMap ----------------------------------------------------------------

GroupMap identity_map(const GroupPtr& g) {
  GroupMap f;
  f.src = f.dst = g;
  f.images.resize(g->order());
  std::iota(f.images.begin(), f.images.end(), 0);
  f.injective = f.surjective = true;
  return f;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (outer.src.get() != inner.dst.get())
    throw MathError("compose: middle groups differ");
  GroupMap f;
  f.src = inner.src;
  f.dst = outer.dst;
  f.images.resize(inner.images.size());
  for (std::size_t i = 0; i < inner.images.size(); ++i)
    f.images[i] = outer.images[inner.images[i]];
  std::vector<char> seen(f.dst->order(), 0);
  for (Elt e : f.images) seen[e] = 1;
  int im = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
  f.injective = im == f.src->order();
  f.surjective = im == f.dst->order();
  return f;
}

GroupMap inverse(const GroupMap& f) {
  if (!f.is_bijective()) throw MathError("inverse: map is not bijective");
  GroupMap g;
  g.src = f.dst;
  g.dst = f.src;
  g.images.resize(f.images.size());
  for (std::size_t i = 0; i < f.images.size(); ++i)
    g.images[f.images[i]] = static_cast<Elt>(i);
  g.injective = g.surjective = true;
  return g;
}

bool is_homomorphism(const GroupMap& f) {
  const Group& s = *f.src;
  const Group& d = *f.dst;
  if (static_cast<int>(f.images.size()) != s.order()) return false;
  if (f.images[0] != 0) return false;
  for (Elt a = 0; a < s.order(); ++a)
    for (Elt b = 0; b < s.order(); ++b)
      if (f.images[s.mul(a, b)] != d.mul(f.images[a], f.images[b]))
        return false;
  return true;
}

// --- SubgroupLattice -----------------------------------------------------------

int SubgroupLattice::index_of(const std::vector<Elt>& elems) const {
  auto cmp = [](const std::vector<Elt>& a, const std::vector<Elt>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto it = std::lower_bound(subs.begin(), subs.end(), elems, cmp);
  if (it == subs.end() || *it != elems) return -1;
  return static_cast<int>(it - subs.begin());
}

// --- Group construction --------------------------------------------------------

namespace {

void validate_table(int n, const std::vector<std::uint16_t>& t) {
  if (n < 1) throw MathError("group order must be positive");
  if (static_cast<std::size_t>(n) * n != t.size())
    throw MathError("table size does not match order");
  for (std::uint16_t v : t)
    if (v >= n) throw MathError("table entry out of range");
  for (Elt i = 0; i < n; ++i) {
    if (t[i] != i || t[static_cast<std::size_t>(i) * n] != i)
      throw MathError("element 0 is not an identity");
  }
  std::vector<char> seen(n);
  for (Elt i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elt j = 0; j < n; ++j) seen[t[static_cast<std::size_t>(i) * n + j]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n)
      throw MathError("table row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (Elt j = 0; j < n; ++j) seen[t[static_cast<std::size_t>(j) * n + i]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n)
      throw MathError("table column is not a permutation");
  }
  auto mul = [&](Elt a, Elt b) { return t[static_cast<std::size_t>(a) * n + b]; };
  if (n <= 64) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        for (Elt c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw MathError("table is not associative");
  } else {
    std::uint64_t s = 0x243f6a8885a308d3ULL;  // fixed seed, sampled check
    auto next = [&s]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    for (int k = 0; k < (1 << 17); ++k) {
      Elt a = static_cast<Elt>(next() % n);
      Elt b = static_cast<Elt>(next() % n);
      Elt c = static_cast<Elt>(next() % n);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw MathError("table is not associative");
    }
  }
}

std::optional<int> derive_prime_hint(int n) {
  if (n <= 1) return std::nullopt;
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0) {
      int m = n;
      while (m % p == 0) m /= p;
      if (m == 1) return p;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

GroupPtr Group::make(int order, std::vector<std::uint16_t> table,
                     std::string name, std::optional<ProductInfo> product) {
  validate_table(order, table);
  auto g = std::shared_ptr<Group>(new Group());
  g->n_ = order;
  g->table_ = std::move(table);
  g->name_ = std::move(name);
  g->product_ = std::move(product);
  g->prime_hint_ = derive_prime_hint(order);
  g->inv_.resize(order);
  for (Elt a = 0; a < order; ++a)
    for (Elt b = 0; b < order; ++b)
      if (g->mul(a, b) == 0) g->inv_[a] = b;
  g->elt_order_.resize(order);
  for (Elt a = 0; a < order; ++a) {
    int k = 1;
    Elt x = a;
    while (x != 0) {
      x = g->mul(x, a);
      ++k;
    }
    g->elt_order_[a] = k;
  }
  g->caches_ = std::make_unique<detail::ModuleCaches>();
  return g;
}

Group::~Group() = default;

Elt Group::power(Elt a, long k) const {
  int o = elt_order(a);
  k %= o;
  if (k < 0) k += o;
  Elt r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int Group::exponent() const {
  auto& c = module_caches();
  if (!c.exponent) {
    long e = 1;
    for (Elt a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(elt_order(a)));
    c.exponent = static_cast<int>(e);
  }
  return *c.exponent;
}

bool Group::is_abelian() const {
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_cyclic() const {
  for (Elt a = 0; a < n_; ++a)
    if (elt_order(a) == n_) return true;
  return false;
}

// --- subgroup helpers ----------------------------------------------------------

Subgroup Group::whole() const {
  std::vector<Elt> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{self(), std::move(all)};
}

Subgroup Group::trivial_subgroup() const { return Subgroup{self(), {0}}; }

Subgroup Group::closure(const std::vector<Elt>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<Elt> members;
  std::vector<Elt> work;
  auto add = [&](Elt e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  add(0);
  for (Elt g : gens) add(g);
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      add(mul(x, members[i]));
      add(mul(members[i], x));
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{self(), std::move(members)};
}

Subgroup Group::subgroup(std::vector<Elt> elems) const {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup s{self(), std::move(elems)};
  if (s.elems.empty() || s.elems.front() != 0 || s.elems.back() >= n_)
    throw MathError("subgroup: bad element set");
  for (Elt a : s.elems)
    for (Elt b : s.elems)
      if (!s.contains(mul(a, b))) throw MathError("subgroup: not closed");
  return s;
}

Subgroup Group::conjugate(const Subgroup& s, Elt g) const {
  std::vector<Elt> out;
  out.reserve(s.elems.size());
  for (Elt x : s.elems) out.push_back(conj(g, x));
  std::sort(out.begin(), out.end());
  return Subgroup{self(), std::move(out)};
}

Subgroup Group::intersect(const Subgroup& a, const Subgroup& b) const {
  std::vector<Elt> out;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(out));
  return Subgroup{self(), std::move(out)};
}

Subgroup Group::join(const Subgroup& a, const Subgroup& b) const {
  std::vector<Elt> gens = a.elems;
  gens.insert(gens.end(), b.elems.begin(), b.elems.end());
  return closure(gens);
}

bool Group::normalizes(const Subgroup& s, Elt g) const {
  for (Elt x : s.elems)
    if (!s.contains(conj(g, x))) return false;
  return true;
}

bool Group::is_normal(const Subgroup& s) const {
  for (Elt g = 0; g < n_; ++g)
    if (!normalizes(s, g)) return false;
  return true;
}

Subgroup Group::normalizer(const Subgroup& s) const {
  std::vector<Elt> out;
  for (Elt g = 0; g < n_; ++g)
    if (normalizes(s, g)) out.push_back(g);
  return Subgroup{self(), std::move(out)};
}

Subgroup Group::center() const {
  auto& c = module_caches();
  if (!c.center) {
    std::vector<Elt> out;
    for (Elt z = 0; z < n_; ++z) {
      bool central = true;
      for (Elt g = 0; g < n_ && central; ++g)
        if (mul(z, g) != mul(g, z)) central = false;
      if (central) out.push_back(z);
    }
    c.center = Subgroup{self(), std::move(out)};
  }
  return *c.center;
}

Subgroup Group::derived() const {
  auto& c = module_caches();
  if (!c.derived) {
    std::vector<Elt> comms;
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b)
        comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
    c.derived = closure(comms);
  }
  return *c.derived;
}

Subgroup Group::omega1_center() const {
  if (!prime_hint_)
    throw MathError("omega1_center: group is not a p-group (no prime hint)");
  int p = *prime_hint_;
  Subgroup z = center();
  std::vector<Elt> out;
  for (Elt e : z.elems)
    if (power(e, p) == 0) out.push_back(e);
  return Subgroup{self(), std::move(out)};
}

// --- derived groups --------------------------------------------------------------

const MaterializedSubgroup& Group::materialize(const Subgroup& s) const {
  if (s.parent.get() != this) throw MathError("materialize: foreign subgroup");
  auto& c = module_caches();
  auto it = c.materialized.find(s.elems);
  if (it != c.materialized.end()) return it->second;

  if (s.order() == n_) {
    // The whole subgroup materialises to the group itself, keeping algebra
    // spaces over "G as a subgroup of G" identical to those over G.
    MaterializedSubgroup ms{self(), identity_map(self())};
    return c.materialized.emplace(s.elems, std::move(ms)).first->second;
  }

  int m = s.order();
  std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int pos = s.position_of(mul(s.elems[i], s.elems[j]));
      if (pos < 0) throw MathError("materialize: set is not closed");
      table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(pos);
    }
  std::ostringstream nm;
  nm << "sub" << m << "(" << name_ << ")";
  MaterializedSubgroup ms;
  ms.group = Group::make(m, std::move(table), nm.str());
  ms.embed.src = ms.group;
  ms.embed.dst = self();
  ms.embed.images = s.elems;
  ms.embed.injective = true;
  ms.embed.surjective = (m == n_);
  return c.materialized.emplace(s.elems, std::move(ms)).first->second;
}

const QuotientGroup& Group::quotient(const Subgroup& nsub) const {
  if (nsub.parent.get() != this) throw MathError("quotient: foreign subgroup");
  auto& c = module_caches();
  auto it = c.quotients.find(nsub.elems);
  if (it != c.quotients.end()) return it->second;
  if (!is_normal(nsub)) throw MathError("quotient: subgroup is not normal");

  if (nsub.order() == 1) {
    QuotientGroup qg{self(), identity_map(self())};
    return c.quotients.emplace(nsub.elems, std::move(qg)).first->second;
  }

  std::vector<Elt> coset_min(n_, -1);
  std::vector<Elt> reps;
  for (Elt g = 0; g < n_; ++g) {
    if (coset_min[g] >= 0) continue;
    Elt mn = g;  // g is minimal in its coset: smaller elements already marked
    for (Elt x : nsub.elems) {
      Elt y = mul(g, x);
      coset_min[y] = mn;
    }
    reps.push_back(mn);
  }
  // reps is sorted ascending by construction; identity coset is reps[0] == 0.
  int q = static_cast<int>(reps.size());
  std::vector<int> id_of(n_);
  for (int i = 0; i < q; ++i) id_of[reps[i]] = i;
  std::vector<Elt> proj(n_);
  for (Elt g = 0; g < n_; ++g) proj[g] = id_of[coset_min[g]];
  std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] =
          static_cast<std::uint16_t>(proj[mul(reps[i], reps[j])]);
  std::ostringstream nm;
  nm << name_ << "/N" << nsub.order();
  QuotientGroup qg;
  qg.group = Group::make(q, std::move(table), nm.str());
  qg.projection.src = self();
  qg.projection.dst = qg.group;
  qg.projection.images = std::move(proj);
  qg.projection.injective = (q == n_);
  qg.projection.surjective = true;
  return c.quotients.emplace(nsub.elems, std::move(qg)).first->second;
}

GroupMap Group::conjugation_map(Elt g) const {
  GroupMap f;
  f.src = f.dst = self();
  f.images.resize(n_);
  for (Elt x = 0; x < n_; ++x) f.images[x] = conj(g, x);
  f.injective = f.surjective = true;
  return f;
}

// --- products --------------------------------------------------------------------

const ProductGroup& direct_product(const GroupPtr& g, const GroupPtr& h) {
  static std::map<std::pair<const Group*, const Group*>, ProductGroup> registry;
  auto key = std::make_pair(g.get(), h.get());
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;

  long order = static_cast<long>(g->order()) * h->order();
  if (order > caps().product)
    throw CapExceeded("direct product order exceeds the hard cap");
  int n = static_cast<int>(order);
  int nh = h->order();
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) {
      Elt p = g->mul(a / nh, b / nh);
      Elt q = h->mul(a % nh, b % nh);
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(p * nh + q);
    }
  ProductGroup pg;
  pg.group = Group::make(n, std::move(table), g->name() + " x " + h->name(),
                         ProductInfo{g, h});

  pg.embed_left.src = g;
  pg.embed_left.dst = pg.group;
  pg.embed_left.images.resize(g->order());
  for (Elt a = 0; a < g->order(); ++a) pg.embed_left.images[a] = a * nh;
  pg.embed_left.injective = true;
  pg.embed_left.surjective = (h->order() == 1);

  pg.embed_right.src = h;
  pg.embed_right.dst = pg.group;
  pg.embed_right.images.resize(nh);
  for (Elt b = 0; b < nh; ++b) pg.embed_right.images[b] = b;
  pg.embed_right.injective = true;
  pg.embed_right.surjective = (g->order() == 1);

  pg.proj_left.src = pg.group;
  pg.proj_left.dst = g;
  pg.proj_left.images.resize(n);
  pg.proj_right.src = pg.group;
  pg.proj_right.dst = h;
  pg.proj_right.images.resize(n);
  for (Elt e = 0; e < n; ++e) {
    pg.proj_left.images[e] = e / nh;
    pg.proj_right.images[e] = e % nh;
  }
  pg.proj_left.surjective = true;
  pg.proj_left.injective = (nh == 1);
  pg.proj_right.surjective = true;
  pg.proj_right.injective = (g->order() == 1);

  return registry.emplace(key, std::move(pg)).first->second;
}

GroupPtr central_product(const GroupPtr& g, Elt zg, const GroupPtr& h, Elt zh) {
  if (!g->center().contains(zg) || !h->center().contains(zh))
    throw MathError("central_product: elements are not central");
  if (g->elt_order(zg) != h->elt_order(zh) || g->elt_order(zg) <= 1)
    throw MathError("central_product: central elements must have equal order > 1");
  const ProductGroup& p = direct_product(g, h);
  Elt gen = pair_elt(h, zg, h->inv(zh));
  Subgroup d = p.group->closure({gen});
  const QuotientGroup& q = p.group->quotient(d);
  return q.group;
}

GoursatData goursat(const Subgroup& u) {
  const auto& pi = u.parent->product_info();
  if (!pi) throw MathError("goursat: parent is not a registered direct product");
  const GroupPtr& g = pi->left;
  const GroupPtr& h = pi->right;
  int nh = h->order();
  std::set<Elt> p1s, k1s, p2s, k2s;
  for (Elt e : u.elems) {
    Elt a = e / nh, b = e % nh;
    p1s.insert(a);
    p2s.insert(b);
    if (b == 0) k1s.insert(a);
    if (a == 0) k2s.insert(b);
  }
  GoursatData d;
  d.p1 = Subgroup{g, {p1s.begin(), p1s.end()}};
  d.k1 = Subgroup{g, {k1s.begin(), k1s.end()}};
  d.p2 = Subgroup{h, {p2s.begin(), p2s.end()}};
  d.k2 = Subgroup{h, {k2s.begin(), k2s.end()}};
  d.eta.resize(d.p2.elems.size());
  for (std::size_t i = 0; i < d.p2.elems.size(); ++i) {
    Elt b = d.p2.elems[i];
    Elt arep = -1;
    for (Elt e : u.elems) {
      if (e % nh == b) {
        Elt a = e / nh;
        // minimal representative of the coset a*k1
        for (Elt k : d.k1.elems) {
          Elt cand = g->mul(a, k);
          if (arep < 0 || cand < arep) arep = cand;
        }
        break;
      }
    }
    d.eta[i] = arep;
  }
  return d;
}

const SectionQuotient& section_quotient(const Section& ts) {
  const GroupPtr& parent = ts.T.parent;
  auto& cache = parent->module_caches().section_quotients;
  auto key = std::make_pair(ts.T.elems, ts.S.elems);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const MaterializedSubgroup& mt = parent->materialize(ts.T);
  std::vector<Elt> s_in_t;
  s_in_t.reserve(ts.S.elems.size());
  for (Elt e : ts.S.elems) {
    int pos = ts.T.position_of(e);
    if (pos < 0) throw MathError("section_quotient: S is not inside T");
    s_in_t.push_back(pos);
  }
  std::sort(s_in_t.begin(), s_in_t.end());
  const QuotientGroup& q = mt.group->quotient(Subgroup{mt.group, s_in_t});
  SectionQuotient sq{mt.group, mt.embed, q.group, q.projection};
  return cache.emplace(key, std::move(sq)).first->second;
}

const GroupPtr& trivial_group() {
  static GroupPtr t = Group::make(1, {0}, "1");
  return t;
}

}  // namespace fiburn
