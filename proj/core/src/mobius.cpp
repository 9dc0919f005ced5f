#include "fiburn/mobius.hpp"

#include <algorithm>
#include <map>

#include "module_caches.hpp"

namespace fiburn {

namespace {

bool elems_subset(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

long mobius_in(const GroupPtr& g, const std::vector<Elt>& k,
               const std::vector<Elt>& h,
               const std::vector<std::vector<Elt>>& poset,
               std::map<detail::SectionKey, long>& memo) {
  if (k == h) return 1;
  auto key = std::make_pair(k, h);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // mu(K, H) = - sum over K <= X < H of mu(K, X).
  long total = 0;
  for (const auto& x : poset) {
    if (x.size() >= h.size()) continue;
    if (!elems_subset(k, x) || !elems_subset(x, h)) continue;
    total += mobius_in(g, k, x, poset, memo);
  }
  long val = -total;
  memo.emplace(key, val);
  return val;
}

}  // namespace

long mobius_subgroup(const Subgroup& k, const Subgroup& h) {
  const GroupPtr& g = k.parent;
  if (g.get() != h.parent.get() || !h.contains(k))
    throw MathError("mobius_subgroup: K is not a subgroup of H");
  const SubgroupLattice& lat = g->lattice();
  return mobius_in(g, k.elems, h.elems, lat.subs,
                   g->module_caches().mobius_sub);
}

long mobius_normal(const Subgroup& k, const Subgroup& l) {
  const GroupPtr& g = k.parent;
  if (g.get() != l.parent.get() || !l.contains(k))
    throw MathError("mobius_normal: K is not contained in L");
  if (!g->is_normal(k) || !g->is_normal(l))
    throw MathError("mobius_normal: arguments must be normal");
  std::vector<std::vector<Elt>> poset;
  for (const auto& n : g->normal_subgroups()) poset.push_back(n.elems);
  return mobius_in(g, k.elems, l.elems, poset,
                   g->module_caches().mobius_norm);
}

Rat deflation_number(const GroupPtr& g, const Subgroup& n) {
  if (!g->is_normal(n)) throw MathError("deflation_number: N is not normal");
  Subgroup whole = g->whole();
  Rat total = 0;
  for (const auto& x : g->subgroups()) {
    // XN = G iff |X||N| / |X n N| = |G| (XN is a subgroup since N is normal).
    long xn = static_cast<long>(x.order()) * n.order() /
              g->intersect(x, n).order();
    if (xn != g->order()) continue;
    total += Rat(x.order()) * Rat(mobius_subgroup(x, whole));
  }
  return total / Rat(g->order());
}

std::vector<std::pair<Subgroup, Rat>> burnside_idempotent_coeffs(
    const GroupPtr& g, const Subgroup& h) {
  Rat norm = Rat(1) / Rat(g->normalizer(h).order());
  std::map<std::vector<Elt>, Rat> folded;
  for (const auto& k : g->subgroups()) {
    if (!h.contains(k)) continue;
    long mu = mobius_subgroup(k, h);
    if (mu == 0) continue;
    Subgroup rep = g->subgroup_class_rep(k).first;
    folded[rep.elems] += norm * Rat(k.order()) * Rat(mu);
  }
  std::vector<std::pair<Subgroup, Rat>> out;
  for (auto& [elems, coeff] : folded) {
    if (coeff == 0) continue;
    out.emplace_back(Subgroup{g, elems}, coeff);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.order() != b.first.order())
      return a.first.order() < b.first.order();
    return a.first.elems < b.first.elems;
  });
  return out;
}

}  // namespace fiburn
