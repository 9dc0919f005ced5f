// Generator-image backtracking for automorphism groups and isomorphism
// testing.  A partial assignment of images to the minimal generating sequence
// is closed under products on the fly; any multiplicativity or injectivity
// conflict prunes the branch.

#include <algorithm>
#include <map>
#include <mutex>

#include "fiburn/cache.hpp"
#include "fiburn/group.hpp"
#include "module_caches.hpp"

namespace fiburn {

std::vector<Elt> Group::minimal_generators() const {
  auto& c = module_caches();
  if (!c.min_gens) {
    std::vector<Elt> gens;
    Subgroup cur = trivial_subgroup();
    while (cur.order() < n_) {
      Elt best = -1;
      for (Elt x = 0; x < n_; ++x) {
        if (cur.contains(x)) continue;
        if (best < 0 || elt_order(x) > elt_order(best)) best = x;
      }
      gens.push_back(best);
      std::vector<Elt> g = gens;
      cur = closure(g);
    }
    c.min_gens = std::move(gens);
  }
  return *c.min_gens;
}

namespace {

// Extends the map given on the generators to the generated subgroup; returns
// false on any homomorphism or injectivity conflict.  On success `images`
// holds a full injective homomorphism src -> dst when the generators generate
// src.
bool close_partial_map(const Group& src, const Group& dst,
                       const std::vector<Elt>& gens,
                       const std::vector<Elt>& gen_images,
                       std::vector<Elt>& images) {
  images.assign(src.order(), -1);
  std::vector<Elt> used(dst.order(), -1);  // dst elt -> src preimage
  std::vector<Elt> known;
  auto assign = [&](Elt s, Elt d) {
    if (images[s] >= 0) return images[s] == d;
    if (used[d] >= 0) return false;
    images[s] = d;
    used[d] = s;
    known.push_back(s);
    return true;
  };
  if (!assign(0, 0)) return false;
  for (std::size_t i = 0; i < gen_images.size(); ++i)
    if (!assign(gens[i], gen_images[i])) return false;
  for (std::size_t i = 0; i < known.size(); ++i) {
    Elt a = known[i];
    for (std::size_t j = 0; j < known.size(); ++j) {
      Elt b = known[j];
      if (!assign(src.mul(a, b), dst.mul(images[a], images[b]))) return false;
      if (!assign(src.mul(b, a), dst.mul(images[b], images[a]))) return false;
    }
  }
  return true;
}

void search_embeddings(const Group& src, const Group& dst,
                       const std::vector<Elt>& gens, std::size_t depth,
                       std::vector<Elt>& gen_images,
                       std::vector<std::vector<Elt>>& out, bool first_only) {
  if (depth == gens.size()) {
    std::vector<Elt> images;
    if (close_partial_map(src, dst, gens, gen_images, images) &&
        std::find(images.begin(), images.end(), -1) == images.end())
      out.push_back(std::move(images));
    return;
  }
  Elt g = gens[depth];
  for (Elt h = 0; h < dst.order(); ++h) {
    if (dst.elt_order(h) != src.elt_order(g)) continue;
    gen_images[depth] = h;
    std::vector<Elt> images;
    if (!close_partial_map(src, dst, gens,
                           {gen_images.begin(),
                            gen_images.begin() + static_cast<long>(depth) + 1},
                           images))
      continue;
    search_embeddings(src, dst, gens, depth + 1, gen_images, out, first_only);
    if (first_only && !out.empty()) return;
  }
}

std::vector<int> order_histogram(const Group& g) {
  std::vector<int> h(g.order() + 1, 0);
  for (Elt x = 0; x < g.order(); ++x) ++h[g.elt_order(x)];
  return h;
}

GroupMap map_from_images(const GroupPtr& src, const GroupPtr& dst,
                         std::vector<Elt> images) {
  GroupMap f;
  f.src = src;
  f.dst = dst;
  f.images = std::move(images);
  std::vector<char> seen(dst->order(), 0);
  for (Elt e : f.images) seen[e] = 1;
  int im = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
  f.injective = im == src->order();
  f.surjective = im == dst->order();
  return f;
}

}  // namespace

const std::vector<GroupMap>& Group::automorphisms() const {
  auto& c = module_caches();
  std::call_once(c.aut_once, [&] {
    if (n_ > caps().automorphisms) {
      c.aut_error = "automorphism cap exceeded (order " + std::to_string(n_) +
                    " > " + std::to_string(caps().automorphisms) + ")";
      return;
    }
    std::vector<std::vector<Elt>> sols;
    auto cached = cachefs::load_automorphisms(*this);
    bool ok = false;
    if (cached) {
      ok = true;
      for (const auto& im : *cached) {
        GroupMap f = map_from_images(self(), self(), im);
        if (!f.is_bijective() || !is_homomorphism(f)) {
          ok = false;
          break;
        }
      }
      if (ok) sols = std::move(*cached);
    }
    if (!ok) {
      std::vector<Elt> gens = minimal_generators();
      std::vector<Elt> gen_images(gens.size(), -1);
      search_embeddings(*this, *this, gens, 0, gen_images, sols, false);
      std::sort(sols.begin(), sols.end());
      cachefs::store_automorphisms(*this, sols);
    }
    std::sort(sols.begin(), sols.end());
    for (auto& im : sols)
      c.automorphisms.push_back(map_from_images(self(), self(), std::move(im)));
    c.inner_flags.assign(c.automorphisms.size(), false);
    std::map<std::vector<Elt>, int> index;
    for (std::size_t i = 0; i < c.automorphisms.size(); ++i)
      index[c.automorphisms[i].images] = static_cast<int>(i);
    for (Elt x = 0; x < n_; ++x) {
      auto it = index.find(conjugation_map(x).images);
      if (it != index.end()) c.inner_flags[it->second] = true;
    }
  });
  if (c.aut_error) throw CapExceeded(*c.aut_error);
  return c.automorphisms;
}

const std::vector<bool>& Group::inner_automorphism_flags() const {
  automorphisms();
  return module_caches().inner_flags;
}

std::optional<GroupMap> is_isomorphic(const GroupPtr& g, const GroupPtr& h) {
  if (g->order() != h->order()) return std::nullopt;
  if (g.get() == h.get()) return identity_map(g);
  if (order_histogram(*g) != order_histogram(*h)) return std::nullopt;
  if (g->is_abelian() != h->is_abelian()) return std::nullopt;
  if (g->center().order() != h->center().order()) return std::nullopt;
  if (g->derived().order() != h->derived().order()) return std::nullopt;

  std::vector<Elt> gens = g->minimal_generators();
  std::vector<Elt> gen_images(gens.size(), -1);
  std::vector<std::vector<Elt>> sols;
  search_embeddings(*g, *h, gens, 0, gen_images, sols, true);
  if (sols.empty()) return std::nullopt;
  return map_from_images(g, h, std::move(sols.front()));
}

}  // namespace fiburn
