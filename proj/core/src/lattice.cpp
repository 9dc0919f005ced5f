// Subgroup lattice enumeration and the structure derived from it: conjugacy
// classes of subgroups, maximal subgroups, Frattini subgroups, normal
// subgroups and minimal sections.

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "fiburn/cache.hpp"
#include "fiburn/group.hpp"
#include "module_caches.hpp"

namespace fiburn {

namespace {

bool sub_less(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// All subgroups by closure BFS: every subgroup arises from a smaller one by
// adjoining a single generator.
std::vector<std::vector<Elt>> enumerate_subgroups(const Group& g) {
  std::set<std::vector<Elt>> found;
  std::vector<std::vector<Elt>> queue;
  std::vector<Elt> triv{0};
  found.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    std::vector<Elt> s = std::move(queue.back());
    queue.pop_back();
    Subgroup sub{g.self(), s};
    for (Elt x = 1; x < g.order(); ++x) {
      if (sub.contains(x)) continue;
      std::vector<Elt> gens = s;
      gens.push_back(x);
      Subgroup bigger = g.closure(gens);
      if (found.insert(bigger.elems).second) queue.push_back(bigger.elems);
    }
  }
  std::vector<std::vector<Elt>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), sub_less);
  return out;
}

SubgroupLattice build_lattice(const Group& g) {
  SubgroupLattice lat;
  auto cached = cachefs::load_subgroups(g);
  if (cached) {
    lat.subs = std::move(*cached);
  } else {
    lat.subs = enumerate_subgroups(g);
    cachefs::store_subgroups(g, lat.subs);
  }

  int m = static_cast<int>(lat.subs.size());
  lat.class_of.assign(m, -1);
  lat.to_rep.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    if (lat.class_of[i] >= 0) continue;
    int cls = static_cast<int>(lat.class_rep.size());
    lat.class_rep.push_back(i);
    // Orbit BFS; the orbit minimum equals index i because subs are sorted and
    // scanned in order.
    std::vector<int> orbit{i};
    lat.class_of[i] = cls;
    lat.to_rep[i] = 0;
    Subgroup si{g.self(), lat.subs[i]};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      Subgroup cur{g.self(), lat.subs[orbit[k]]};
      Elt to_rep_cur = lat.to_rep[orbit[k]];  // conjugator: rep = c * cur * c^-1
      for (Elt x = 0; x < g.order(); ++x) {
        Subgroup img = g.conjugate(cur, x);
        int j = lat.index_of(img.elems);
        if (lat.class_of[j] < 0) {
          lat.class_of[j] = cls;
          // img = x cur x^-1 and rep = c cur c^-1, so rep = (c x^-1) img (c x^-1)^-1.
          lat.to_rep[j] = g.mul(to_rep_cur, g.inv(x));
          orbit.push_back(j);
        }
      }
    }
    lat.class_size.push_back(static_cast<int>(orbit.size()));
  }
  return lat;
}

}  // namespace

const SubgroupLattice& Group::lattice() const {
  auto& c = module_caches();
  std::call_once(c.lattice_once, [&] {
    if (n_ > caps().lattice) {
      c.lattice_error = "subgroup lattice cap exceeded (order " +
                        std::to_string(n_) + " > " +
                        std::to_string(caps().lattice) + ")";
      return;
    }
    c.lattice = build_lattice(*this);
  });
  if (c.lattice_error) throw CapExceeded(*c.lattice_error);
  return *c.lattice;
}

std::vector<Subgroup> Group::subgroups() const {
  const SubgroupLattice& lat = lattice();
  std::vector<Subgroup> out;
  out.reserve(lat.subs.size());
  for (const auto& s : lat.subs) out.push_back(Subgroup{self(), s});
  return out;
}

std::vector<std::pair<Subgroup, int>> Group::subgroup_classes() const {
  const SubgroupLattice& lat = lattice();
  std::vector<std::pair<Subgroup, int>> out;
  out.reserve(lat.class_rep.size());
  for (int c = 0; c < lat.num_classes(); ++c)
    out.emplace_back(Subgroup{self(), lat.subs[lat.class_rep[c]]},
                     lat.class_size[c]);
  return out;
}

std::pair<Subgroup, Elt> Group::subgroup_class_rep(const Subgroup& s) const {
  const SubgroupLattice& lat = lattice();
  int i = lat.index_of(s.elems);
  if (i < 0) throw MathError("subgroup_class_rep: unknown subgroup");
  int rep = lat.class_rep[lat.class_of[i]];
  return {Subgroup{self(), lat.subs[rep]}, lat.to_rep[i]};
}

std::vector<Subgroup> Group::normal_subgroups() const {
  auto& c = module_caches();
  if (!c.normal_subs) {
    std::vector<Subgroup> out;
    for (const auto& s : subgroups())
      if (is_normal(s)) out.push_back(s);
    c.normal_subs = std::move(out);
  }
  return *c.normal_subs;
}

std::vector<Subgroup> Group::maximal_subgroups() const {
  auto& c = module_caches();
  if (!c.maximal_subs) {
    const SubgroupLattice& lat = lattice();
    int m = static_cast<int>(lat.subs.size());
    std::vector<Subgroup> out;
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(lat.subs[i].size()) == n_) continue;
      bool maximal = true;
      for (int j = 0; j < m && maximal; ++j) {
        if (j == i) continue;
        if (static_cast<int>(lat.subs[j].size()) == n_) continue;
        if (lat.subs[j].size() <= lat.subs[i].size()) continue;
        if (std::includes(lat.subs[j].begin(), lat.subs[j].end(),
                          lat.subs[i].begin(), lat.subs[i].end()))
          maximal = false;
      }
      if (maximal) out.push_back(Subgroup{self(), lat.subs[i]});
    }
    c.maximal_subs = std::move(out);
  }
  return *c.maximal_subs;
}

Subgroup Group::frattini() const {
  auto& c = module_caches();
  if (!c.frattini) {
    std::vector<Subgroup> maxs = maximal_subgroups();
    Subgroup f = whole();
    for (const auto& m : maxs) f = intersect(f, m);
    c.frattini = std::move(f);
  }
  return *c.frattini;
}

Subgroup Group::frattini_of(const Subgroup& t) const {
  if (t.parent.get() != this) throw MathError("frattini_of: foreign subgroup");
  auto& c = module_caches();
  auto it = c.frattini_of.find(t.elems);
  if (it != c.frattini_of.end()) return it->second;
  // Maximal subgroups of t among the subgroups of the parent lattice that are
  // properly contained in t.
  const SubgroupLattice& lat = lattice();
  std::vector<const std::vector<Elt>*> inside;
  for (const auto& s : lat.subs)
    if (s.size() < t.elems.size() &&
        std::includes(t.elems.begin(), t.elems.end(), s.begin(), s.end()))
      inside.push_back(&s);
  Subgroup f = t;
  for (const auto* s : inside) {
    bool maximal = true;
    for (const auto* u : inside) {
      if (u == s || u->size() <= s->size()) continue;
      if (std::includes(u->begin(), u->end(), s->begin(), s->end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) f = intersect(f, Subgroup{self(), *s});
  }
  return c.frattini_of.emplace(t.elems, std::move(f)).first->second;
}

std::vector<SectionClass> Group::minimal_sections() const {
  auto& c = module_caches();
  if (!c.minimal_sections) {
    // Enumerate pairs S normal in T with S <= Phi(T), then classify under
    // simultaneous conjugation.
    std::vector<Section> all;
    for (const auto& t : subgroups()) {
      Subgroup phi = frattini_of(t);
      const MaterializedSubgroup& mt = materialize(t);
      for (const auto& s_in_t : mt.group->subgroups()) {
        std::vector<Elt> elems;
        elems.reserve(s_in_t.elems.size());
        for (Elt e : s_in_t.elems) elems.push_back(mt.embed.images[e]);
        std::sort(elems.begin(), elems.end());
        Subgroup s{self(), std::move(elems)};
        if (!phi.contains(s)) continue;
        bool nrm = true;
        for (Elt x : t.elems)
          if (!normalizes(s, x)) {
            nrm = false;
            break;
          }
        if (nrm) all.push_back(Section{t, s});
      }
    }
    auto section_key = [](const Section& sec) {
      return std::make_pair(sec.T.elems, sec.S.elems);
    };
    std::map<std::pair<std::vector<Elt>, std::vector<Elt>>, int> index;
    for (std::size_t i = 0; i < all.size(); ++i)
      index[section_key(all[i])] = static_cast<int>(i);
    std::vector<char> seen(all.size(), 0);
    std::vector<SectionClass> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (seen[i]) continue;
      int orbit = 0;
      for (Elt x = 0; x < n_; ++x) {
        Section img{conjugate(all[i].T, x), conjugate(all[i].S, x)};
        int j = index.at(section_key(img));
        if (!seen[j]) {
          seen[j] = 1;
          ++orbit;
        }
      }
      SectionClass sc;
      sc.section = all[i];
      sc.joint_normalizer =
          intersect(normalizer(all[i].T), normalizer(all[i].S));
      sc.orbit_size = orbit;
      out.push_back(std::move(sc));
    }
    c.minimal_sections = std::move(out);
  }
  return *c.minimal_sections;
}

}  // namespace fiburn
