#include "fiburn/atoric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fiburn/families.hpp"
#include "fiburn/functor_eval.hpp"
#include "fiburn/linalg.hpp"

namespace fiburn {

namespace {

void require_p_group(const GroupPtr& p, const char* who) {
  if (p->order() > 1 && !p->prime_hint())
    throw MathError(std::string(who) + ": not a p-group");
}

bool is_elementary_abelian(const GroupPtr& g, const Subgroup& s) {
  if (s.order() == 1) return false;  // nontrivial required by the caller
  int p = g->elt_order(s.elems[1]);
  for (Elt x : s.elems) {
    if (x == 0) continue;
    if (g->elt_order(x) != p) return false;
    for (Elt y : s.elems)
      if (g->mul(x, y) != g->mul(y, x)) return false;
  }
  return true;
}

}  // namespace

AtoricBreakdown is_atoric(const GroupPtr& p) {
  require_p_group(p, "is_atoric");
  AtoricBreakdown out;
  Subgroup phi = p->frattini();

  out.criterion_normal_meet = true;
  for (const auto& n : p->normal_subgroups()) {
    if (n.order() == 1) continue;
    if (p->intersect(n, phi).order() == 1) {
      out.criterion_normal_meet = false;
      break;
    }
  }

  if (p->order() == 1) {
    out.criterion_omega = true;
  } else {
    out.criterion_omega = phi.contains(p->omega1_center());
  }

  if (out.criterion_normal_meet != out.criterion_omega)
    throw MathError("is_atoric: criteria (2) and (3) disagree");

  if (p->order() <= 32) {
    bool decomposable = false;
    for (const auto& e : p->normal_subgroups()) {
      if (e.order() == 1 || !is_elementary_abelian(p, e)) continue;
      for (const auto& q : p->normal_subgroups()) {
        if (static_cast<long>(e.order()) * q.order() != p->order()) continue;
        if (p->intersect(e, q).order() != 1) continue;
        decomposable = true;
        break;
      }
      if (decomposable) break;
    }
    out.criterion_no_factor = !decomposable;
    if (*out.criterion_no_factor != out.criterion_omega)
      throw MathError("is_atoric: direct-factor criterion disagrees");
  }

  out.atoric = out.criterion_omega;
  return out;
}

AtoricPart atoric_part(const GroupPtr& p) {
  require_p_group(p, "atoric_part");
  Subgroup phi = p->frattini();
  std::vector<Subgroup> admissible;
  for (const auto& n : p->normal_subgroups())
    if (p->intersect(n, phi).order() == 1) admissible.push_back(n);
  // maximal by inclusion among the admissible kernels
  std::vector<Subgroup> maximal;
  for (const auto& n : admissible) {
    bool is_max = true;
    for (const auto& m : admissible)
      if (m.order() > n.order() && m.contains(n)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(n);
  }
  // deterministic choice: smallest element list (normal_subgroups is sorted,
  // so the first maximal entry is the lexicographic choice)
  const Subgroup& chosen = maximal.front();
  const QuotientGroup& q = p->quotient(chosen);
  AtoricPart out{q.group, chosen};
  if (!is_atoric(out.part).atoric)
    throw MathError("atoric_part: quotient is not atoric");
  for (const auto& other : maximal) {
    const QuotientGroup& qo = p->quotient(other);
    if (!is_isomorphic(q.group, qo.group))
      throw MathError("atoric_part: maximal kernels give non-isomorphic quotients");
  }
  return out;
}

bool is_subquotient(const GroupPtr& m, const GroupPtr& p) {
  if (m->order() > p->order()) return false;
  for (const auto& t : p->subgroup_classes()) {
    if (t.first.order() < m->order()) continue;
    const MaterializedSubgroup& mt = p->materialize(t.first);
    for (const auto& s : mt.group->normal_subgroups()) {
      if (t.first.order() / s.order() != m->order()) continue;
      const QuotientGroup& q = mt.group->quotient(s);
      if (is_isomorphic(q.group, m)) return true;
    }
  }
  return false;
}

namespace {

void require_atoric(const GroupPtr& m, const char* who) {
  if (!is_atoric(m).atoric)
    throw MathError(std::string(who) + ": group is not atoric");
}

// (T/S) / K for the orbit representative tag of an epsilon index.
GroupPtr index_tk_quotient(const EpsilonIndex& idx) {
  return idx.quot->quotient(idx.orbit.front().K).group;
}

}  // namespace

AlgebraElement c_m(const GroupPtr& p, const GroupPtr& m) {
  require_p_group(p, "c_m");
  require_atoric(m, "c_m");
  AlgebraElement out(BisetSpace::get(p, p));
  for (const EpsilonIndex& idx : epsilon_indices(p)) {
    GroupPtr tk = index_tk_quotient(idx);
    if (!is_isomorphic(atoric_part(tk).part, m)) continue;
    out += epsilon(p, idx);
  }
  return out;
}

AlgebraElement b_l(const GroupPtr& p, const GroupPtr& l) {
  require_p_group(p, "b_l");
  require_atoric(l, "b_l");
  AlgebraElement out(BisetSpace::get(p, p));
  for (const SectionClass& sc : p->minimal_sections()) {
    const SectionQuotient& sq = section_quotient(sc.section);
    if (!is_isomorphic(atoric_part(sq.group).part, l)) continue;
    AlgebraElement mid = phi_bouc(sq.group, sq.group->trivial_subgroup());
    int n = sc.joint_normalizer.order() / sc.section.T.order();
    out += (Rat(1) / Rat(n)) *
           mackey_product(mackey_product(indinf(sc.section), mid),
                          defres(sc.section));
  }
  return out;
}

AlgebraElement check_restriction_block(const GroupPtr& p, const GroupPtr& l,
                                       const GroupPtr& m) {
  return mackey_product(b_l(p, l), c_m(p, m));
}

// --- catalog and central resolutions ------------------------------------------------

namespace {

void abelian_partitions(int k, int max_part, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = std::min(k, max_part); a >= 1; --a) {
    cur.push_back(a);
    abelian_partitions(k - a, a, cur, out);
    cur.pop_back();
  }
}

std::string abelian_spec(int p, const std::vector<int>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << " x ";
    long q = 1;
    for (int j = 0; j < parts[i]; ++j) q *= p;
    os << "C" << q;
  }
  return os.str();
}

}  // namespace

Catalog default_catalog(int p, int max_order) {
  std::vector<std::string> specs{"C1"};
  std::vector<std::string> abelians;  // nontrivial, used also as product factors

  for (long n = p, k = 1; n <= max_order; n *= p, ++k) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    abelian_partitions(static_cast<int>(k), static_cast<int>(k), cur, parts);
    for (const auto& pt : parts) abelians.push_back(abelian_spec(p, pt));
  }
  specs.insert(specs.end(), abelians.begin(), abelians.end());

  std::vector<std::string> nonabelian;
  if (p == 2) {
    for (long n = 8; n <= max_order; n *= 2) {
      nonabelian.push_back("D" + std::to_string(n));
      if (n == 8 || n == 16) nonabelian.push_back("Q" + std::to_string(n));
      if (n >= 16) nonabelian.push_back("M" + std::to_string(n));
    }
    if (max_order >= 16) nonabelian.push_back("cp(D8@center-involution, C4@2)");
    if (max_order >= 32) {
      nonabelian.push_back("X(2,2,+)");
      nonabelian.push_back("X(2,2,-)");
      nonabelian.push_back("cp(D8@center-involution, C8@4)");
    }
  } else {
    long cube = static_cast<long>(p) * p * p;
    for (long n = cube; n <= max_order; n *= p)
      nonabelian.push_back("M" + std::to_string(n));
    if (cube <= max_order) {
      nonabelian.push_back("X(" + std::to_string(p) + ",1,+)");
      nonabelian.push_back("X(" + std::to_string(p) + ",1,-)");
    }
    if (cube * p <= max_order)
      // central product of the Heisenberg group with C_{p^2} over the centre
      nonabelian.push_back("cp(X(" + std::to_string(p) + ",1,+)@1, C" +
                           std::to_string(static_cast<long>(p) * p) + "@" +
                           std::to_string(p) + ")");
  }
  specs.insert(specs.end(), nonabelian.begin(), nonabelian.end());

  // nonabelian bases times abelian factors
  for (const auto& base : nonabelian)
    for (const auto& ab : abelians) specs.push_back(base + " x " + ab);

  Catalog out;
  std::set<std::string> seen;
  for (const auto& s : specs) {
    if (!seen.insert(s).second) continue;
    GroupPtr g;
    try {
      g = build_group(s);
    } catch (const MathError&) {
      continue;  // family undefined at this order (e.g. M8 vs D8 overlap)
    }
    if (g->order() > max_order) continue;
    out.emplace_back(s, g);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second->order() != b.second->order())
      return a.second->order() < b.second->order();
    return a.first < b.first;
  });
  return out;
}

ResolveResult central_resolution(const GroupPtr& m, const GroupPtr& l,
                                 const Catalog& catalog) {
  ResolveResult out;
  for (const auto& [spec, q] : catalog)
    out.catalog_bound = std::max(out.catalog_bound, q->order());
  for (const auto& [spec, q] : catalog) {
    if (q->order() < m->order() || q->order() < l->order()) continue;
    if (!is_atoric(q).atoric) continue;  // atoric Q suffices (reduction lemma)
    Subgroup phi = q->frattini();
    Subgroup z = q->center();
    for (const auto& k : q->normal_subgroups()) {
      if (!phi.contains(k)) continue;
      if (!z.contains(k)) continue;
      const MaterializedSubgroup& mk = q->materialize(k);
      if (k.order() > 1 && !mk.group->is_cyclic()) continue;
      GroupPtr qk_at = atoric_part(q->quotient(k).group).part;
      if (!is_isomorphic(qk_at, m)) continue;
      for (const auto& s : q->normal_subgroups()) {
        if (!phi.contains(s)) continue;
        if (q->intersect(k, s).order() != 1) continue;
        GroupPtr qs_at = atoric_part(q->quotient(s).group).part;
        if (!is_isomorphic(qs_at, l)) continue;
        out.witness = ResolutionWitness{spec, q, k, s};
        return out;
      }
    }
  }
  return out;
}

// --- special classes -----------------------------------------------------------------

SpecialClass special_class(const GroupPtr& p) {
  require_p_group(p, "special_class");
  SpecialClass out;
  out.center = p->center();
  out.derived = p->derived();
  out.frattini = p->frattini();
  bool abelian = p->is_abelian();
  int prime = p->order() > 1 ? *p->prime_hint() : 2;

  const MaterializedSubgroup& mz = p->materialize(out.center);
  bool center_cyclic = mz.group->is_cyclic();
  bool frattini_central = out.center.contains(out.frattini);

  if (!abelian) {
    const MaterializedSubgroup& mf = p->materialize(out.frattini);
    out.generalized_extraspecial =
        out.frattini.elems == out.derived.elems && frattini_central &&
        mf.group->is_cyclic() && out.frattini.order() == prime;
    out.quasi_extraspecial = center_cyclic && frattini_central;
  }

  if (p->is_cyclic())
    out.tag = SpecialTag::Cyclic;
  else if (out.quasi_extraspecial)
    out.tag = SpecialTag::QuasiExtraspecial;
  else if (out.generalized_extraspecial)
    out.tag = SpecialTag::GeneralizedExtraspecial;

  // secondary evidence: a constructed family member isomorphic to P
  if ((out.quasi_extraspecial || out.generalized_extraspecial) &&
      p->order() <= 32) {
    for (const auto& [spec, q] : default_catalog(prime, p->order())) {
      if (q->order() != p->order() || q->is_abelian()) continue;
      if (is_isomorphic(q, p)) {
        out.family_match = spec;
        break;
      }
    }
  }
  return out;
}

std::string special_tag_name(SpecialTag t) {
  switch (t) {
    case SpecialTag::Cyclic:
      return "cyclic";
    case SpecialTag::GeneralizedExtraspecial:
      return "generalized_extraspecial";
    case SpecialTag::QuasiExtraspecial:
      return "quasi_extraspecial";
    default:
      return "none";
  }
}

// --- vertex support -------------------------------------------------------------------

std::vector<GroupPtr> atoric_subquotients(const GroupPtr& p) {
  std::vector<GroupPtr> out;
  for (const auto& [t, size] : p->subgroup_classes()) {
    (void)size;
    const MaterializedSubgroup& mt = p->materialize(t);
    for (const auto& s : mt.group->normal_subgroups()) {
      GroupPtr q = mt.group->quotient(s).group;
      if (!is_atoric(q).atoric) continue;
      bool known = false;
      for (const auto& seen : out)
        if (is_isomorphic(seen, q)) {
          known = true;
          break;
        }
      if (!known) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupPtr& a, const GroupPtr& b) {
    return a->order() < b->order();
  });
  return out;
}

std::vector<VertexSupportEntry> vertex_support(const GroupPtr& p) {
  const std::vector<BasisLabel>& basis = module_basis(p);
  std::vector<VertexSupportEntry> out;
  for (const GroupPtr& m : atoric_subquotients(p)) {
    AlgebraElement cm = c_m(p, m);
    RowSpace image(static_cast<int>(basis.size()));
    std::vector<Rat> coords;
    int dim = 0;
    for (const BasisLabel& b : basis) {
      ModuleVector w = act(cm, module_unit(p, b));
      if (w.is_zero()) continue;
      coords.assign(basis.size(), Rat(0));
      for (const auto& [lbl, c] : w.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), lbl);
        coords[static_cast<std::size_t>(it - basis.begin())] = c;
      }
      if (image.add(coords)) ++dim;
    }
    out.push_back(VertexSupportEntry{m, dim});
  }
  return out;
}

}  // namespace fiburn
