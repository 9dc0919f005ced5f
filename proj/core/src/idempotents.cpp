#include "fiburn/idempotents.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fiburn {

AlgebraElement e_tilde(const GroupPtr& g, const Subgroup& h) {
  if (h.parent.get() != g.get()) throw MathError("e_tilde: foreign subgroup");
  SpacePtr space = BisetSpace::get(g, g);
  Rat norm = Rat(1) / Rat(g->normalizer(h).order());
  AlgebraElement out(space);
  for (const auto& k : g->subgroups()) {
    if (!h.contains(k)) continue;
    long mu = mobius_subgroup(k, h);
    if (mu == 0) continue;
    std::vector<Elt> elems;
    elems.reserve(k.elems.size());
    for (Elt x : k.elems) elems.push_back(space->pair(x, x));
    FiberedPair fp;
    fp.U = Subgroup{space->product(), std::move(elems)};
    fp.upsilon = trivial_character(fp.U);
    out.add_term(space->canonical(fp), norm * Rat(k.order()) * Rat(mu));
  }
  return out;
}

AlgebraElement y_element(const GroupPtr& g, const FiberedPair& pair) {
  SpacePtr space = BisetSpace::get(g, g);
  PairInvariants inv = space->invariants(pair);
  if (inv.p1.order() != g->order() || inv.p2.order() != g->order())
    throw MathError("y_element: subgroup is not covering");
  AlgebraElement mid = AlgebraElement::from_pair(space, pair);
  AlgebraElement et = e_tilde(g, g->whole());
  return mackey_product(mackey_product(et, mid), et);
}

AlgebraElement e_tilde_pair(const GroupPtr& g, const PairTag& tag) {
  if (!g->frattini().contains(tag.K))
    throw MathError("e_tilde_pair: K is not contained in the Frattini subgroup");
  AlgebraElement et = e_tilde(g, g->whole());
  AlgebraElement e = e_pair(g, tag);
  AlgebraElement left = mackey_product(et, e);
  AlgebraElement right = mackey_product(e, et);
  if (!(left == right))
    throw MathError("e_tilde_pair: one-sided forms disagree");
  return left;
}

AlgebraElement f_pair(const GroupPtr& g, const PairTag& tag) {
  const PairPoset& poset = pair_poset(g, PosetVariant::All);
  int i = poset.index_of(tag);
  if (i < 0) throw MathError("f_pair: tag not in M_G^G");
  SpacePtr space = BisetSpace::get(g, g);
  AlgebraElement out(space);
  for (std::size_t j = 0; j < poset.tags.size(); ++j) {
    if (!poset.leq[i][j]) continue;
    long mu = mobius_normal(tag.K, poset.tags[j].K);
    if (mu == 0) continue;
    out += Rat(mu) * e_pair(g, poset.tags[j]);
  }
  return out;
}

namespace {

AlgebraElement phi_general(const GroupPtr& g, const PairTag& tag,
                           const PairPoset& poset, int i) {
  SpacePtr space = BisetSpace::get(g, g);
  AlgebraElement out(space);
  for (std::size_t j = 0; j < poset.tags.size(); ++j) {
    if (!poset.leq[i][j]) continue;
    long mu = mobius_normal(tag.K, poset.tags[j].K);
    if (mu == 0) continue;
    out += Rat(mu) * e_tilde_pair(g, poset.tags[j]);
  }
  return out;
}

// Rank-restricted fast form for p-groups at faithful tags: coefficients
// (-1)^r p^(r(r-1)/2) on pairs with L/K inside the largest elementary abelian
// central subgroup of P/K.
AlgebraElement phi_pgroup_fast(const GroupPtr& g, const PairTag& tag,
                               const PairPoset& poset, int i) {
  int p = *g->prime_hint();
  const QuotientGroup& q = g->quotient(tag.K);
  Subgroup omega = q.group->order() == 1 ? q.group->trivial_subgroup()
                                         : q.group->omega1_center();
  AlgebraElement inner(BisetSpace::get(g, g));
  for (std::size_t j = 0; j < poset.tags.size(); ++j) {
    if (!poset.leq[i][j]) continue;
    const Subgroup& l = poset.tags[j].K;
    // image of L in P/K must lie in Omega_1 Z(P/K)
    bool inside = true;
    for (Elt x : l.elems)
      if (!omega.contains(q.projection.images[x])) {
        inside = false;
        break;
      }
    if (!inside) continue;
    int quotient_order = l.order() / tag.K.order();
    int r = 0;
    while (quotient_order > 1) {
      quotient_order /= p;
      ++r;
    }
    Rat coeff = (r % 2 == 0 ? 1 : -1);
    for (int s = 0; s < r * (r - 1) / 2; ++s) coeff *= p;
    inner += coeff * e_pair(g, poset.tags[j]);
  }
  return mackey_product(e_tilde(g, g->whole()), inner);
}

}  // namespace

AlgebraElement phi(const GroupPtr& g, const PairTag& tag) {
  const PairPoset& poset = pair_poset(g, PosetVariant::Frattini);
  int i = poset.index_of(tag);
  if (i < 0) throw MathError("phi: tag not in the Frattini poset");
  AlgebraElement out = phi_general(g, tag, poset, i);
  if (g->prime_hint() && char_is_faithful(tag.kappa)) {
    AlgebraElement fast = phi_pgroup_fast(g, tag, poset, i);
    if (!(fast == out))
      throw MathError("phi: p-group fast form disagrees with the general form");
  }
  return out;
}

AlgebraElement phi_orbit(const GroupPtr& g, const std::vector<PairTag>& orbit) {
  if (orbit.empty()) throw MathError("phi_orbit: empty orbit");
  AlgebraElement out(BisetSpace::get(g, g));
  for (const PairTag& t : orbit) out += phi(g, t);
  return out;
}

AlgebraElement phi_bouc(const GroupPtr& g, const Subgroup& n) {
  Subgroup phi_g = g->frattini();
  if (!phi_g.contains(n) || !g->is_normal(n))
    throw MathError("phi_bouc: N must be normal and inside the Frattini subgroup");
  AlgebraElement out(BisetSpace::get(g, g));
  for (const auto& l : g->normal_subgroups()) {
    if (!l.contains(n) || !phi_g.contains(l)) continue;
    long mu = mobius_normal(n, l);
    if (mu == 0) continue;
    PairTag tag{l, trivial_character(l)};
    out += Rat(mu) * e_tilde_pair(g, tag);
  }
  return out;
}

// --- epsilon system ---------------------------------------------------------------

std::vector<EpsilonIndex> epsilon_indices(const GroupPtr& g) {
  std::vector<EpsilonIndex> out;
  for (const SectionClass& sc : g->minimal_sections()) {
    const SectionQuotient& sq = section_quotient(sc.section);
    const PairPoset& poset = pair_poset(sq.group, PosetVariant::FaithfulFrattini);
    std::set<int> used;
    for (std::size_t i = 0; i < poset.tags.size(); ++i) {
      if (used.count(static_cast<int>(i))) continue;
      // a one-element poset needs no automorphism machinery
      std::vector<PairTag> orbit =
          poset.tags.size() == 1 ? std::vector<PairTag>{poset.tags[i]}
                                 : out_orbit(sq.group, poset.tags[i]);
      for (const PairTag& t : orbit) {
        int j = poset.index_of(t);
        if (j >= 0) used.insert(j);
      }
      EpsilonIndex idx;
      idx.section = sc.section;
      idx.joint_normalizer = sc.joint_normalizer;
      idx.quot = sq.group;
      idx.orbit = std::move(orbit);
      idx.normalizer_index = sc.joint_normalizer.order() / sc.section.T.order();
      out.push_back(std::move(idx));
    }
  }
  return out;
}

UVPair uv(const GroupPtr& g, const EpsilonIndex& idx) {
  if (idx.section.T.parent.get() != g.get())
    throw MathError("uv: index belongs to a different group");
  AlgebraElement po = phi_orbit(idx.quot, idx.orbit);
  UVPair p{mackey_product(indinf(idx.section), po),
           mackey_product(po, defres(idx.section))};
  return p;
}

AlgebraElement epsilon(const GroupPtr& g, const EpsilonIndex& idx) {
  UVPair p = uv(g, idx);
  return (Rat(1) / Rat(idx.normalizer_index)) * mackey_product(p.u, p.v);
}

std::vector<AlgebraElement> normalizer_isos(const GroupPtr& g,
                                            const EpsilonIndex& idx) {
  const SectionQuotient& sq = section_quotient(idx.section);
  const Subgroup& t = idx.section.T;
  // coset representatives of T in N_G(T,S)
  std::vector<Elt> reps;
  std::vector<char> seen(g->order(), 0);
  for (Elt x : idx.joint_normalizer.elems) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (Elt tt : t.elems) seen[g->mul(x, tt)] = 1;
  }
  std::vector<AlgebraElement> out;
  for (Elt r : reps) {
    GroupMap cg;
    cg.src = cg.dst = idx.quot;
    cg.images.resize(idx.quot->order());
    std::vector<char> set(idx.quot->order(), 0);
    for (Elt i = 0; i < sq.t_group->order(); ++i) {
      Elt q = sq.t_to_q.images[i];
      if (set[q]) continue;
      set[q] = 1;
      Elt conj_parent = g->conj(r, sq.t_embed.images[i]);
      int pos = t.position_of(conj_parent);
      if (pos < 0) throw MathError("normalizer_isos: conjugation leaves T");
      cg.images[q] = sq.t_to_q.images[pos];
    }
    cg.injective = cg.surjective = true;
    out.push_back(iso(cg));
  }
  return out;
}

AlgebraElement normalizer_iso_sum(const GroupPtr& g, const EpsilonIndex& idx) {
  AlgebraElement out(BisetSpace::get(idx.quot, idx.quot));
  for (const AlgebraElement& e : normalizer_isos(g, idx)) out += e;
  return out;
}

// --- verification -----------------------------------------------------------------

bool VerifyReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const VerifyItem& i) { return i.pass; });
}

VerifyItem& VerifyReport::item(const std::string& identity) {
  for (auto& i : items)
    if (i.identity == identity) return i;
  items.push_back(VerifyItem{identity, true, ""});
  return items.back();
}

void VerifyReport::fail(const std::string& identity, const std::string& witness) {
  VerifyItem& i = item(identity);
  if (i.pass) {
    i.pass = false;
    i.witness = witness;
  }
}

namespace {

std::string tag_str(const PairTag& t) {
  std::ostringstream os;
  os << "(K order " << t.K.order() << ", [";
  for (std::size_t i = 0; i < t.K.elems.size(); ++i) {
    if (i) os << " ";
    os << t.K.elems[i];
  }
  os << "], kappa ";
  for (std::size_t i = 0; i < t.kappa.values.size(); ++i) {
    if (i) os << ",";
    os << qz_to_string(t.kappa.values[i]);
  }
  os << ")";
  return os.str();
}

std::string label_str(const BasisLabel& l) {
  std::ostringstream os;
  os << "[U order " << l.elems.size() << ": ";
  for (std::size_t i = 0; i < l.elems.size() && i < 12; ++i) os << l.elems[i] << " ";
  if (l.elems.size() > 12) os << "...";
  os << "]";
  return os.str();
}

}  // namespace

VerifyReport verify_phi_system(const GroupPtr& g) {
  VerifyReport rep;
  SpacePtr space = BisetSpace::get(g, g);
  AlgebraElement id = identity_element(g);
  AlgebraElement zero(space);

  // e_tilde system: orthogonal idempotents summing to the identity
  {
    std::vector<AlgebraElement> ets;
    AlgebraElement sum(space);
    for (const auto& [h, size] : g->subgroup_classes()) {
      (void)size;
      ets.push_back(e_tilde(g, h));
      sum += ets.back();
    }
    rep.item("etilde.sum");
    if (!(sum == id)) rep.fail("etilde.sum", "sum of e_tilde != identity");
    rep.item("etilde.orthogonal-idempotent");
    for (std::size_t i = 0; i < ets.size(); ++i)
      for (std::size_t j = 0; j < ets.size(); ++j) {
        AlgebraElement prod = mackey_product(ets[i], ets[j]);
        const AlgebraElement& want = i == j ? ets[i] : zero;
        if (!(prod == want)) {
          rep.fail("etilde.orthogonal-idempotent",
                   "e_tilde pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
  }

  const PairPoset& poset = pair_poset(g, PosetVariant::Frattini);
  // the p-group fast form is asserted inside phi(); report instead of throw
  rep.item("phi.pgroup-fast-form");
  std::vector<AlgebraElement> phis;
  phis.reserve(poset.tags.size());
  for (const PairTag& t : poset.tags) {
    try {
      phis.push_back(phi(g, t));
    } catch (const MathError& e) {
      rep.fail("phi.pgroup-fast-form", tag_str(t) + ": " + e.what());
      phis.push_back(AlgebraElement(space));
    }
  }
  AlgebraElement et_top = e_tilde(g, g->whole());

  // Lemma: e_tilde * e_(K,kappa) = e_(K,kappa) * e_tilde for K <= Phi(G) (the
  // equality of one-sided forms is asserted inside e_tilde_pair).
  rep.item("etilde.pair-commutes");
  for (const PairTag& t : poset.tags) {
    try {
      e_tilde_pair(g, t);
    } catch (const MathError&) {
      rep.fail("etilde.pair-commutes", tag_str(t));
    }
  }

  // phi system: orthogonality, idempotency, completeness
  rep.item("phi.orthogonal-idempotent");
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = 0; j < phis.size(); ++j) {
      AlgebraElement prod = mackey_product(phis[i], phis[j]);
      const AlgebraElement& want = i == j ? phis[i] : zero;
      if (!(prod == want))
        rep.fail("phi.orthogonal-idempotent",
                 tag_str(poset.tags[i]) + " * " + tag_str(poset.tags[j]));
    }
  rep.item("phi.sum");
  {
    AlgebraElement sum(space);
    for (const auto& p : phis) sum += p;
    if (!(sum == et_top)) rep.fail("phi.sum", "sum of phi != e_tilde_G");
  }

  // Inf/Def commutation lemma sweep over all normal M and all tags of M_G^G.
  rep.item("lemma.infdef");
  {
    const PairPoset& all = pair_poset(g, PosetVariant::All);
    for (const auto& m : g->normal_subgroups()) {
      const QuotientGroup& q = g->quotient(m);
      AlgebraElement infm = inflate(g, m);
      AlgebraElement defm = deflate(g, m);
      for (const PairTag& t : all.tags) {
        Subgroup meet = g->intersect(t.K, m);
        Subgroup ker = char_kernel(t.kappa);
        AlgebraElement left_a = mackey_product(e_pair(g, t), infm);
        AlgebraElement left_b = mackey_product(defm, e_pair(g, t));
        if (!ker.contains(meet)) {
          if (!left_a.is_zero() || !left_b.is_zero())
            rep.fail("lemma.infdef", "nonvanishing at " + tag_str(t));
          continue;
        }
        // canonical image of lambda on LM/M and its pullback to LM
        Subgroup lm = g->join(t.K, m);
        std::vector<Elt> lm_img;
        for (Elt x : lm.elems) lm_img.push_back(q.projection.images[x]);
        std::sort(lm_img.begin(), lm_img.end());
        lm_img.erase(std::unique(lm_img.begin(), lm_img.end()), lm_img.end());
        Subgroup lbar{q.group, lm_img};
        Character lambda_bar;
        lambda_bar.domain = lbar;
        lambda_bar.values.resize(lbar.elems.size());
        for (Elt x : t.K.elems) {
          int pos = lbar.position_of(q.projection.images[x]);
          lambda_bar.values[pos] = t.kappa.value_at(x);
        }
        PairTag tbar{lbar, lambda_bar};
        AlgebraElement e_bar = e_pair(q.group, tbar);
        if (!(left_a == mackey_product(infm, e_bar)))
          rep.fail("lemma.infdef", "(a) at " + tag_str(t));
        if (!(left_b == mackey_product(e_bar, defm)))
          rep.fail("lemma.infdef", "(b) at " + tag_str(t));
        // (c): Inf e_bar Def = e_(LM, lambda')
        Character lambda_prime = char_inflate(lambda_bar, q.projection);
        PairTag tprime{lambda_prime.domain, lambda_prime};
        if (!(mackey_product(mackey_product(infm, e_bar), defm) ==
              e_pair(g, tprime)))
          rep.fail("lemma.infdef", "(c) at " + tag_str(t));
        // (d): e_(L,lambda) = Inf e_(L~,lambda~) Def through G/ker(lambda)
        const QuotientGroup& qk = g->quotient(ker);
        std::vector<Elt> ltil;
        for (Elt x : t.K.elems) ltil.push_back(qk.projection.images[x]);
        std::sort(ltil.begin(), ltil.end());
        ltil.erase(std::unique(ltil.begin(), ltil.end()), ltil.end());
        Subgroup ltil_sub{qk.group, ltil};
        Character lam_til;
        lam_til.domain = ltil_sub;
        lam_til.values.resize(ltil_sub.elems.size());
        for (Elt x : t.K.elems) {
          int pos = ltil_sub.position_of(qk.projection.images[x]);
          lam_til.values[pos] = t.kappa.value_at(x);
        }
        AlgebraElement via = mackey_product(
            mackey_product(inflate(g, ker), e_pair(qk.group, PairTag{ltil_sub, lam_til})),
            deflate(g, ker));
        if (!(e_pair(g, t) == via)) rep.fail("lemma.infdef", "(d) at " + tag_str(t));
      }
    }
  }

  // Inf phi Def = phi at the preimage tag, for N <= Phi(G).
  rep.item("phi.infdef");
  for (const auto& n : g->normal_subgroups()) {
    if (!g->frattini().contains(n)) continue;
    const QuotientGroup& q = g->quotient(n);
    const PairPoset& hp = pair_poset(q.group, PosetVariant::Frattini);
    for (const PairTag& t : hp.tags) {
      Character pulled = char_inflate(t.kappa, q.projection);
      PairTag up{pulled.domain, pulled};
      AlgebraElement lhs = mackey_product(
          mackey_product(inflate(g, n), phi(q.group, t)), deflate(g, n));
      if (!(lhs == phi(g, up)))
        rep.fail("phi.infdef", "N order " + std::to_string(n.order()) + " tag " + tag_str(t));
    }
  }

  // Vanishing against restriction/induction to proper subgroups.
  rep.item("phi.res-ind-vanish");
  for (const auto& [h, size] : g->subgroup_classes()) {
    (void)size;
    if (h.order() == g->order()) continue;
    AlgebraElement rh = res(h);
    AlgebraElement ih = ind(h);
    for (std::size_t i = 0; i < phis.size(); ++i) {
      if (!mackey_product(rh, phis[i]).is_zero() ||
          !mackey_product(phis[i], ih).is_zero())
        rep.fail("phi.res-ind-vanish",
                 tag_str(poset.tags[i]) + " vs H of order " + std::to_string(h.order()));
    }
  }

  // Vanishing against deflation/inflation unless M n Phi <= K, M n K <= ker.
  rep.item("phi.def-inf-vanish");
  for (const auto& m : g->normal_subgroups()) {
    AlgebraElement dm = deflate(g, m);
    AlgebraElement im = inflate(g, m);
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const PairTag& t = poset.tags[i];
      bool allowed = t.K.contains(g->intersect(m, g->frattini())) &&
                     char_kernel(t.kappa).contains(g->intersect(m, t.K));
      if (allowed) continue;
      if (!mackey_product(dm, phis[i]).is_zero() ||
          !mackey_product(phis[i], im).is_zero())
        rep.fail("phi.def-inf-vanish",
                 tag_str(t) + " vs M of order " + std::to_string(m.order()));
    }
  }

  // Explicit Ind/Res expansion reproduces phi.  e^X is the pair idempotent
  // of X itself, so that Ind_X e^X Res_X = [Delta(X)] e_(L,lambda).
  rep.item("phi.explicit-expansion");
  {
    Subgroup phi_g = g->frattini();
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const PairTag& t = poset.tags[i];
      AlgebraElement acc(space);
      for (const auto& x : g->subgroups()) {
        if (!x.contains(phi_g)) continue;
        long mux = mobius_subgroup(x, g->whole());
        if (mux == 0) continue;
        AlgebraElement rx = res(x);
        AlgebraElement ix = ind(x);
        const MaterializedSubgroup& mx = g->materialize(x);
        for (std::size_t j = 0; j < poset.tags.size(); ++j) {
          if (!poset.leq[i][j]) continue;
          long mun = mobius_normal(t.K, poset.tags[j].K);
          if (mun == 0) continue;
          // the tag (L, lambda) inside X
          std::vector<Elt> lin;
          for (Elt e : poset.tags[j].K.elems) lin.push_back(x.position_of(e));
          std::sort(lin.begin(), lin.end());
          Subgroup lx{mx.group, lin};
          Character lam;
          lam.domain = lx;
          for (Elt e : lx.elems)
            lam.values.push_back(poset.tags[j].kappa.value_at(mx.embed.images[e]));
          AlgebraElement exj = e_pair(mx.group, PairTag{lx, lam});
          acc += (Rat(x.order()) * Rat(mux) * Rat(mun) / Rat(g->order())) *
                 mackey_product(mackey_product(ix, exj), rx);
        }
      }
      if (!(acc == phis[i])) rep.fail("phi.explicit-expansion", tag_str(t));
    }
  }

  // Iso equivariance under every automorphism.
  rep.item("phi.iso-equivariance");
  try {
    for (const GroupMap& f : g->automorphisms()) {
      AlgebraElement fi = iso(f);
      for (std::size_t i = 0; i < phis.size(); ++i) {
        const PairTag& t = poset.tags[i];
        Character moved = char_transport(t.kappa, f);
        AlgebraElement rhs =
            mackey_product(phi(g, PairTag{moved.domain, moved}), fi);
        if (!(mackey_product(fi, phis[i]) == rhs))
          rep.fail("phi.iso-equivariance", tag_str(t));
      }
    }
  } catch (const CapExceeded&) {
    // automorphism cap; skip silently, the identity is covered elsewhere
  }

  // Whole-basis vanishing sweep and the phi * Y product law, when the product
  // lattice fits the cap.
  if (static_cast<long>(g->order()) * g->order() <= caps().lattice) {
    rep.item("phi.basis-vanish");
    rep.item("phi.y-product");
    Subgroup phi_g = g->frattini();
    for (const BasisLabel& l : space->basis()) {
      PairInvariants inv = space->invariants(l);
      AlgebraElement unit(space);
      unit.add_term(l, 1);
      bool covering = inv.p1.order() == g->order() && inv.p2.order() == g->order();
      for (std::size_t i = 0; i < phis.size(); ++i) {
        const PairTag& t = poset.tags[i];
        Subgroup k1phi = g->intersect(inv.k1, phi_g);
        Subgroup k1k = g->intersect(inv.k1, t.K);
        bool cond_left = inv.p1.order() == g->order() &&
                         t.K.contains(k1phi) &&
                         chars_agree_on(t.kappa, inv.upsilon1, k1k.elems);
        AlgebraElement left = mackey_product(phis[i], unit);
        if (!cond_left && !left.is_zero())
          rep.fail("phi.basis-vanish", tag_str(t) + " * " + label_str(l));
        Subgroup k2phi = g->intersect(inv.k2, phi_g);
        Subgroup k2k = g->intersect(inv.k2, t.K);
        bool cond_right = inv.p2.order() == g->order() &&
                          t.K.contains(k2phi) &&
                          chars_agree_on(t.kappa, inv.upsilon2, k2k.elems);
        AlgebraElement right = mackey_product(unit, phis[i]);
        if (!cond_right && !right.is_zero())
          rep.fail("phi.basis-vanish", label_str(l) + " * " + tag_str(t));
        if (covering) {
          // phi * Y: when k1(U) n Phi = K and the characters agree on
          // K n k1(U), the product is nonzero with Y-coefficient 1 at
          // (U,upsilon); a nonzero product always satisfies the weaker
          // conditions of the vanishing theorem (checked above).
          AlgebraElement y = y_element(g, space->decode(l));
          AlgebraElement py = mackey_product(phis[i], y);
          bool cond = k1phi.elems == t.K.elems &&
                      chars_agree_on(t.kappa, inv.upsilon1, k1k.elems);
          if (cond) {
            auto it = py.terms().find(l);
            if (it == py.terms().end() || !(it->second == 1))
              rep.fail("phi.y-product",
                       "coefficient != 1 at " + tag_str(t) + " * Y" + label_str(l));
          }
          if (!py.is_zero() && !cond_left)
            rep.fail("phi.y-product",
                     "nonzero outside the vanishing bounds at " + tag_str(t) +
                         " * Y" + label_str(l));
        }
      }
    }
  }

  return rep;
}

VerifyReport verify_epsilon_system(const GroupPtr& g) {
  VerifyReport rep;
  SpacePtr space = BisetSpace::get(g, g);
  std::vector<EpsilonIndex> indices = epsilon_indices(g);
  std::vector<UVPair> uvs;
  std::vector<AlgebraElement> eps;
  for (const auto& idx : indices) {
    uvs.push_back(uv(g, idx));
    eps.push_back((Rat(1) / Rat(idx.normalizer_index)) *
                  mackey_product(uvs.back().u, uvs.back().v));
  }

  rep.item("eps.u-opposite-v");
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (!(uvs[i].u == opposite(uvs[i].v)))
      rep.fail("eps.u-opposite-v", "index " + std::to_string(i));

  rep.item("eps.vu-cross-vanish");
  rep.item("eps.vu-diagonal");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      AlgebraElement prod = mackey_product(uvs[i].v, uvs[j].u);
      if (i == j) {
        AlgebraElement want = mackey_product(normalizer_iso_sum(g, indices[i]),
                                             phi_orbit(indices[i].quot, indices[i].orbit));
        AlgebraElement want2 = mackey_product(
            phi_orbit(indices[i].quot, indices[i].orbit),
            normalizer_iso_sum(g, indices[i]));
        if (!(prod == want) || !(prod == want2))
          rep.fail("eps.vu-diagonal", "index " + std::to_string(i));
      } else if (!prod.is_zero()) {
        rep.fail("eps.vu-cross-vanish",
                 "indices " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }

  rep.item("eps.orthogonal-idempotent");
  AlgebraElement zero(space);
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = 0; j < eps.size(); ++j) {
      AlgebraElement prod = mackey_product(eps[i], eps[j]);
      const AlgebraElement& want = i == j ? eps[i] : zero;
      if (!(prod == want))
        rep.fail("eps.orthogonal-idempotent",
                 "indices " + std::to_string(i) + "," + std::to_string(j));
    }

  rep.item("eps.sum");
  {
    AlgebraElement sum(space);
    for (const auto& e : eps) sum += e;
    if (!(sum == identity_element(g))) rep.fail("eps.sum", "sum != identity");
  }

  return rep;
}

}  // namespace fiburn
