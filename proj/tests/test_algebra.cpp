#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fiburn/algebra.hpp"
#include "fiburn/families.hpp"
#include "fiburn/oracle.hpp"

using namespace fiburn;

namespace {

AlgebraElement unit(const SpacePtr& sp, const BasisLabel& l) {
  AlgebraElement e(sp);
  e.add_term(l, 1);
  return e;
}

// Recompose Ind o Inf o X o Def o Res from the invariants of a label and
// check it reproduces the label (the canonical decomposition of a transitive
// fibered biset).
bool canonical_decomposition_holds(const SpacePtr& sp, const BasisLabel& l) {
  FiberedPair fp = sp->decode(l);
  PairInvariants inv = sp->invariants(fp);
  const GroupPtr& g = sp->dst();
  const GroupPtr& h = sp->src();

  const MaterializedSubgroup& mp = g->materialize(inv.p1);
  const MaterializedSubgroup& mq = h->materialize(inv.p2);
  // positions of parent elements inside the materialised subgroups
  std::map<Elt, Elt> posp, posq;
  for (std::size_t i = 0; i < mp.embed.images.size(); ++i)
    posp[mp.embed.images[i]] = static_cast<Elt>(i);
  for (std::size_t i = 0; i < mq.embed.images.size(); ++i)
    posq[mq.embed.images[i]] = static_cast<Elt>(i);
  auto into = [](const std::map<Elt, Elt>& pos, const Subgroup& s,
                 const GroupPtr& target) {
    std::vector<Elt> out;
    for (Elt x : s.elems) out.push_back(pos.at(x));
    std::sort(out.begin(), out.end());
    return Subgroup{target, out};
  };
  Subgroup khat = into(posp, inv.ker1, mp.group);
  Subgroup lhat = into(posq, inv.ker2, mq.group);
  const QuotientGroup& qp = mp.group->quotient(khat);
  const QuotientGroup& qq = mq.group->quotient(lhat);

  // X: image of (U, upsilon) in (P/ker1) x (Q/ker2); well-defined because the
  // kernels annihilate upsilon
  SpacePtr mid = BisetSpace::get(qp.group, qq.group);
  int nh = h->order();
  std::map<Elt, QZ> xterms;
  for (std::size_t i = 0; i < l.elems.size(); ++i) {
    Elt a = l.elems[i] / nh, b = l.elems[i] % nh;
    Elt e = mid->pair(qp.projection.images[posp.at(a)],
                      qq.projection.images[posq.at(b)]);
    auto [it, fresh] = xterms.emplace(e, l.values[i]);
    if (!fresh && !(it->second == l.values[i])) return false;  // ill-defined
  }
  FiberedPair xpair;
  xpair.U.parent = mid->product();
  for (auto& [e, v] : xterms) {
    xpair.U.elems.push_back(e);
    xpair.upsilon.values.push_back(v);
  }
  xpair.upsilon.domain = xpair.U;

  AlgebraElement recomposed = mackey_product(
      ind(inv.p1),
      mackey_product(
          inflate(mp.group, khat),
          mackey_product(AlgebraElement::from_pair(mid, xpair),
                         mackey_product(deflate(mq.group, lhat), res(inv.p2)))));
  return recomposed == unit(sp, l);
}

}  // namespace

TEST_CASE("canonical labels") {
  GroupPtr d8 = build_group("D8");
  SpacePtr sp = BisetSpace::get(d8, d8);

  // the diagonal with trivial character is its own canonical form
  AlgebraElement idm = identity_element(d8);
  REQUIRE(idm.terms().size() == 1);
  const BasisLabel& l = idm.terms().begin()->first;
  for (std::size_t i = 0; i < l.elems.size(); ++i)
    CHECK(l.elems[i] == static_cast<Elt>(i) * d8->order() + static_cast<Elt>(i));

  // conjugate pairs share a label
  std::mt19937_64 rng(7);
  const auto& basis = sp->basis();
  for (int trial = 0; trial < 50; ++trial) {
    const BasisLabel& b = basis[rng() % basis.size()];
    FiberedPair fp = sp->decode(b);
    Elt g = static_cast<Elt>(rng() % sp->product()->order());
    Subgroup moved = sp->product()->conjugate(fp.U, g);
    Character ch = char_conjugate(fp.upsilon, g);
    CHECK(sp->canonical(FiberedPair{moved, ch}) == b);
  }

  // distinct characters on the same subgroup of an abelian product give
  // distinct labels
  GroupPtr c4 = build_group("C4");
  SpacePtr sc = BisetSpace::get(c4, c4);
  FiberedPair diag = sc->decode(identity_element(c4).terms().begin()->first);
  const auto& chars = hom_group(diag.U);
  CHECK(chars.size() == 4);
  std::set<BasisLabel> labels;
  for (const Character& ch : chars)
    labels.insert(sc->canonical(FiberedPair{diag.U, ch}));
  CHECK(labels.size() == 4);
}

TEST_CASE("pair invariants") {
  GroupPtr c4 = build_group("C4");
  SpacePtr sp = BisetSpace::get(c4, c4);

  // (Delta(G), 1)
  PairInvariants inv =
      sp->invariants(sp->decode(identity_element(c4).terms().begin()->first));
  CHECK(inv.p1.order() == 4);
  CHECK(inv.k1.order() == 1);
  CHECK(inv.p2.order() == 4);
  CHECK(inv.k2.order() == 1);

  // (Delta_K(G), phi_kappa) has invariants (G, K, kappa) on both sides
  const PairPoset& poset = pair_poset(c4, PosetVariant::All);
  for (const PairTag& t : poset.tags) {
    FiberedPair fp = delta_pair(c4, t);
    PairInvariants di = sp->invariants(fp);
    CHECK(di.p1.order() == 4);
    CHECK(di.p2.order() == 4);
    CHECK(di.k1.elems == t.K.elems);
    CHECK(di.k2.elems == t.K.elems);
    CHECK(di.upsilon1.values == t.kappa.values);
    CHECK(di.upsilon2.values == t.kappa.values);
    CHECK(di.ker1.elems == char_kernel(t.kappa).elems);
    CHECK(di.ker2.elems == char_kernel(t.kappa).elems);
  }

  // (G x 1, chi x 1)
  GroupPtr c2 = build_group("C2");
  SpacePtr sp2 = BisetSpace::get(c4, c2);
  std::vector<Elt> gx1;
  for (Elt x = 0; x < 4; ++x) gx1.push_back(sp2->pair(x, 0));
  Subgroup u{sp2->product(), gx1};
  Character chi = hom_group(c4->whole())[1];
  Character lifted;
  lifted.domain = u;
  for (Elt x = 0; x < 4; ++x) lifted.values.push_back(chi.value_at(x));
  PairInvariants gi = sp2->invariants(FiberedPair{u, lifted});
  CHECK(gi.p1.order() == 4);
  CHECK(gi.k1.order() == 4);
  CHECK(gi.upsilon1.values == chi.values);
  CHECK(gi.p2.order() == 1);
  CHECK(gi.k2.order() == 1);
}

TEST_CASE("star products") {
  GroupPtr d8 = build_group("D8");
  SpacePtr sp = BisetSpace::get(d8, d8);
  Subgroup z = d8->center();

  // Delta(X) * Delta_L(G) = Delta_L(X) for L <= Phi(G) <= X
  for (const auto& x : d8->subgroups()) {
    if (!x.contains(d8->frattini())) continue;
    std::vector<Elt> dx;
    for (Elt e : x.elems) dx.push_back(sp->pair(e, e));
    FiberedPair fx{Subgroup{sp->product(), dx}, {}};
    fx.upsilon = trivial_character(fx.U);
    FiberedPair dz = delta_pair(d8, PairTag{z, trivial_character(z)});
    FiberedPair prod = star(fx, dz);
    // expected: {(a, b) : a in X, b in aZ}
    std::vector<Elt> want;
    for (Elt a : x.elems)
      for (Elt zz : z.elems) want.push_back(sp->pair(a, d8->mul(a, zz)));
    std::sort(want.begin(), want.end());
    CHECK(prod.U.elems == want);
  }

  // U * Delta(H) = U when p2(U) <= H
  GroupPtr c4 = build_group("C4");
  SpacePtr s42 = BisetSpace::get(d8, c4);
  std::vector<Elt> small;
  for (Elt b = 0; b < 4; b += 2) small.push_back(s42->pair(0, b));
  FiberedPair up{Subgroup{s42->product(), small}, {}};
  up.upsilon = trivial_character(up.U);
  SpacePtr s44 = BisetSpace::get(c4, c4);
  FiberedPair dh = s44->decode(identity_element(c4).terms().begin()->first);
  CHECK(star(up, dh).U.elems == up.U.elems);

  // ill-defined star is rejected
  const PairPoset& p4 = pair_poset(c4, PosetVariant::Frattini);
  REQUIRE(p4.tags.size() == 3);
  FiberedPair e_triv = delta_pair(c4, p4.tags[1]);   // (C2, 1)
  FiberedPair e_sigma = delta_pair(c4, p4.tags[2]);  // (C2, sigma)
  CHECK(!star_defined(e_sigma, e_triv));
  CHECK_THROWS_AS(star(e_sigma, e_triv), MathError);
}

TEST_CASE("mackey product basics") {
  GroupPtr c2 = build_group("C2");
  // Res o Ind over C2 doubles the trivial pair
  AlgebraElement ri = mackey_product(res(c2->trivial_subgroup()),
                                     ind(c2->trivial_subgroup()));
  REQUIRE(ri.terms().size() == 1);
  CHECK(ri.terms().begin()->second == Rat(2));
  CHECK(ri.terms().begin()->first.elems.size() == 1);

  // identity element acts as a two-sided identity on the whole basis
  GroupPtr d8 = build_group("D8");
  GroupPtr c4 = build_group("C4");
  SpacePtr sp = BisetSpace::get(d8, c4);
  AlgebraElement idl = identity_element(d8);
  AlgebraElement idr = identity_element(c4);
  for (const BasisLabel& b : sp->basis()) {
    AlgebraElement x = unit(sp, b);
    CHECK(mackey_product(idl, x) == x);
    CHECK(mackey_product(x, idr) == x);
  }

  CHECK_THROWS_AS(mackey_product(identity_element(d8), identity_element(c4)),
                  MathError);
}

TEST_CASE("pair idempotent multiplication rule") {
  for (const char* spec : {"C4", "Q8", "D8"}) {
    GroupPtr g = build_group(spec);
    const PairPoset& poset = pair_poset(g, PosetVariant::All);
    for (const PairTag& a : poset.tags)
      for (const PairTag& b : poset.tags) {
        AlgebraElement prod = mackey_product(e_pair(g, a), e_pair(g, b));
        Subgroup meet = g->intersect(a.K, b.K);
        if (chars_agree_on(a.kappa, b.kappa, meet.elems)) {
          Subgroup join = g->join(a.K, b.K);
          Character prodchar;
          prodchar.domain = join;
          for (Elt x : join.elems) {
            // kappa*lambda on KL: x = k*l, value kappa(k)+lambda(l)
            bool set = false;
            for (Elt k : a.K.elems) {
              Elt l = g->mul(g->inv(k), x);
              if (b.K.contains(l)) {
                prodchar.values.push_back(a.kappa.value_at(k) +
                                          b.kappa.value_at(l));
                set = true;
                break;
              }
            }
            REQUIRE(set);
          }
          CHECK(prod == e_pair(g, PairTag{join, prodchar}));
        } else {
          CHECK_MESSAGE(prod.is_zero(), spec);
        }
      }
  }
  // the headline example: e_(C2,sigma) * e_(C2,1) = 0 over C4
  GroupPtr c4 = build_group("C4");
  const PairPoset& p4 = pair_poset(c4, PosetVariant::Frattini);
  AlgebraElement zero =
      mackey_product(e_pair(c4, p4.tags[2]), e_pair(c4, p4.tags[1]));
  CHECK(zero.is_zero());
  AlgebraElement sq = mackey_product(e_pair(c4, p4.tags[2]), e_pair(c4, p4.tags[2]));
  CHECK(sq == e_pair(c4, p4.tags[2]));
}

TEST_CASE("opposite") {
  GroupPtr d8 = build_group("D8");
  for (const auto& [h, sz] : d8->subgroup_classes()) {
    (void)sz;
    CHECK(opposite(ind(h)) == res(h));
    CHECK(opposite(res(h)) == ind(h));
  }

  // anti-homomorphism on random basis pairs of B(D8, D8)
  SpacePtr sp = BisetSpace::get(d8, d8);
  const auto& basis = sp->basis();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraElement x = unit(sp, basis[rng() % basis.size()]);
    AlgebraElement y = unit(sp, basis[rng() % basis.size()]);
    CHECK(opposite(mackey_product(x, y)) ==
          mackey_product(opposite(y), opposite(x)));
    CHECK(opposite(opposite(x)) == x);
  }
}

TEST_CASE("elementary bisets") {
  GroupPtr c4 = build_group("C4");
  Subgroup c2 = c4->closure({2});

  // Inf is the one-term element on the graph of the projection
  AlgebraElement infl = inflate(c4, c2);
  REQUIRE(infl.terms().size() == 1);
  CHECK(infl.terms().begin()->second == Rat(1));
  const BasisLabel& l = infl.terms().begin()->first;
  CHECK(l.elems.size() == 4);
  for (const QZ& v : l.values) CHECK(v.is_zero());

  // Iso(id) is the identity element
  CHECK(iso(identity_map(c4)) == identity_element(c4));

  // Defres as a single element equals Def o Res computed by Mackey
  for (const char* spec : {"C8", "D8", "Q8"}) {
    GroupPtr g = build_group(spec);
    for (const auto& sc : g->minimal_sections()) {
      const SectionQuotient& sq = section_quotient(sc.section);
      std::vector<Elt> s_in_t;
      for (Elt e : sc.section.S.elems)
        s_in_t.push_back(sc.section.T.position_of(e));
      std::sort(s_in_t.begin(), s_in_t.end());
      Subgroup sk{sq.t_group, s_in_t};
      AlgebraElement two_step =
          mackey_product(deflate(sq.t_group, sk), res(sc.section.T));
      CHECK(defres(sc.section) == two_step);
      AlgebraElement two_step_up =
          mackey_product(ind(sc.section.T), inflate(sq.t_group, sk));
      CHECK(indinf(sc.section) == two_step_up);
    }
  }
}

TEST_CASE("canonical decomposition of basis elements") {
  GroupPtr c4 = build_group("C4");
  GroupPtr d8 = build_group("D8");
  GroupPtr c2 = build_group("C2");
  SpacePtr s44 = BisetSpace::get(c4, c4);
  for (const BasisLabel& l : s44->basis())
    CHECK(canonical_decomposition_holds(s44, l));
  SpacePtr s82 = BisetSpace::get(d8, c2);
  for (const BasisLabel& l : s82->basis())
    CHECK(canonical_decomposition_holds(s82, l));
}

TEST_CASE("mackey agrees with the set-level oracle on small groups") {
  std::vector<GroupPtr> gs{build_group("C1"), build_group("C2"), build_group("C3")};
  for (const GroupPtr& g : gs)
    for (const GroupPtr& h : gs)
      for (const GroupPtr& k : gs) {
        SpacePtr sgh = BisetSpace::get(g, h);
        SpacePtr shk = BisetSpace::get(h, k);
        for (const BasisLabel& a : sgh->basis())
          for (const BasisLabel& b : shk->basis()) {
            AlgebraElement fast = mackey_product(unit(sgh, a), unit(shk, b));
            AlgebraElement slow = tensor_oracle(sgh->decode(a), shk->decode(b));
            CHECK(fast == slow);
          }
      }
}

TEST_CASE("mackey vs oracle off the prime-power case") {
  // mixed orders exercise the composite fiber exponent (lcm of 2 and 3)
  GroupPtr c6 = build_group("C2 x C3");
  GroupPtr s3 = build_group("D6");
  GroupPtr c2 = build_group("C2");
  SpacePtr s1 = BisetSpace::get(c6, s3);
  SpacePtr s2 = BisetSpace::get(s3, c2);
  for (const BasisLabel& a : s1->basis())
    for (const BasisLabel& b : s2->basis()) {
      AlgebraElement fast = mackey_product(unit(s1, a), unit(s2, b));
      AlgebraElement slow = tensor_oracle(s1->decode(a), s2->decode(b));
      CHECK(fast == slow);
    }
}

TEST_CASE("mackey vs oracle on seeded order-8 pairs") {
  GroupPtr d8 = build_group("D8");
  GroupPtr q8 = build_group("Q8");
  GroupPtr c4 = build_group("C4");
  SpacePtr s1 = BisetSpace::get(d8, q8);
  SpacePtr s2 = BisetSpace::get(q8, c4);
  const auto& b1 = s1->basis();
  const auto& b2 = s2->basis();
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 25; ++trial) {
    const BasisLabel& a = b1[rng() % b1.size()];
    const BasisLabel& b = b2[rng() % b2.size()];
    AlgebraElement fast = mackey_product(unit(s1, a), unit(s2, b));
    AlgebraElement slow = tensor_oracle(s1->decode(a), s2->decode(b));
    CHECK(fast == slow);
  }
}

TEST_CASE("oracle identities") {
  GroupPtr c2 = build_group("C2");
  // oracle(identity, y) = {y}
  SpacePtr s = BisetSpace::get(c2, c2);
  for (const BasisLabel& b : s->basis()) {
    AlgebraElement out = tensor_oracle(
        s->decode(identity_element(c2).terms().begin()->first), s->decode(b));
    CHECK(out == unit(s, b));
  }
  // oracle(e_(C2,sigma), e_(C2,1)) over C4 is empty
  GroupPtr c4 = build_group("C4");
  const PairPoset& p4 = pair_poset(c4, PosetVariant::Frattini);
  AlgebraElement zero =
      tensor_oracle(delta_pair(c4, p4.tags[2]), delta_pair(c4, p4.tags[1]));
  CHECK(zero.is_zero());
}

TEST_CASE("associativity on random basis triples") {
  GroupPtr d8 = build_group("D8");
  GroupPtr c4 = build_group("C4");
  GroupPtr c2 = build_group("C2");
  SpacePtr s1 = BisetSpace::get(d8, c4);
  SpacePtr s2 = BisetSpace::get(c4, c4);
  SpacePtr s3 = BisetSpace::get(c4, c2);
  const auto& b1 = s1->basis();
  const auto& b2 = s2->basis();
  const auto& b3 = s3->basis();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraElement x = unit(s1, b1[rng() % b1.size()]);
    AlgebraElement y = unit(s2, b2[rng() % b2.size()]);
    AlgebraElement z = unit(s3, b3[rng() % b3.size()]);
    CHECK(mackey_product(mackey_product(x, y), z) ==
          mackey_product(x, mackey_product(y, z)));
  }
}

TEST_CASE("the Burnside embedding is multiplicative") {
  // products of trivial-character labels never produce nontrivial characters
  GroupPtr d8 = build_group("D8");
  SpacePtr sp = BisetSpace::get(d8, d8);
  std::mt19937_64 rng(5);
  std::vector<BasisLabel> trivial_chars;
  for (const BasisLabel& b : sp->basis()) {
    bool triv = true;
    for (const QZ& v : b.values)
      if (!v.is_zero()) triv = false;
    if (triv) trivial_chars.push_back(b);
  }
  REQUIRE(trivial_chars.size() > 10);
  for (int trial = 0; trial < 40; ++trial) {
    const BasisLabel& a = trivial_chars[rng() % trivial_chars.size()];
    const BasisLabel& b = trivial_chars[rng() % trivial_chars.size()];
    AlgebraElement prod = mackey_product(unit(sp, a), unit(sp, b));
    for (const auto& [l, c] : prod.terms())
      for (const QZ& v : l.values) CHECK(v.is_zero());
  }
}
