#include <doctest.h>

#include <map>

#include "fiburn/families.hpp"
#include "fiburn/mobius.hpp"

using namespace fiburn;

namespace {

// Independent Burnside-ring multiplication: [G/K][G/L] = sum over double
// cosets KgL of [G/(K n gLg^-1)], folded to class representatives.
using BElt = std::map<std::vector<Elt>, Rat>;

BElt b_mult(const GroupPtr& g, const Subgroup& k, const Subgroup& l) {
  BElt out;
  std::vector<char> seen(g->order(), 0);
  for (Elt x = 0; x < g->order(); ++x) {
    if (seen[x]) continue;
    for (Elt a : k.elems)
      for (Elt b : l.elems) seen[g->mul(g->mul(a, x), b)] = 1;
    Subgroup meet = g->intersect(k, g->conjugate(l, x));
    out[g->subgroup_class_rep(meet).first.elems] += 1;
  }
  return out;
}

BElt b_scale(const Rat& c, BElt x) {
  for (auto& [k, v] : x) v *= c;
  return x;
}

BElt b_mult_elts(const GroupPtr& g, const BElt& x, const BElt& y) {
  BElt out;
  for (const auto& [k, ck] : x)
    for (const auto& [l, cl] : y) {
      BElt prod = b_mult(g, Subgroup{g, k}, Subgroup{g, l});
      for (auto& [m, cm] : prod) out[m] += ck * cl * cm;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

BElt idempotent_elt(const GroupPtr& g, const Subgroup& h) {
  BElt out;
  for (const auto& [rep, c] : burnside_idempotent_coeffs(g, h)) out[rep.elems] = c;
  return out;
}

}  // namespace

TEST_CASE("subgroup-lattice Moebius values") {
  GroupPtr c4 = build_group("C4");
  CHECK(mobius_subgroup(c4->whole(), c4->whole()) == 1);
  GroupPtr c3 = build_group("C3");
  CHECK(mobius_subgroup(c3->trivial_subgroup(), c3->whole()) == -1);
  // rank-2 elementary abelian: mu(1, C_p x C_p) = p
  GroupPtr v4 = build_group("C2 x C2");
  CHECK(mobius_subgroup(v4->trivial_subgroup(), v4->whole()) == 2);
  GroupPtr e9 = build_group("C3 x C3");
  CHECK(mobius_subgroup(e9->trivial_subgroup(), e9->whole()) == 3);
  CHECK_THROWS_AS(
      mobius_subgroup(build_group("D8")->closure({4}), build_group("D8")->closure({1})),
      MathError);
}

TEST_CASE("defining recursion holds on every interval") {
  for (const char* spec : {"C8", "D8", "Q8", "C2 x C4"}) {
    GroupPtr g = build_group(spec);
    auto subs = g->subgroups();
    for (const auto& k : subs)
      for (const auto& h : subs) {
        if (!h.contains(k) || k.elems == h.elems) continue;
        long total = 0;
        for (const auto& x : subs)
          if (x.order() >= k.order() && h.contains(x) && x.contains(k))
            total += mobius_subgroup(x, h);
        CHECK_MESSAGE(total == 0, spec);
      }
  }
}

TEST_CASE("Hall vanishing below the Frattini subgroup") {
  for (const char* spec : {"C4", "C8", "D8", "Q8", "C9", "M16"}) {
    GroupPtr g = build_group(spec);
    Subgroup phi = g->frattini();
    for (const auto& x : g->subgroups())
      if (!x.contains(phi)) CHECK_MESSAGE(mobius_subgroup(x, g->whole()) == 0, spec);
  }
}

TEST_CASE("normal-poset Moebius values") {
  GroupPtr c4 = build_group("C4");
  Subgroup c2 = c4->closure({2});
  CHECK(mobius_normal(c2, c2) == 1);
  CHECK(mobius_normal(c4->trivial_subgroup(), c2) == -1);

  GroupPtr q8 = build_group("Q8");
  CHECK(mobius_normal(q8->trivial_subgroup(), q8->center()) == -1);

  // the normal poset genuinely differs from the lattice: for a Klein
  // subgroup V of D8 the normal interval [1, V] is the chain 1 < Z < V with
  // Moebius 0, while the lattice interval also contains two reflection
  // subgroups and gives 2
  GroupPtr d8 = build_group("D8");
  CHECK(mobius_normal(d8->trivial_subgroup(), d8->whole()) == 0);
  for (const auto& v : d8->normal_subgroups()) {
    if (v.order() != 4) continue;
    const MaterializedSubgroup& mv = d8->materialize(v);
    if (mv.group->is_cyclic()) continue;
    CHECK(mobius_normal(d8->trivial_subgroup(), v) == 0);
    CHECK(mobius_subgroup(d8->trivial_subgroup(), v) == 2);
  }

  Subgroup refl = d8->closure({4});
  CHECK_THROWS_AS(mobius_normal(d8->trivial_subgroup(), refl), MathError);
}

TEST_CASE("deflation numbers") {
  for (const char* spec : {"C2", "C4", "D8", "Q8"}) {
    GroupPtr g = build_group(spec);
    CHECK(deflation_number(g, g->trivial_subgroup()) == Rat(1));
  }
  GroupPtr c2 = build_group("C2");
  CHECK(deflation_number(c2, c2->whole()) == Rat(1, 2));
  GroupPtr c3 = build_group("C3");
  CHECK(deflation_number(c3, c3->whole()) == Rat(2, 3));
  GroupPtr v4 = build_group("C2 x C2");
  for (const auto& n : v4->normal_subgroups())
    if (n.order() == 2) CHECK(deflation_number(v4, n) == Rat(0));
}

TEST_CASE("Burnside idempotents") {
  GroupPtr c2 = build_group("C2");
  auto e = burnside_idempotent_coeffs(c2, c2->whole());
  REQUIRE(e.size() == 2);
  CHECK(e[0].first.order() == 1);
  CHECK(e[0].second == Rat(-1, 2));
  CHECK(e[1].first.order() == 2);
  CHECK(e[1].second == Rat(1));

  for (const char* spec : {"C4", "D8"}) {
    GroupPtr g = build_group(spec);
    auto e1 = burnside_idempotent_coeffs(g, g->trivial_subgroup());
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].second == Rat(1, g->order()));

    // orthogonal idempotents summing to [G/G], via the double-coset rule
    std::vector<BElt> idems;
    BElt sum;
    for (const auto& [h, size] : g->subgroup_classes()) {
      (void)size;
      idems.push_back(idempotent_elt(g, h));
      for (const auto& [k, c] : idems.back()) sum[k] += c;
    }
    for (auto it = sum.begin(); it != sum.end();)
      it = it->second == 0 ? sum.erase(it) : std::next(it);
    BElt top;
    top[g->whole().elems] = 1;
    CHECK(sum == top);
    for (std::size_t i = 0; i < idems.size(); ++i)
      for (std::size_t j = 0; j < idems.size(); ++j) {
        BElt prod = b_mult_elts(g, idems[i], idems[j]);
        CHECK(prod == (i == j ? idems[i] : BElt{}));
      }
  }
}
