// Acceptance suite: runs the ten top-level criteria and prints one pass/fail
// line per criterion.  Everything is exact rational arithmetic; every
// tolerance is zero.
//
//   acceptance [--criterion N] [--cache-dir DIR]

#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fiburn/atoric.hpp"
#include "fiburn/cache.hpp"
#include "fiburn/families.hpp"
#include "fiburn/functor_eval.hpp"
#include "fiburn/idempotents.hpp"
#include "fiburn/mobius.hpp"
#include "fiburn/oracle.hpp"

using namespace fiburn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& d) {
    if (pass) detail = d;
    pass = false;
  }
};

AlgebraElement unit(const SpacePtr& sp, const BasisLabel& l) {
  AlgebraElement e(sp);
  e.add_term(l, 1);
  return e;
}

const std::vector<const char*>& catalog_specs() {
  static std::vector<const char*> c{"C2", "C3",      "C4", "C2 x C2", "C8",
                                    "C2 x C4", "D8", "Q8", "C9",      "C3 x C3"};
  return c;
}

// 1. mackey_product equals tensor_oracle on all transitive pairs over every
//    triple from {1, C2, C3, C4, C2 x C2}, plus >= 200 seeded random pairs
//    over order-8 groups.
Outcome criterion1() {
  Outcome out;
  std::vector<GroupPtr> gs{build_group("C1"), build_group("C2"),
                           build_group("C3"), build_group("C4"),
                           build_group("C2 x C2")};
  long checked = 0;
  for (const GroupPtr& g : gs)
    for (const GroupPtr& h : gs)
      for (const GroupPtr& k : gs) {
        SpacePtr sgh = BisetSpace::get(g, h);
        SpacePtr shk = BisetSpace::get(h, k);
        for (const BasisLabel& a : sgh->basis())
          for (const BasisLabel& b : shk->basis()) {
            ++checked;
            if (!(mackey_product(unit(sgh, a), unit(shk, b)) ==
                  tensor_oracle(sgh->decode(a), shk->decode(b)))) {
              out.fail("full sweep mismatch over " + g->name() + "," +
                       h->name() + "," + k->name());
              return out;
            }
          }
      }

  std::vector<GroupPtr> order8{build_group("C8"), build_group("C2 x C4"),
                               build_group("C2 x C2 x C2"), build_group("D8"),
                               build_group("Q8")};
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupPtr& g = order8[rng() % order8.size()];
    const GroupPtr& h = order8[rng() % order8.size()];
    const GroupPtr& k = order8[rng() % order8.size()];
    SpacePtr sgh = BisetSpace::get(g, h);
    SpacePtr shk = BisetSpace::get(h, k);
    const auto& ba = sgh->basis();
    const auto& bb = shk->basis();
    const BasisLabel& a = ba[rng() % ba.size()];
    const BasisLabel& b = bb[rng() % bb.size()];
    if (!(mackey_product(unit(sgh, a), unit(shk, b)) ==
          tensor_oracle(sgh->decode(a), shk->decode(b)))) {
      out.fail("random order-8 mismatch at trial " + std::to_string(trial));
      return out;
    }
    ++checked;
  }
  out.detail = std::to_string(checked) + " product pairs";
  return out;
}

// 2. e_tilde system: orthogonality, idempotency, completeness.
Outcome criterion2() {
  Outcome out;
  for (const char* spec : catalog_specs()) {
    GroupPtr g = build_group(spec);
    SpacePtr sp = BisetSpace::get(g, g);
    std::vector<AlgebraElement> ets;
    AlgebraElement sum(sp);
    for (const auto& [h, sz] : g->subgroup_classes()) {
      (void)sz;
      ets.push_back(e_tilde(g, h));
      sum += ets.back();
    }
    if (!(sum == identity_element(g))) out.fail(std::string(spec) + ": sum");
    for (std::size_t i = 0; i < ets.size(); ++i)
      for (std::size_t j = 0; j < ets.size(); ++j) {
        AlgebraElement prod = mackey_product(ets[i], ets[j]);
        if (!(prod == (i == j ? ets[i] : AlgebraElement(sp))))
          out.fail(std::string(spec) + ": orthogonality");
      }
  }
  return out;
}

// 3. phi system: both claims of the orthogonality theorem across the catalog,
//    the p-group fast form, and the whole-basis vanishing sweeps.
Outcome criterion3() {
  Outcome out;
  for (const char* spec : catalog_specs()) {
    VerifyReport rep = verify_phi_system(build_group(spec));
    for (const auto& item : rep.items)
      if (!item.pass)
        out.fail(std::string(spec) + ": " + item.identity + " [" + item.witness + "]");
  }
  return out;
}

// 4. epsilon system: orthogonality and completeness; index counts for C2/C4.
Outcome criterion4() {
  Outcome out;
  if (epsilon_indices(build_group("C2")).size() != 2)
    out.fail("C2 index count != 2");
  if (epsilon_indices(build_group("C4")).size() != 5)
    out.fail("C4 index count != 5");
  for (const char* spec : {"C2", "C3", "C4", "C2 x C2", "C8", "D8", "Q8", "C9"}) {
    VerifyReport rep = verify_epsilon_system(build_group(spec));
    for (const auto& item : rep.items)
      if (!item.pass)
        out.fail(std::string(spec) + ": " + item.identity + " [" + item.witness + "]");
  }
  return out;
}

// 5. decomposition theorem: dimensions (2,1) for C2; exact rank bookkeeping
//    and the U/V identities for every catalog group of order <= 8.
Outcome criterion5() {
  Outcome out;
  DecompositionReport c2 = decompose(build_group("C2"));
  if (c2.total_rank != 3) out.fail("rank F(C2) != 3");
  if (c2.components.size() != 2 || c2.components[0].dimension != 1 ||
      c2.components[1].dimension != 2)
    out.fail("C2 dimensions != (1,2)");
  for (const char* spec : {"C2", "C3", "C4", "C2 x C2", "C8", "C2 x C4", "D8", "Q8"}) {
    DecompositionReport r = decompose(build_group(spec));
    if (!r.dims_sum_ok) out.fail(std::string(spec) + ": dims sum");
    if (!r.direct_sum_ok) out.fail(std::string(spec) + ": direct sum");
    if (!r.uv_identity_ok) out.fail(std::string(spec) + ": UV identities");
    for (const auto& comp : r.components)
      if (!comp.invariance_ok) out.fail(std::string(spec) + ": invariance");
  }
  return out;
}

// 6. deflation numbers and the Def e_tilde Inf identity.
Outcome criterion6() {
  Outcome out;
  for (const char* spec : catalog_specs()) {
    GroupPtr g = build_group(spec);
    if (!(deflation_number(g, g->trivial_subgroup()) == Rat(1)))
      out.fail(std::string(spec) + ": m_{G,1} != 1");
  }
  if (!(deflation_number(build_group("C2"), build_group("C2")->whole()) == Rat(1, 2)))
    out.fail("m_{C2,C2} != 1/2");
  if (!(deflation_number(build_group("C3"), build_group("C3")->whole()) == Rat(2, 3)))
    out.fail("m_{C3,C3} != 2/3");
  {
    GroupPtr v4 = build_group("C2 x C2");
    for (const auto& n : v4->normal_subgroups())
      if (n.order() == 2 && !(deflation_number(v4, n) == Rat(0)))
        out.fail("m_{V4,C2} != 0");
  }
  // Def e_tilde_G Inf = m_{G,N} e_tilde_{G/N} for every normal N
  for (const char* spec : catalog_specs()) {
    GroupPtr g = build_group(spec);
    AlgebraElement top = e_tilde(g, g->whole());
    for (const auto& n : g->normal_subgroups()) {
      const QuotientGroup& q = g->quotient(n);
      AlgebraElement lhs = mackey_product(
          mackey_product(deflate(g, n), top), inflate(g, n));
      AlgebraElement rhs =
          deflation_number(g, n) * e_tilde(q.group, q.group->whole());
      if (!(lhs == rhs))
        out.fail(std::string(spec) + ": Def e~ Inf != m e~ at |N|=" +
                 std::to_string(n.order()));
    }
  }
  return out;
}

// 7. block idempotents c_M: orthogonal, central, complete; nonzero exactly on
//    subquotients of P^@; cross-group vanishing on seeded samples.
Outcome criterion7() {
  Outcome out;
  std::vector<GroupPtr> candidates{build_group("C1"), build_group("C4"),
                                   build_group("C8"), build_group("D8"),
                                   build_group("Q8")};
  for (const char* spec : {"C2", "C4", "C2 x C2", "C8", "D8", "Q8"}) {
    GroupPtr p = build_group(spec);
    SpacePtr sp = BisetSpace::get(p, p);
    std::vector<GroupPtr> ms = atoric_subquotients(p);
    std::vector<AlgebraElement> cs;
    AlgebraElement sum(sp);
    for (const GroupPtr& m : ms) {
      cs.push_back(c_m(p, m));
      sum += cs.back();
    }
    if (!(sum == identity_element(p))) out.fail(std::string(spec) + ": sum");
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (!(mackey_product(cs[i], cs[j]) ==
              (i == j ? cs[i] : AlgebraElement(sp))))
          out.fail(std::string(spec) + ": orthogonality");
    // nonzero iff subquotient of P^@, over independent candidates
    GroupPtr at = atoric_part(p).part;
    for (const GroupPtr& m : candidates) {
      bool sub = is_subquotient(m, at);
      if (sub != !c_m(p, m).is_zero())
        out.fail(std::string(spec) + ": c_M nonzero-iff-subquotient at |M|=" +
                 std::to_string(m->order()));
    }
    // centrality: full basis commutation for |P| <= 8
    for (const BasisLabel& b : sp->basis()) {
      AlgebraElement x = unit(sp, b);
      for (const auto& c : cs)
        if (!(mackey_product(c, x) == mackey_product(x, c)))
          out.fail(std::string(spec) + ": centrality");
    }
  }

  // cross-group property: c_M^Q a c_N^P = 0 for M != N, >= 100 samples per
  // ordered pair from {C4, D8, Q8}
  std::vector<GroupPtr> pool{build_group("C4"), build_group("D8"),
                             build_group("Q8")};
  std::mt19937_64 rng(0);
  for (const GroupPtr& q : pool)
    for (const GroupPtr& p : pool) {
      SpacePtr sqp = BisetSpace::get(q, p);
      const auto& basis = sqp->basis();
      std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;  // (c_M^Q, c_N^P)
      for (const GroupPtr& m : candidates)
        for (const GroupPtr& n : candidates) {
          if (is_isomorphic(m, n)) continue;
          AlgebraElement cmq = c_m(q, m);
          AlgebraElement cnp = c_m(p, n);
          if (cmq.is_zero() || cnp.is_zero()) continue;
          pairs.emplace_back(std::move(cmq), std::move(cnp));
        }
      for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement a = unit(sqp, basis[rng() % basis.size()]);
        for (const auto& [cmq, cnp] : pairs)
          if (!mackey_product(cmq, mackey_product(a, cnp)).is_zero())
            out.fail(q->name() + "," + p->name() + ": cross-group vanishing");
      }
    }
  return out;
}

// 8. the monomial Burnside functor has trivial vertex: c_1 acts as the
//    identity on F(P).
Outcome criterion8() {
  Outcome out;
  GroupPtr one = build_group("C1");
  for (const char* spec : {"C2", "C4", "C2 x C2", "D8", "Q8", "C8"}) {
    GroupPtr p = build_group(spec);
    AlgebraElement c1 = c_m(p, one);
    for (const BasisLabel& b : module_basis(p)) {
      ModuleVector v = module_unit(p, b);
      if (!(act(c1, v) == v)) {
        out.fail(std::string(spec) + ": c_1 moves a basis vector");
        break;
      }
    }
  }
  return out;
}

// 9. central resolutions of the trivial group, swept over the catalog up to
//    order 32 (2-groups) and 27 (3-groups): witnesses exactly for cyclic or
//    quasi-extraspecial atoric L, each certified by a nonzero b_L c_1.
Outcome criterion9() {
  Outcome out;
  GroupPtr one = build_group("C1");
  for (int p : {2, 3}) {
    Catalog cat = default_catalog(p, 32);
    for (const auto& [spec, l] : cat) {
      if (!is_atoric(l).atoric) continue;
      SpecialClass sc = special_class(l);
      bool expected = l->order() == 1 || sc.tag == SpecialTag::Cyclic ||
                      sc.tag == SpecialTag::QuasiExtraspecial;
      ResolveResult rr = central_resolution(one, l, cat);
      if (rr.witness.has_value() != expected) {
        out.fail(spec + (expected ? ": witness missing" : ": unexpected witness"));
        continue;
      }
      if (rr.witness) {
        AlgebraElement prod = check_restriction_block(rr.witness->q, l, one);
        if (prod.is_zero()) out.fail(spec + ": certification product vanishes");
      }
    }
  }
  // the headline witness
  Catalog cat8 = default_catalog(2, 8);
  ResolveResult rq = central_resolution(one, build_group("Q8"), cat8);
  if (!rq.witness || rq.witness->q_spec != "Q8" || rq.witness->k.order() != 2 ||
      rq.witness->s.order() != 1)
    out.fail("Q8 witness is not (Q8, Z, 1)");
  return out;
}

// 10. paper-example regression: D8 and Q8 are atoric with trivial central
//     quotient atoric parts and carry both special-class flags.
Outcome criterion10() {
  Outcome out;
  for (const char* spec : {"D8", "Q8"}) {
    GroupPtr g = build_group(spec);
    if (!is_atoric(g).atoric) out.fail(std::string(spec) + " not atoric");
    const QuotientGroup& q = g->quotient(g->center());
    if (atoric_part(q.group).part->order() != 1)
      out.fail(std::string(spec) + "/Z atoric part nontrivial");
    SpecialClass sc = special_class(g);
    if (!sc.generalized_extraspecial || !sc.quasi_extraspecial)
      out.fail(std::string(spec) + " special-class flags");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int which = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      which = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--cache-dir") == 0 && i + 1 < argc)
      cachefs::set_cache_dir(argv[++i]);
  }
  struct Entry {
    int number;
    const char* title;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {1, "Mackey product agrees with the set-level oracle", criterion1},
      {2, "lifted Burnside idempotents form a complete orthogonal system", criterion2},
      {3, "phi system: orthogonality, completeness, fast form, vanishing sweeps", criterion3},
      {4, "epsilon system: orthogonality, completeness, index counts", criterion4},
      {5, "evaluation decomposition: dimensions, direct sums, U/V identities", criterion5},
      {6, "deflation numbers and the deflation-inflation identity", criterion6},
      {7, "block idempotents: orthogonal, central, complete, cross-group vanishing", criterion7},
      {8, "monomial Burnside functor has trivial vertex", criterion8},
      {9, "central resolutions of the trivial group, certified", criterion9},
      {10, "dihedral/quaternion regression examples", criterion10},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    if (which != 0 && e.number != which) continue;
    Outcome o = e.run();
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << e.number
              << ": " << e.title;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
