#include <doctest.h>

#include <random>

#include "fiburn/atoric.hpp"
#include "fiburn/families.hpp"
#include "fiburn/functor_eval.hpp"

using namespace fiburn;

TEST_CASE("atoricity criteria") {
  CHECK(is_atoric(build_group("C4")).atoric);
  CHECK(is_atoric(build_group("C9")).atoric);
  CHECK(!is_atoric(build_group("C2")).atoric);
  CHECK(!is_atoric(build_group("C3")).atoric);
  CHECK(is_atoric(build_group("D8")).atoric);
  CHECK(is_atoric(build_group("Q8")).atoric);
  CHECK(!is_atoric(build_group("C2 x C2")).atoric);
  CHECK(!is_atoric(build_group("C2 x C4")).atoric);
  CHECK(is_atoric(build_group("C1")).atoric);
  CHECK(is_atoric(build_group("M16")).atoric);
  CHECK(is_atoric(build_group("D16")).atoric);
  CHECK(!is_atoric(build_group("D8 x C2")).atoric);
  CHECK(is_atoric(build_group("D8 x C4")).atoric);

  // criteria agreement is asserted inside; the breakdown is reported
  AtoricBreakdown ab = is_atoric(build_group("Q8"));
  CHECK(ab.criterion_normal_meet);
  CHECK(ab.criterion_omega);
  REQUIRE(ab.criterion_no_factor.has_value());
  CHECK(*ab.criterion_no_factor);

  CHECK_THROWS_AS(is_atoric(build_group("C2 x C3")), MathError);
}

TEST_CASE("atoric parts") {
  AtoricPart v4 = atoric_part(build_group("C2 x C2"));
  CHECK(v4.part->order() == 1);

  GroupPtr q8 = build_group("Q8");
  AtoricPart q = atoric_part(q8);
  CHECK(q.kernel.order() == 1);
  CHECK(q.part->order() == 8);

  AtoricPart c24 = atoric_part(build_group("C2 x C4"));
  CHECK(c24.part->order() == 4);
  CHECK(is_isomorphic(c24.part, build_group("C4")).has_value());

  // idempotence and the fixed-point characterisation
  for (const char* spec : {"C2", "C4", "C2 x C2", "C2 x C4", "D8", "Q8",
                           "D8 x C2", "Q8 x C2", "C8", "M16"}) {
    GroupPtr g = build_group(spec);
    AtoricPart part = atoric_part(g);
    CHECK_MESSAGE(is_atoric(part.part).atoric, spec);
    AtoricPart again = atoric_part(part.part);
    CHECK_MESSAGE(is_isomorphic(part.part, again.part).has_value(), spec);
    CHECK_MESSAGE(is_atoric(g).atoric == (part.kernel.order() == 1), spec);
  }
}

TEST_CASE("subquotients") {
  GroupPtr d8 = build_group("D8");
  CHECK(is_subquotient(build_group("C1"), d8));
  CHECK(is_subquotient(build_group("C4"), d8));
  CHECK(!is_subquotient(build_group("Q8"), d8));
  CHECK(is_subquotient(d8, d8));
  CHECK(!is_subquotient(build_group("C8"), d8));
}

TEST_CASE("c_M blocks for D8") {
  GroupPtr d8 = build_group("D8");
  std::vector<GroupPtr> ms = atoric_subquotients(d8);
  REQUIRE(ms.size() == 3);  // 1, C4, D8
  CHECK(ms[0]->order() == 1);
  CHECK(ms[1]->order() == 4);
  CHECK(ms[2]->order() == 8);

  AlgebraElement c1 = c_m(d8, ms[0]);
  AlgebraElement c4 = c_m(d8, ms[1]);
  AlgebraElement cd = c_m(d8, ms[2]);
  CHECK(!c1.is_zero());
  CHECK(!c4.is_zero());
  CHECK(!cd.is_zero());
  CHECK(c1 + c4 + cd == identity_element(d8));

  // orthogonal idempotents
  CHECK(mackey_product(c1, c1) == c1);
  CHECK(mackey_product(c4, c4) == c4);
  CHECK(mackey_product(cd, cd) == cd);
  CHECK(mackey_product(c1, c4).is_zero());
  CHECK(mackey_product(c4, cd).is_zero());
  CHECK(mackey_product(c1, cd).is_zero());

  // centrality on sampled basis elements
  SpacePtr sp = BisetSpace::get(d8, d8);
  const auto& basis = sp->basis();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    AlgebraElement x(sp);
    x.add_term(basis[rng() % basis.size()], 1);
    for (const AlgebraElement* c : {&c1, &c4, &cd})
      CHECK(mackey_product(*c, x) == mackey_product(x, *c));
  }

  // c_M vanishes off the subquotients of P^@: Q8 is atoric but not a
  // subquotient of D8
  CHECK(c_m(d8, build_group("Q8")).is_zero());
  CHECK_THROWS_AS(c_m(d8, build_group("C2 x C2")), MathError);  // not atoric
}

TEST_CASE("c_1 on C2 is the identity") {
  GroupPtr c2 = build_group("C2");
  AlgebraElement c1 = c_m(c2, build_group("C1"));
  CHECK(c1 == identity_element(c2));
}

TEST_CASE("b_L blocks") {
  for (const char* spec : {"C4", "D8"}) {
    GroupPtr g = build_group(spec);
    std::vector<GroupPtr> ms = atoric_subquotients(g);
    AlgebraElement sum(BisetSpace::get(g, g));
    std::vector<AlgebraElement> bs;
    for (const GroupPtr& m : ms) bs.push_back(b_l(g, m));
    for (const auto& b : bs) sum += b;
    CHECK_MESSAGE(sum == identity_element(g), spec);
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (i != j) CHECK(mackey_product(bs[i], bs[j]).is_zero());
  }
  // elementary abelian: every section has trivial atoric part
  GroupPtr v4 = build_group("C2 x C2");
  CHECK(b_l(v4, build_group("C1")) == identity_element(v4));
}

TEST_CASE("cross-group vanishing and naturality") {
  GroupPtr d8 = build_group("D8");
  GroupPtr q8 = build_group("Q8");
  GroupPtr c4g = build_group("C4");
  SpacePtr sqd = BisetSpace::get(q8, d8);
  const auto& basis = sqd->basis();
  std::mt19937_64 rng(23);

  AlgebraElement c1_q8 = c_m(q8, build_group("C1"));
  AlgebraElement c1_d8 = c_m(d8, build_group("C1"));
  AlgebraElement c4_q8 = c_m(q8, c4g);
  AlgebraElement c4_d8 = c_m(d8, c4g);

  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement a(sqd);
    a.add_term(basis[rng() % basis.size()], 1);
    // property (b): c_M^Q a c_N^P = 0 for M != N
    CHECK(mackey_product(c1_q8, mackey_product(a, c4_d8)).is_zero());
    CHECK(mackey_product(c4_q8, mackey_product(a, c1_d8)).is_zero());
    // property (d): c_M^Q a = a c_M^P
    CHECK(mackey_product(c1_q8, a) == mackey_product(a, c1_d8));
    CHECK(mackey_product(c4_q8, a) == mackey_product(a, c4_d8));
  }
}

TEST_CASE("central resolutions") {
  Catalog cat8 = default_catalog(2, 8);
  GroupPtr one = build_group("C1");
  GroupPtr q8 = build_group("Q8");

  ResolveResult rr = central_resolution(one, q8, cat8);
  REQUIRE(rr.witness.has_value());
  CHECK(rr.witness->q_spec == "Q8");
  CHECK(rr.witness->k.order() == 2);  // the centre
  CHECK(rr.witness->s.order() == 1);
  CHECK(rr.catalog_bound == 8);

  // M ~> (M/S)^@ via (M, 1, S): C4 resolves to 1 through its Frattini C2
  GroupPtr c4 = build_group("C4");
  ResolveResult rc = central_resolution(c4, one, cat8);
  REQUIRE(rc.witness.has_value());
  CHECK(rc.witness->q_spec == "C4");
  CHECK(rc.witness->k.order() == 1);
  CHECK(rc.witness->s.order() == 2);

  // L = C2 x C2 is not atoric, so nothing in the catalog resolves to it
  ResolveResult rn = central_resolution(one, build_group("C2 x C2"), cat8);
  CHECK(!rn.witness.has_value());
}

TEST_CASE("restriction block products") {
  GroupPtr q8 = build_group("Q8");
  GroupPtr one = build_group("C1");
  // P = Q8, L = Q8, M = 1: nonzero (witness group Q8 itself)
  AlgebraElement prod = check_restriction_block(q8, q8, one);
  CHECK(!prod.is_zero());

  CHECK_THROWS_AS(check_restriction_block(build_group("C4"),
                                          build_group("C2 x C2"), one),
                  MathError);  // non-atoric L rejected

  // D8 ~> D8 has the trivial witness (D8, 1, 1); the product certifies it
  GroupPtr d8 = build_group("D8");
  AlgebraElement dd = check_restriction_block(d8, d8, d8);
  Catalog cat16 = default_catalog(2, 16);
  ResolveResult rr = central_resolution(d8, d8, cat16);
  REQUIRE(rr.witness.has_value());
  CHECK(!dd.is_zero());
}

TEST_CASE("special classes") {
  SpecialClass q8 = special_class(build_group("Q8"));
  CHECK(q8.tag == SpecialTag::QuasiExtraspecial);
  CHECK(q8.quasi_extraspecial);
  CHECK(q8.generalized_extraspecial);

  SpecialClass c9 = special_class(build_group("C9"));
  CHECK(c9.tag == SpecialTag::Cyclic);

  SpecialClass v4 = special_class(build_group("C2 x C2"));
  CHECK(v4.tag == SpecialTag::None);

  SpecialClass m16 = special_class(build_group("M16"));
  CHECK(m16.tag == SpecialTag::QuasiExtraspecial);
  CHECK(!m16.generalized_extraspecial);  // |Phi| = 4

  SpecialClass d16 = special_class(build_group("D16"));
  CHECK(d16.tag == SpecialTag::None);  // Frattini not central

  // generalized but not quasi: extraspecial times elementary abelian
  SpecialClass d8c2 = special_class(build_group("D8 x C2"));
  CHECK(d8c2.generalized_extraspecial);
  CHECK(!d8c2.quasi_extraspecial);
  CHECK(d8c2.tag == SpecialTag::GeneralizedExtraspecial);

  // family evidence for the central product
  SpecialClass cp16 = special_class(build_group("cp(D8@center-involution, C4@2)"));
  CHECK(cp16.tag == SpecialTag::QuasiExtraspecial);
  REQUIRE(cp16.family_match.has_value());
}

TEST_CASE("nonzero block products imply central resolutions") {
  // one direction of the restriction theorem: b_L c_M != 0 at P forces a
  // witness, and every group of order <= 8 is in the catalog, which contains
  // the section quotient the theorem constructs
  Catalog cat8 = default_catalog(2, 8);
  for (const char* spec : {"C4", "D8", "Q8"}) {
    GroupPtr p = build_group(spec);
    std::vector<GroupPtr> ms = atoric_subquotients(p);
    for (const GroupPtr& l : ms)
      for (const GroupPtr& m : ms) {
        if (check_restriction_block(p, l, m).is_zero()) continue;
        ResolveResult rr = central_resolution(m, l, cat8);
        CHECK_MESSAGE(rr.witness.has_value(), spec, " |L|=", l->order(),
                      " |M|=", m->order());
        if (rr.witness) {
          // converse certification at the witness group
          CHECK(!check_restriction_block(rr.witness->q, l, m).is_zero());
        }
      }
  }
}

TEST_CASE("vertex support of the monomial functor") {
  GroupPtr c2 = build_group("C2");
  auto vs2 = vertex_support(c2);
  REQUIRE(vs2.size() == 1);  // only the trivial atoric subquotient
  CHECK(vs2[0].m->order() == 1);
  CHECK(vs2[0].dimension == 3);

  GroupPtr q8 = build_group("Q8");
  auto vsq = vertex_support(q8);
  int total = 0;
  for (const auto& e : vsq) {
    total += e.dimension;
    if (e.m->order() != 1) CHECK(e.dimension == 0);
  }
  CHECK(total == static_cast<int>(module_basis(q8).size()));

  // idempotent completeness: dimensions sum to the rank of F(D8)
  GroupPtr d8 = build_group("D8");
  auto vsd = vertex_support(d8);
  int dtotal = 0;
  for (const auto& e : vsd) dtotal += e.dimension;
  CHECK(dtotal == 20);
}
