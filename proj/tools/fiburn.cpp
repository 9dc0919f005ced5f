// Command-line front end.
//
// Commands: group, idem, verify, atoric, resolve, decompose.  Global flags:
// --format text|json, --cache-dir, --seed, --max-lattice.  Exit codes:
// 0 success, 1 verification failure, 2 usage or parse error, 3 cap exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "fiburn/atoric.hpp"
#include "fiburn/cache.hpp"
#include "fiburn/families.hpp"
#include "fiburn/functor_eval.hpp"
#include "fiburn/idempotents.hpp"
#include "fiburn/mobius.hpp"
#include "fiburn/oracle.hpp"
#include "fiburn/serialize.hpp"

using namespace fiburn;

namespace {

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::uint64_t seed = 0;
  int max_lattice = 0;  // 0: keep the default
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (json_mode(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------- group ----

int cmd_group(const Options& o, const std::string& spec) {
  GroupPtr g = build_group(spec);
  Json j;
  j["spec"] = spec;
  j["order"] = g->order();
  j["abelian"] = g->is_abelian();
  j["cyclic"] = g->is_cyclic();
  j["exponent"] = g->exponent();
  j["center_order"] = g->center().order();
  j["derived_order"] = g->derived().order();
  j["frattini_order"] = g->frattini().order();
  std::ostringstream text;
  text << "group " << spec << ": order " << g->order()
       << (g->is_abelian() ? ", abelian" : ", nonabelian") << ", exponent "
       << g->exponent() << "\n  |Z|=" << g->center().order()
       << " |[G,G]|=" << g->derived().order()
       << " |Phi|=" << g->frattini().order() << "\n";
  if (g->prime_hint() || g->order() == 1) {
    AtoricBreakdown ab = is_atoric(g);
    AtoricPart part = atoric_part(g);
    SpecialClass sc = special_class(g);
    j["atoric"] = ab.atoric;
    j["atoric_part_order"] = part.part->order();
    j["special_class"] = special_tag_name(sc.tag);
    j["generalized_extraspecial"] = sc.generalized_extraspecial;
    j["quasi_extraspecial"] = sc.quasi_extraspecial;
    if (sc.family_match) j["family_match"] = *sc.family_match;
    text << "  atoric=" << (ab.atoric ? "true" : "false")
         << ", atoric part order " << part.part->order()
         << ", class=" << special_tag_name(sc.tag);
    if (sc.quasi_extraspecial && sc.generalized_extraspecial &&
        sc.tag == SpecialTag::QuasiExtraspecial)
      text << " (also generalized_extraspecial)";
    if (sc.family_match) text << ", family " << *sc.family_match;
    text << "\n";
  }
  emit(o, j, text.str());
  return 0;
}

// ----------------------------------------------------------------- idem ----

int cmd_idem(const Options& o, const std::string& family, const std::string& spec,
             const std::string& m_spec, const std::string& l_spec) {
  GroupPtr g = build_group(spec);
  std::vector<std::pair<std::string, AlgebraElement>> elements;
  if (family == "etilde") {
    for (const auto& [h, sz] : g->subgroup_classes()) {
      (void)sz;
      elements.emplace_back("etilde[" + subgroup_to_string(h) + "]",
                            e_tilde(g, h));
    }
  } else if (family == "phi") {
    const PairPoset& poset = pair_poset(g, PosetVariant::Frattini);
    for (const PairTag& t : poset.tags)
      elements.emplace_back("phi[" + subgroup_to_string(t.K) + "]", phi(g, t));
  } else if (family == "epsilon") {
    auto indices = epsilon_indices(g);
    for (std::size_t i = 0; i < indices.size(); ++i)
      elements.emplace_back("epsilon[" + std::to_string(i) + "]",
                            epsilon(g, indices[i]));
  } else if (family == "cM") {
    if (m_spec.empty()) throw ParseError("idem cM needs --M");
    elements.emplace_back("cM", c_m(g, build_group(m_spec)));
  } else if (family == "bL") {
    if (l_spec.empty()) throw ParseError("idem bL needs --L");
    elements.emplace_back("bL", b_l(g, build_group(l_spec)));
  } else {
    throw ParseError("unknown idem family: " + family);
  }

  Json arr = Json::array();
  std::ostringstream text;
  text << "# " << elements.size() << " element(s)\n";
  for (auto& [name, elt] : elements) {
    Json je = element_to_json(elt);
    je["name"] = name;
    text << name << " = " << element_to_json(elt).dump() << "\n";
    arr.push_back(std::move(je));
  }
  emit(o, arr, text.str());
  return 0;
}

// --------------------------------------------------------------- verify ----

VerifyReport verify_mackey(const GroupPtr& g, std::uint64_t seed) {
  VerifyReport rep;
  rep.item("mackey.oracle-small");
  std::vector<GroupPtr> small{build_group("C1"), build_group("C2"),
                              build_group("C3")};
  for (const GroupPtr& a : small)
    for (const GroupPtr& b : small)
      for (const GroupPtr& c : small) {
        SpacePtr sab = BisetSpace::get(a, b);
        SpacePtr sbc = BisetSpace::get(b, c);
        for (const BasisLabel& x : sab->basis())
          for (const BasisLabel& y : sbc->basis()) {
            AlgebraElement ex(sab);
            ex.add_term(x, 1);
            AlgebraElement ey(sbc);
            ey.add_term(y, 1);
            if (!(mackey_product(ex, ey) ==
                  tensor_oracle(sab->decode(x), sbc->decode(y))))
              rep.fail("mackey.oracle-small", "small-group pair");
          }
      }
  if (g->order() <= caps().oracle) {
    rep.item("mackey.oracle-sampled");
    SpacePtr sp = BisetSpace::get(g, g);
    const auto& basis = sp->basis();
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      const BasisLabel& x = basis[rng() % basis.size()];
      const BasisLabel& y = basis[rng() % basis.size()];
      AlgebraElement ex(sp);
      ex.add_term(x, 1);
      AlgebraElement ey(sp);
      ey.add_term(y, 1);
      if (!(mackey_product(ex, ey) ==
            tensor_oracle(sp->decode(x), sp->decode(y))))
        rep.fail("mackey.oracle-sampled", "trial " + std::to_string(trial));
    }
  }
  rep.item("mackey.associative");
  {
    SpacePtr sp = BisetSpace::get(g, g);
    const auto& basis = sp->basis();
    std::mt19937_64 rng(seed + 1);
    for (int trial = 0; trial < 25; ++trial) {
      AlgebraElement x(sp), y(sp), z(sp);
      x.add_term(basis[rng() % basis.size()], 1);
      y.add_term(basis[rng() % basis.size()], 1);
      z.add_term(basis[rng() % basis.size()], 1);
      if (!(mackey_product(mackey_product(x, y), z) ==
            mackey_product(x, mackey_product(y, z))))
        rep.fail("mackey.associative", "trial " + std::to_string(trial));
    }
  }
  return rep;
}

VerifyReport verify_blocks(const GroupPtr& g, std::uint64_t seed) {
  VerifyReport rep;
  std::vector<GroupPtr> ms = atoric_subquotients(g);
  std::vector<AlgebraElement> cs;
  for (const GroupPtr& m : ms) cs.push_back(c_m(g, m));

  rep.item("blocks.sum");
  AlgebraElement sum(BisetSpace::get(g, g));
  for (const auto& c : cs) sum += c;
  if (!(sum == identity_element(g))) rep.fail("blocks.sum", "sum != identity");

  rep.item("blocks.orthogonal-idempotent");
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      AlgebraElement prod = mackey_product(cs[i], cs[j]);
      if (!(prod == (i == j ? cs[i] : AlgebraElement(sum.space()))))
        rep.fail("blocks.orthogonal-idempotent",
                 "pair " + std::to_string(i) + "," + std::to_string(j));
    }

  rep.item("blocks.nonzero-iff-subquotient");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool sub = is_subquotient(ms[i], atoric_part(g).part);
    if (sub == cs[i].is_zero())
      rep.fail("blocks.nonzero-iff-subquotient",
               "M order " + std::to_string(ms[i]->order()));
  }

  rep.item("blocks.central");
  {
    SpacePtr sp = BisetSpace::get(g, g);
    const auto& basis = sp->basis();
    std::mt19937_64 rng(seed);
    std::size_t sweep = g->order() <= 8 ? basis.size() : 60;
    for (std::size_t t = 0; t < sweep; ++t) {
      const BasisLabel& b =
          g->order() <= 8 ? basis[t] : basis[rng() % basis.size()];
      AlgebraElement x(sp);
      x.add_term(b, 1);
      for (const auto& c : cs)
        if (!(mackey_product(c, x) == mackey_product(x, c)))
          rep.fail("blocks.central", "basis element " + std::to_string(t));
    }
  }

  rep.item("blocks.bL-sum");
  rep.item("blocks.bL-orthogonal");
  {
    std::vector<AlgebraElement> bs;
    for (const GroupPtr& m : ms) bs.push_back(b_l(g, m));
    AlgebraElement bsum(BisetSpace::get(g, g));
    for (const auto& b : bs) bsum += b;
    if (!(bsum == identity_element(g)))
      rep.fail("blocks.bL-sum", "sum != identity");
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (i == j) continue;
        if (!mackey_product(bs[i], bs[j]).is_zero())
          rep.fail("blocks.bL-orthogonal",
                   "pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return rep;
}

VerifyReport verify_decomposition(const GroupPtr& g, Json* details) {
  VerifyReport rep;
  DecompositionReport dr = decompose(g);
  rep.item("decomposition.dims-sum");
  if (!dr.dims_sum_ok) rep.fail("decomposition.dims-sum", "dimension mismatch");
  rep.item("decomposition.direct-sum");
  if (!dr.direct_sum_ok) rep.fail("decomposition.direct-sum", "joint rank mismatch");
  rep.item("decomposition.uv-identity");
  if (!dr.uv_identity_ok) rep.fail("decomposition.uv-identity", "UV != id");
  rep.item("decomposition.invariance");
  for (const auto& comp : dr.components)
    if (!comp.invariance_ok)
      rep.fail("decomposition.invariance", "a component moves under Iso(c_g)");
  if (details) *details = decomposition_to_json(dr, false);
  return rep;
}

VerifyReport verify_atoric_suite(const GroupPtr& g) {
  VerifyReport rep;
  rep.item("atoric.criteria-agree");
  try {
    is_atoric(g);  // asserts agreement internally
  } catch (const MathError& e) {
    rep.fail("atoric.criteria-agree", e.what());
  }
  rep.item("atoric.part-idempotent");
  try {
    AtoricPart part = atoric_part(g);
    AtoricPart again = atoric_part(part.part);
    if (!is_isomorphic(part.part, again.part))
      rep.fail("atoric.part-idempotent", "(P^@)^@ != P^@");
    if (is_atoric(g).atoric != (part.kernel.order() == 1))
      rep.fail("atoric.part-idempotent", "atoric iff trivial kernel");
  } catch (const MathError& e) {
    rep.fail("atoric.part-idempotent", e.what());
  }
  return rep;
}

VerifyReport verify_resolution(const GroupPtr& g, int max_order) {
  // For every atoric L in the catalog of the same prime: resolve(1, L)
  // succeeds exactly when L is cyclic or quasi-extraspecial, and every
  // witness is certified by a nonzero b_L * c_1 at the witness group.
  VerifyReport rep;
  int p = g->prime_hint().value_or(2);
  Catalog cat = default_catalog(p, max_order);
  GroupPtr one = build_group("C1");
  rep.item("resolution.predicate");
  rep.item("resolution.certified");
  for (const auto& [spec, l] : cat) {
    if (!is_atoric(l).atoric) continue;
    SpecialClass sc = special_class(l);
    bool expected = sc.tag == SpecialTag::Cyclic ||
                    sc.tag == SpecialTag::QuasiExtraspecial || l->order() == 1;
    ResolveResult rr = central_resolution(one, l, cat);
    if (rr.witness.has_value() != expected)
      rep.fail("resolution.predicate", spec);
    if (rr.witness) {
      AlgebraElement prod = check_restriction_block(rr.witness->q, l, one);
      if (prod.is_zero()) rep.fail("resolution.certified", spec);
    }
  }
  return rep;
}

int cmd_verify(const Options& o, const std::string& spec,
               const std::string& suite, int max_order) {
  GroupPtr g = build_group(spec);
  VerifyReport rep;
  Json details;
  if (suite == "mackey")
    rep = verify_mackey(g, o.seed);
  else if (suite == "phi")
    rep = verify_phi_system(g);
  else if (suite == "epsilon")
    rep = verify_epsilon_system(g);
  else if (suite == "blocks")
    rep = verify_blocks(g, o.seed);
  else if (suite == "decomposition")
    rep = verify_decomposition(g, &details);
  else if (suite == "atoric")
    rep = verify_atoric_suite(g);
  else if (suite == "resolution")
    rep = verify_resolution(g, max_order);
  else
    throw ParseError("unknown suite: " + suite);

  Json j = verify_report_to_json(rep);
  if (!details.is_null()) j["details"] = details;
  std::ostringstream text;
  for (const auto& item : rep.items)
    text << (item.pass ? "pass" : "FAIL") << "  " << item.identity
         << (item.witness.empty() ? "" : "  [" + item.witness + "]") << "\n";
  if (suite == "decomposition" && !details.is_null() && !json_mode(o)) {
    text << "dims:";
    for (const auto& c : details["components"]) text << " " << c["dimension"];
    text << " / total " << details["total_rank"] << "\n";
  }
  text << (rep.all_pass() ? "OK" : "FAILED") << "\n";
  emit(o, j, text.str());
  return rep.all_pass() ? 0 : 1;
}

// --------------------------------------------------------------- atoric ----

int cmd_atoric(const Options& o, const std::string& spec) {
  GroupPtr g = build_group(spec);
  AtoricBreakdown ab = is_atoric(g);
  AtoricPart part = atoric_part(g);
  Json j;
  j["spec"] = spec;
  j["atoric"] = ab.atoric;
  j["criterion_normal_meet"] = ab.criterion_normal_meet;
  j["criterion_omega"] = ab.criterion_omega;
  if (ab.criterion_no_factor) j["criterion_no_factor"] = *ab.criterion_no_factor;
  j["atoric_part_order"] = part.part->order();
  j["kernel"] = subgroup_to_string(part.kernel);
  std::ostringstream text;
  text << spec << ": atoric=" << (ab.atoric ? "true" : "false")
       << " (normal-meet " << ab.criterion_normal_meet << ", omega "
       << ab.criterion_omega;
  if (ab.criterion_no_factor) text << ", no-factor " << *ab.criterion_no_factor;
  text << "), atoric part order " << part.part->order() << "\n";
  emit(o, j, text.str());
  return 0;
}

// -------------------------------------------------------------- resolve ----

int cmd_resolve(const Options& o, const std::string& m_spec,
                const std::string& l_spec, int max_order) {
  GroupPtr m = build_group(m_spec);
  GroupPtr l = build_group(l_spec);
  int p = m->order() > 1 ? m->prime_hint().value_or(0)
                         : l->prime_hint().value_or(2);
  if (p == 0) throw MathError("resolve: M is not a p-group");
  Catalog cat = default_catalog(p, max_order);
  ResolveResult rr = central_resolution(m, l, cat);
  Json j = resolve_to_json(m_spec, l_spec, rr);
  std::ostringstream text;
  if (rr.witness)
    text << m_spec << " ~> " << l_spec << " via Q=" << rr.witness->q_spec
         << " K=" << subgroup_to_string(rr.witness->k)
         << " S=" << subgroup_to_string(rr.witness->s) << "\n";
  else
    text << m_spec << " ~> " << l_spec << ": none-in-catalog (bound "
         << rr.catalog_bound << ")\n";
  emit(o, j, text.str());
  return 0;
}

// ------------------------------------------------------------ decompose ----

int cmd_decompose(const Options& o, const std::string& spec, bool bases) {
  GroupPtr g = build_group(spec);
  DecompositionReport dr = decompose(g);
  Json j = decomposition_to_json(dr, bases);
  std::ostringstream text;
  text << "F(" << spec << "): rank " << dr.total_rank << ", dims";
  for (const auto& c : dr.components) text << " " << c.dimension;
  text << "\nchecks: dims-sum " << dr.dims_sum_ok << ", direct-sum "
       << dr.direct_sum_ok << ", uv-identity " << dr.uv_identity_ok << "\n";
  emit(o, j, text.str());
  bool ok = dr.dims_sum_ok && dr.direct_sum_ok && dr.uv_identity_ok;
  for (const auto& c : dr.components) ok = ok && c.invariance_ok;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fibered double Burnside algebra computations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", opt.cache_dir,
                 "persistent lattice/automorphism cache directory");
  app.add_option("--seed", opt.seed, "seed for sampled sweeps (default 0)");
  app.add_option("--max-lattice", opt.max_lattice,
                 "override the subgroup-lattice order cap");

  std::string spec, family, suite = "phi", m_spec, l_spec;
  int max_order = 32;
  bool bases = false;

  CLI::App* c_group = app.add_subcommand("group", "structural report");
  c_group->add_option("spec", spec)->required();

  CLI::App* c_idem = app.add_subcommand("idem", "idempotent families");
  c_idem->add_option("family", family)->required();
  c_idem->add_option("spec", spec)->required();
  c_idem->add_option("--M", m_spec, "atoric part selector for cM");
  c_idem->add_option("--L", l_spec, "atoric part selector for bL");

  CLI::App* c_verify = app.add_subcommand("verify", "identity suites");
  c_verify->add_option("spec", spec)->required();
  c_verify->add_option(
      "--suite", suite,
      "mackey|phi|epsilon|blocks|decomposition|atoric|resolution");
  c_verify->add_option("--max-order", max_order, "catalog bound for resolution");

  CLI::App* c_atoric = app.add_subcommand("atoric", "atoricity breakdown");
  c_atoric->add_option("spec", spec)->required();

  CLI::App* c_resolve = app.add_subcommand("resolve", "central resolution search");
  c_resolve->add_option("M", m_spec)->required();
  c_resolve->add_option("L", l_spec)->required();
  c_resolve->add_option("--max-order", max_order, "catalog bound (default 32)");

  CLI::App* c_dec = app.add_subcommand("decompose", "evaluation decomposition");
  c_dec->add_option("spec", spec)->required();
  c_dec->add_flag("--bases", bases, "include image bases in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!opt.cache_dir.empty()) cachefs::set_cache_dir(opt.cache_dir);
  if (opt.max_lattice > 0) caps().lattice = opt.max_lattice;

  try {
    if (c_group->parsed()) return cmd_group(opt, spec);
    if (c_idem->parsed()) return cmd_idem(opt, family, spec, m_spec, l_spec);
    if (c_verify->parsed()) return cmd_verify(opt, spec, suite, max_order);
    if (c_atoric->parsed()) return cmd_atoric(opt, spec);
    if (c_resolve->parsed()) return cmd_resolve(opt, m_spec, l_spec, max_order);
    if (c_dec->parsed()) return cmd_decompose(opt, spec, bases);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
