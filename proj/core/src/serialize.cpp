#include "fiburn/serialize.hpp"

#include <sstream>

namespace fiburn {

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  std::ostringstream os;
  if (c.get_den() == 1)
    os << c.get_num();
  else
    os << c.get_num() << "/" << c.get_den();
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string qz_to_string(const QZ& v) {
  return std::to_string(v.num) + "/" + std::to_string(v.den);
}

QZ qz_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return QZ(std::stoll(s), 1);
  return QZ(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Json character_to_json(const Character& c) {
  Json out = Json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i].is_zero()) continue;
    out.push_back(Json::array({c.domain.elems[i], qz_to_string(c.values[i])}));
  }
  return out;
}

Character character_from_json(const Json& j, const Subgroup& domain) {
  Character c = trivial_character(domain);
  for (const auto& entry : j) {
    Elt e = entry.at(0).get<Elt>();
    int pos = domain.position_of(e);
    if (pos < 0) throw std::invalid_argument("character entry outside domain");
    c.values[pos] = qz_from_string(entry.at(1).get<std::string>());
  }
  return c;
}

Json element_to_json(const AlgebraElement& x) {
  Json out;
  out["dst"] = x.dst()->name();
  out["src"] = x.src()->name();
  Json terms = Json::array();
  const BisetSpace& sp = *x.space();
  for (const auto& [label, coeff] : x.terms()) {
    FiberedPair fp = sp.decode(label);
    Json term;
    Json gens = Json::array();
    for (Elt g : subgroup_generators(fp.U))
      gens.push_back(Json::array({sp.left_of(g), sp.right_of(g)}));
    term["U"] = std::move(gens);
    term["chi"] = character_to_json(fp.upsilon);
    term["coeff"] = rat_to_string(coeff);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

AlgebraElement element_from_json(const Json& j, const GroupPtr& dst,
                                 const GroupPtr& src) {
  SpacePtr space = BisetSpace::get(dst, src);
  AlgebraElement out(space);
  for (const auto& term : j.at("terms")) {
    std::vector<Elt> gens;
    for (const auto& pr : term.at("U"))
      gens.push_back(space->pair(pr.at(0).get<Elt>(), pr.at(1).get<Elt>()));
    FiberedPair fp;
    fp.U = space->product()->closure(gens);
    fp.upsilon = character_from_json(term.at("chi"), fp.U);
    if (!is_character(fp.upsilon))
      throw std::invalid_argument("term character fails the homomorphism check");
    out += AlgebraElement::from_pair(space, fp,
                                     rat_from_string(term.at("coeff").get<std::string>()));
  }
  return out;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) {
    Json it;
    it["identity"] = i.identity;
    it["status"] = i.pass ? "pass" : "fail";
    if (!i.pass) it["witness"] = i.witness;
    items.push_back(std::move(it));
  }
  Json out;
  out["all_pass"] = r.all_pass();
  out["items"] = std::move(items);
  return out;
}

std::string subgroup_to_string(const Subgroup& s) {
  std::ostringstream os;
  os << "[";
  std::vector<Elt> gens = subgroup_generators(s);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ",";
    os << gens[i];
  }
  os << "]";
  return os.str();
}

Json resolve_to_json(const std::string& m_spec, const std::string& l_spec,
                     const ResolveResult& r) {
  Json out;
  out["M"] = m_spec;
  out["L"] = l_spec;
  if (r.witness) {
    Json w;
    w["Q"] = r.witness->q_spec;
    Json kgens = Json::array();
    for (Elt g : subgroup_generators(r.witness->k)) kgens.push_back(g);
    Json sgens = Json::array();
    for (Elt g : subgroup_generators(r.witness->s)) sgens.push_back(g);
    w["K"] = std::move(kgens);
    w["S"] = std::move(sgens);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = "none-in-catalog";
  }
  out["catalog_bound"] = r.catalog_bound;
  return out;
}

Json decomposition_to_json(const DecompositionReport& r, bool include_bases) {
  Json out;
  out["group"] = r.group->name();
  out["total_rank"] = r.total_rank;
  out["dims_sum_ok"] = r.dims_sum_ok;
  out["direct_sum_ok"] = r.direct_sum_ok;
  out["uv_identity_ok"] = r.uv_identity_ok;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json jc;
    jc["T"] = subgroup_to_string(c.index.section.T);
    jc["S"] = subgroup_to_string(c.index.section.S);
    jc["quotient_order"] = c.index.quot->order();
    Json orbit = Json::array();
    for (const auto& tag : c.index.orbit) {
      Json jt;
      jt["K"] = subgroup_to_string(tag.K);
      jt["kappa"] = character_to_json(tag.kappa);
      orbit.push_back(std::move(jt));
    }
    jc["orbit"] = std::move(orbit);
    jc["normalizer_index"] = c.index.normalizer_index;
    jc["dimension"] = c.dimension;
    jc["invariant"] = c.invariance_ok;
    if (include_bases) {
      Json vecs = Json::array();
      for (const auto& v : c.image_basis) vecs.push_back(element_to_json(v));
      jc["image_basis"] = std::move(vecs);
    }
    comps.push_back(std::move(jc));
  }
  out["components"] = std::move(comps);
  return out;
}

}  // namespace fiburn
