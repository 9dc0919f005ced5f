#include "fiburn/functor_eval.hpp"

#include <algorithm>

#include "fiburn/linalg.hpp"

namespace fiburn {

SpacePtr module_space(const GroupPtr& g) {
  return BisetSpace::get(g, trivial_group());
}

const std::vector<BasisLabel>& module_basis(const GroupPtr& g) {
  return module_space(g)->basis();
}

ModuleVector module_unit(const GroupPtr& g, const BasisLabel& label) {
  ModuleVector v(module_space(g));
  v.add_term(label, 1);
  return v;
}

ModuleVector act(const AlgebraElement& x, const ModuleVector& v) {
  return mackey_product(x, v);
}

namespace {

std::vector<Rat> coords_of(const ModuleVector& v,
                           const std::vector<BasisLabel>& basis) {
  std::vector<Rat> out(basis.size(), Rat(0));
  for (const auto& [l, c] : v.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), l);
    if (it == basis.end() || !(*it == l))
      throw MathError("module vector outside the enumerated basis");
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

}  // namespace

DecompositionReport decompose(const GroupPtr& g) {
  DecompositionReport rep;
  rep.group = g;
  const std::vector<BasisLabel>& basis = module_basis(g);
  rep.total_rank = static_cast<int>(basis.size());

  std::vector<EpsilonIndex> indices = epsilon_indices(g);
  std::vector<UVPair> uvs;
  uvs.reserve(indices.size());
  for (const auto& idx : indices) uvs.push_back(uv(g, idx));

  RowSpace joint(rep.total_rank);
  int dim_sum = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    EpsilonComponent comp;
    comp.index = indices[i];
    AlgebraElement eps_elt = (Rat(1) / Rat(indices[i].normalizer_index)) *
                             mackey_product(uvs[i].u, uvs[i].v);
    RowSpace image(rep.total_rank);
    std::vector<AlgebraElement> isos = normalizer_isos(g, indices[i]);
    for (const BasisLabel& b : basis) {
      ModuleVector w = act(eps_elt, module_unit(g, b));
      if (w.is_zero()) continue;
      if (image.add(coords_of(w, basis))) comp.image_basis.push_back(w);
      joint.add(coords_of(w, basis));
      // invariance of the T/S component: v.w is fixed by every Iso(c_g)
      ModuleVector vw = act(uvs[i].v, module_unit(g, b));
      for (const AlgebraElement& cg : isos)
        if (!(act(cg, vw) == vw)) comp.invariance_ok = false;
    }
    comp.dimension = image.rank();
    dim_sum += comp.dimension;
    rep.components.push_back(std::move(comp));
  }
  rep.dims_sum_ok = dim_sum == rep.total_rank;
  rep.direct_sum_ok = joint.rank() == dim_sum;

  // U o V = id on the basis of F(G); V o U = id on the spanning tuples V(b).
  rep.uv_identity_ok = true;
  for (const BasisLabel& b : basis) {
    ModuleVector w = module_unit(g, b);
    std::vector<ModuleVector> tuple;
    tuple.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
      tuple.push_back((Rat(1) / Rat(indices[i].normalizer_index)) *
                      act(uvs[i].v, w));
    ModuleVector back(module_space(g));
    for (std::size_t i = 0; i < indices.size(); ++i)
      back += act(uvs[i].u, tuple[i]);
    if (!(back == w)) rep.uv_identity_ok = false;
    // V(U(tuple)) must reproduce the tuple
    for (std::size_t i = 0; i < indices.size(); ++i) {
      ModuleVector again = (Rat(1) / Rat(indices[i].normalizer_index)) *
                           act(uvs[i].v, back);
      if (!(again == tuple[i])) rep.uv_identity_ok = false;
    }
  }
  return rep;
}

}  // namespace fiburn
