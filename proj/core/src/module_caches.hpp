// Private cache container living inside each Group.  Only .cpp files include
// this; the public headers see an opaque detail::ModuleCaches.  All entries
// are write-once per key and derived purely from the group, so concurrent
// duplicate fills would be idempotent.

#ifndef FIBURN_SRC_MODULE_CACHES_HPP
#define FIBURN_SRC_MODULE_CACHES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "fiburn/characters.hpp"
#include "fiburn/group.hpp"

namespace fiburn::detail {

using ElemsKey = std::vector<Elt>;
using SectionKey = std::pair<ElemsKey, ElemsKey>;

struct ModuleCaches {
  std::once_flag lattice_once;
  std::optional<SubgroupLattice> lattice;
  std::optional<std::string> lattice_error;

  std::once_flag aut_once;
  std::vector<GroupMap> automorphisms;
  std::vector<bool> inner_flags;
  std::optional<std::string> aut_error;

  std::optional<std::vector<Elt>> min_gens;
  std::optional<Subgroup> center, derived, frattini;
  std::optional<std::vector<Subgroup>> normal_subs, maximal_subs;
  std::optional<std::vector<SectionClass>> minimal_sections;
  std::optional<int> exponent;

  std::map<ElemsKey, MaterializedSubgroup> materialized;
  std::map<ElemsKey, QuotientGroup> quotients;
  std::map<ElemsKey, Subgroup> frattini_of;
  std::map<SectionKey, SectionQuotient> section_quotients;

  std::map<ElemsKey, std::vector<Character>> hom_groups;
  std::map<SectionKey, long> mobius_sub;
  std::map<SectionKey, long> mobius_norm;
  std::map<int, PairPoset> pair_posets;  // keyed by PosetVariant
};

}  // namespace fiburn::detail

#endif  // FIBURN_SRC_MODULE_CACHES_HPP
