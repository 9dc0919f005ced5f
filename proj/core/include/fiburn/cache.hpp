// Persistent cache for the two expensive per-group enumerations (subgroup
// lattice, automorphisms).  Entries are content-addressed by a hash of the
// Cayley table plus a format-version tag; corrupt or mismatched entries are
// ignored and rebuilt.  Purely an optimisation: cold and warm runs must give
// identical results.

#ifndef FIBURN_CACHE_HPP
#define FIBURN_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fiburn/group.hpp"

namespace fiburn::cachefs {

/// Empty string disables caching (the default).
void set_cache_dir(std::string dir);
const std::string& cache_dir();

std::string group_content_hash(const Group& g);

std::optional<std::vector<std::vector<Elt>>> load_subgroups(const Group& g);
void store_subgroups(const Group& g, const std::vector<std::vector<Elt>>& subs);

std::optional<std::vector<std::vector<Elt>>> load_automorphisms(const Group& g);
void store_automorphisms(const Group& g,
                         const std::vector<std::vector<Elt>>& images);

}  // namespace fiburn::cachefs

#endif  // FIBURN_CACHE_HPP
