// JSON wire formats.  Characters serialize as sparse [element id, "a/b"]
// lists (omitted entries are 0); algebra elements as term lists with
// generator pairs, character values and exact rational coefficients.
// Serialisation is deterministic and round-trips bit-exactly.

#ifndef FIBURN_SERIALIZE_HPP
#define FIBURN_SERIALIZE_HPP

#include <json.hpp>

#include "fiburn/algebra.hpp"
#include "fiburn/atoric.hpp"
#include "fiburn/functor_eval.hpp"
#include "fiburn/idempotents.hpp"

namespace fiburn {

using Json = nlohmann::ordered_json;

Json character_to_json(const Character& c);
Character character_from_json(const Json& j, const Subgroup& domain);

Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j, const GroupPtr& dst,
                                 const GroupPtr& src);

Json verify_report_to_json(const VerifyReport& r);
Json resolve_to_json(const std::string& m_spec, const std::string& l_spec,
                     const ResolveResult& r);
Json decomposition_to_json(const DecompositionReport& r, bool include_bases);

std::string subgroup_to_string(const Subgroup& s);

}  // namespace fiburn

#endif  // FIBURN_SERIALIZE_HPP
