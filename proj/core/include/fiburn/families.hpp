// Family constructors and the group-spec grammar.
//
// Grammar: C<n>, D<n> (dihedral of order n, n even), Q8, Q16, M<p^k>
// (modular group written as its order, e.g. M16), X(p,l,+) / X(p,l,-)
// (extraspecial of order p^(2l+1)), A x B (direct product, left
// associative), cp(A@z, B@w) (central product over the elements z, w given
// by id or the keyword center-involution), table:<path> (file with the
// order on the first line and the Cayley table rows after it).

#ifndef FIBURN_FAMILIES_HPP
#define FIBURN_FAMILIES_HPP

#include <string>

#include "fiburn/group.hpp"

namespace fiburn {

GroupPtr build_group(const std::string& spec);  // ParseError / MathError

GroupPtr cyclic(int n);
GroupPtr dihedral(int order);      // order even
GroupPtr quaternion(int order);    // 8 or 16
GroupPtr modular_group(int order); // p^k with k >= 3
GroupPtr extraspecial(int p, int l, char sign);  // sign '+' or '-'
GroupPtr from_table_file(const std::string& path);

/// The unique central element of order 2; MathError when absent or ambiguous.
Elt center_involution(const GroupPtr& g);

}  // namespace fiburn

#endif  // FIBURN_FAMILIES_HPP
