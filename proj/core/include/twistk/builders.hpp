#ifndef TWISTK_BUILDERS_HPP
#define TWISTK_BUILDERS_HPP

#include <string>
#include <vector>

#include "twistk/groupoid.hpp"

namespace twistk {

// A finite group given by its multiplication table.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
  int identity = -1;  // filled by check_group

  int order() const { return static_cast<int>(names.size()); }
  int inverse(int a) const;
};

// Verifies associativity, identity and inverses; fills `identity`.
// Throws NotAGroup otherwise.
void check_group(GroupTable& t);

// Z_{m1} x ... x Z_{mk} with element names "(a1,...,ak)".
GroupTable make_product_cyclic_group(const std::vector<int>& moduli);

// Pair groupoid on n points: units "1".."n", arrows "(i,j)".
GroupoidPtr make_pair_groupoid(int n);

// One-unit groupoid whose arrows are the group elements.
GroupoidPtr make_group_groupoid(GroupTable table);

// Discrete groupoid: units only.
GroupoidPtr make_discrete_groupoid(const std::vector<std::string>& points);

// Transformation groupoid of a (checked) group action on a finite set.
// action[gamma][x] = gamma . x; arrows "(x,gamma)" with src x, dst gamma.x.
GroupoidPtr make_transformation_groupoid(
    GroupTable group, const std::vector<std::string>& space,
    const std::vector<std::vector<int>>& action);

// Disjoint union; arrow/unit ids are prefixed "0:", "1:", ...
GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts);

// Same groupoid with arrows listed in a permuted order. `perm` maps old
// arrow index to new position; used for relabeling-invariance tests.
GroupoidPtr relabel(const FiniteGroupoid& g, const std::vector<int>& perm);

}  // namespace twistk

#endif
