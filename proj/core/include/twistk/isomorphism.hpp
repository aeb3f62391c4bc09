#ifndef TWISTK_ISOMORPHISM_HPP
#define TWISTK_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "twistk/groupoid.hpp"

namespace twistk {

struct IsomorphismResult {
  bool isomorphic = false;
  // arrow index in `a` -> arrow index in `b`, when isomorphic
  std::vector<int> map;
};

// Exhaustive search for a groupoid isomorphism, pruned by unit-degree
// profiles. Throws SizeCapExceeded when |arrows(a)| > limit.
IsomorphismResult brute_force_isomorphic(const FiniteGroupoid& a,
                                         const FiniteGroupoid& b,
                                         int limit = 24);

}  // namespace twistk

#endif
