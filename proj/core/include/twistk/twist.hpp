#ifndef TWISTK_TWIST_HPP
#define TWISTK_TWIST_HPP

#include <cstdint>
#include <vector>

#include "twistk/cocycle.hpp"
#include "twistk/groupoid.hpp"
#include "twistk/report.hpp"

namespace twistk {

// The extension groupoid Sigma_w of a cocycle valued in the cyclic group
// C_m = { exp(2 pi i k / m) }. Total arrows are pairs (g, k mod m) with id
// "(<g>;<k>)"; arrow index of (g,k) is g*m + k.
struct FiniteTwist {
  GroupoidPtr base;
  int m = 1;
  GroupoidPtr total;
  std::vector<int> j_map;  // total arrow -> base arrow

  int inclusion(int unit_arrow, int k) const;   // i(u, z_k) as a total arrow
  int projection(int sigma) const { return j_map[sigma]; }
  // the T-action z_k . sigma = i(r(sigma), z_k) sigma, restricted to C_m
  int circle_action(int k, int sigma) const;
};

// Builds Sigma_w from a normalized cocycle valued in C_m. Throws
// NotRootOfUnity when some value is not an m-th root of unity.
FiniteTwist build_sigma_omega(const GroupoidPtr& g, const TwoCocycle& w,
                              int m);

// Extension axioms: i injective onto j^-1(units), j a surjective
// homomorphism with fibers of size m, centrality over all (sigma, z).
ValidationReport validate_twist(const FiniteTwist& t);

// Recovers the cocycle of the canonical section s(g) = (g, 1).
TwoCocycle canonical_section_cocycle(const FiniteTwist& t);

// Same round trip through the section g -> (g, k[g]); k must vanish on
// units. Changing the section changes the result by a coboundary.
TwoCocycle section_cocycle(const FiniteTwist& t, const std::vector<int>& k);

}  // namespace twistk

#endif
