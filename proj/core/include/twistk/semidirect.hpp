#ifndef TWISTK_SEMIDIRECT_HPP
#define TWISTK_SEMIDIRECT_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "twistk/builders.hpp"
#include "twistk/circle.hpp"
#include "twistk/cocycle.hpp"
#include "twistk/groupoid.hpp"
#include "twistk/homotopy.hpp"
#include "twistk/report.hpp"

namespace twistk {

// Action of a subsemigroup P of a finite group by partial injections of
// a finite set. T_p is stored as an explicit map on dom(p).
struct DirectedAction {
  GroupTable gamma;
  std::vector<int> P;  // element indices, identity included, ascending
  std::vector<std::string> space;
  // indexed by position in P
  std::vector<std::vector<int>> dom;  // ascending point indices
  std::vector<std::unordered_map<int, int>> T;

  int p_position(int element) const;  // -1 when not in P
  bool in_dom(int p_pos, int x) const;
  int apply(int p_pos, int x) const;  // -1 outside dom
};

// Conditions: identity acts as id on all of X, T_{pq} = T_p . T_q with
// the exact domain law, P closed under multiplication, and directedness
// (upper bound r of p taken as r in pP; left divisibility via the flag).
ValidationReport validate_directed_action(const DirectedAction& a,
                                          bool left_divisibility = false);

// Arrows (x, gamma, y) with gamma = p^{-1} q and T_p(x) = T_q(y) for some
// p, q in P; src = y, dst = x; (x,g,y)(y,g',z) = (x,gg',z). `label` maps
// each arrow to its gamma.
struct SemidirectGroupoid {
  GroupoidPtr groupoid;
  std::vector<int> label;
};

SemidirectGroupoid build_semidirect_groupoid(const DirectedAction& a);

// Normalized 2-cocycle on a finite group.
struct GroupCocycle {
  GroupTable group;
  std::vector<std::vector<CircleValue>> values;

  const CircleValue& at(int a, int b) const { return values[a][b]; }
};

ValidationReport validate_group_cocycle(const GroupCocycle& gc,
                                        double tol = 1e-9);

// w(g1, g2) = gc(label(g1), label(g2)); the result is re-validated and a
// failure is raised as CocycleViolation (it cannot happen when the label
// is a homomorphism and gc is a cocycle).
TwoCocycle induce_cocycle_from_group(const GroupCocycle& gc,
                                     const SemidirectGroupoid& g);

// Samplewise transport of a path of group cocycles; t values must
// include 0 and 1.
CocycleHomotopy induce_homotopy_from_group(
    const std::vector<std::pair<double, GroupCocycle>>& samples,
    const SemidirectGroupoid& g);

// w(n, m) = exp(2 pi i sum_ab Q[a][b] n_a m_b / L) on Z_{m1} x ... x
// Z_{mk}, L = lcm(moduli). Exact rational values. Throws
// NotWellDefinedOnQuotient unless Q[a][b] m_a and Q[a][b] m_b vanish
// mod L for all a, b.
GroupCocycle bilinear_cocycle(const std::vector<int>& moduli,
                              const std::vector<std::vector<int>>& Q);

}  // namespace twistk

#endif
