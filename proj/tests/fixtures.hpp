#ifndef TWISTK_TESTS_FIXTURES_HPP
#define TWISTK_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "twistk/algebra.hpp"
#include "twistk/builders.hpp"
#include "twistk/cocycle.hpp"
#include "twistk/groupoid.hpp"
#include "twistk/semidirect.hpp"

namespace fixtures {

using namespace twistk;

// group groupoid arrow index == group element index
inline TwoCocycle lift_group_cocycle(const GroupCocycle& gc,
                                     const GroupoidPtr& g) {
  TwoCocycle w(g);
  for (auto [a, b] : composable_pairs(*g).pairs) w.set(a, b, gc.at(a, b));
  return w;
}

inline TwoCocycle clock_shift_cocycle(const GroupoidPtr& g, int m) {
  return lift_group_cocycle(bilinear_cocycle({m, m}, {{0, 0}, {1, 0}}), g);
}

inline GroupoidPtr z2z2_groupoid() {
  return make_group_groupoid(make_product_cyclic_group({2, 2}));
}

inline GroupoidPtr z3z3_groupoid() {
  return make_group_groupoid(make_product_cyclic_group({3, 3}));
}

// seeded random exact cochain with angles k/den of a turn
inline OneCochain random_cochain(const GroupoidPtr& g, unsigned seed,
                                 int den = 12) {
  std::mt19937 rng(seed);
  std::vector<CircleValue> vals(g->num_arrows(), CircleValue::one());
  for (int a = 0; a < g->num_arrows(); ++a) {
    if (g->is_unit(a)) continue;
    vals[a] = CircleValue::turns(static_cast<std::int64_t>(rng() % den), den);
  }
  return OneCochain(g, std::move(vals));
}

inline AlgebraElement random_element(const GroupoidPtr& g, std::mt19937& rng) {
  AlgebraElement f = AlgebraElement::zero(g);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& c : f.coeff) c = {u(rng), u(rng)};
  return f;
}

inline DirectedAction swap_action() {
  DirectedAction a;
  a.gamma.names = {"e", "a"};
  a.gamma.mul = {{0, 1}, {1, 0}};
  check_group(a.gamma);
  a.P = {0, 1};
  a.space = {"1", "2"};
  a.dom = {{0, 1}, {0, 1}};
  a.T = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
  return a;
}

}  // namespace fixtures

#endif
