#include "doctest.h"
#include "fixtures.hpp"
#include "twistk/builders.hpp"
#include "twistk/errors.hpp"
#include "twistk/isomorphism.hpp"
#include "twistk/ktheory.hpp"
#include "twistk/semidirect.hpp"

using namespace twistk;

namespace {
int ic(const GroupCocycle& gc, const std::string& name) {
  for (int i = 0; i < gc.group.order(); ++i)
    if (gc.group.names[i] == name) return i;
  return -1;
}
}  // namespace

TEST_CASE("directed action validation") {
  auto a = fixtures::swap_action();
  CHECK(validate_directed_action(a).ok());
  CHECK(validate_directed_action(a, /*left_divisibility=*/true).ok());

  // P = {e} only
  DirectedAction trivial = a;
  trivial.P = {0};
  trivial.dom = {trivial.dom[0]};
  trivial.T = {trivial.T[0]};
  CHECK(validate_directed_action(trivial).ok());

  // break T_{aa} = T_a T_a = id
  DirectedAction broken = a;
  broken.T[1][0] = 0;  // a fixes point 1 but still swaps point 2
  CHECK_FALSE(validate_directed_action(broken).ok());
}

TEST_CASE("swap action builds the pair groupoid") {
  auto sd = build_semidirect_groupoid(fixtures::swap_action());
  CHECK(sd.groupoid->num_units() == 2);
  CHECK(sd.groupoid->num_arrows() == 4);
  CHECK(validate_groupoid(*sd.groupoid).ok());
  auto p2 = make_pair_groupoid(2);
  CHECK(brute_force_isomorphic(*sd.groupoid, *p2).isomorphic);

  auto data = k0(sd.groupoid, TwoCocycle::constant_one(sd.groupoid));
  CHECK(data.k == 1);
  CHECK(data.block_sizes == std::vector<int>{2});
}

TEST_CASE("label is a homomorphism to gamma") {
  auto a = fixtures::swap_action();
  auto sd = build_semidirect_groupoid(a);
  for (auto [g, h] : composable_pairs(*sd.groupoid).pairs) {
    int gh = sd.groupoid->compose(g, h);
    CHECK(sd.label[gh] == a.gamma.mul[sd.label[g]][sd.label[h]]);
  }
}

TEST_CASE("P = {e} gives the discrete groupoid") {
  DirectedAction a = fixtures::swap_action();
  a.P = {0};
  a.dom = {a.dom[0]};
  a.T = {a.T[0]};
  auto sd = build_semidirect_groupoid(a);
  auto d2 = make_discrete_groupoid({"1", "2"});
  CHECK(brute_force_isomorphic(*sd.groupoid, *d2).isomorphic);
}

TEST_CASE("one-point action gives the group groupoid") {
  DirectedAction a;
  a.gamma = make_product_cyclic_group({2, 2});
  a.P = {0, 1, 2, 3};
  a.space = {"pt"};
  a.dom.assign(4, {0});
  a.T.assign(4, {{0, 0}});
  auto sd = build_semidirect_groupoid(a);
  CHECK(brute_force_isomorphic(*sd.groupoid, *fixtures::z2z2_groupoid())
            .isomorphic);
}

TEST_CASE("semidirect groupoid of a global action matches the transformation groupoid") {
  auto a = fixtures::swap_action();
  auto sd = build_semidirect_groupoid(a);
  auto tg = make_transformation_groupoid(a.gamma, a.space, {{0, 1}, {1, 0}});
  CHECK(brute_force_isomorphic(*sd.groupoid, *tg).isomorphic);
}

TEST_CASE("group cocycle validation and the bilinear family") {
  auto gc = bilinear_cocycle({2, 2}, {{0, 0}, {1, 0}});
  CHECK(validate_group_cocycle(gc).ok());
  CHECK(gc.at(ic(gc, "(0,1)"), ic(gc, "(1,0)")).equals(CircleValue::turns(1, 2)));
  CHECK(gc.at(ic(gc, "(1,0)"), ic(gc, "(0,1)")).is_one());

  auto zero = bilinear_cocycle({2, 2}, {{0, 0}, {0, 0}});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(zero.at(a, b).is_one());

  // Q entry incompatible with the moduli: 1 * 2 != 0 mod lcm(2,4) = 4
  CHECK_THROWS_AS(bilinear_cocycle({2, 4}, {{0, 1}, {0, 0}}), Error);
}

TEST_CASE("induced cocycles and coboundary transport") {
  DirectedAction a;
  a.gamma = make_product_cyclic_group({2, 2});
  a.P = {0, 1, 2, 3};
  a.space = {"pt"};
  a.dom.assign(4, {0});
  a.T.assign(4, {{0, 0}});
  auto sd = build_semidirect_groupoid(a);

  auto gc = bilinear_cocycle({2, 2}, {{0, 0}, {1, 0}});
  auto w = induce_cocycle_from_group(gc, sd);
  CHECK(validate_cocycle(w).ok());
  auto data = k0(sd.groupoid, w);
  CHECK(data.k == 1);
  CHECK(data.block_sizes == std::vector<int>{2});

  // gc . del b on gamma induces w . del (b o label)
  GroupCocycle gcb = gc;
  std::vector<CircleValue> b(4, CircleValue::one());
  b[1] = CircleValue::turns(1, 4);
  b[2] = CircleValue::turns(3, 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      gcb.values[x][y] =
          gc.at(x, y) * b[x] * b[y] * b[a.gamma.mul[x][y]].conj();
  REQUIRE(validate_group_cocycle(gcb).ok());
  auto wb = induce_cocycle_from_group(gcb, sd);

  std::vector<CircleValue> bl(sd.groupoid->num_arrows());
  for (int g = 0; g < sd.groupoid->num_arrows(); ++g) bl[g] = b[sd.label[g]];
  auto expected =
      multiply_cocycles(w, coboundary(OneCochain(sd.groupoid, bl)));
  CHECK(wb.table_equal(expected));
}

TEST_CASE("induced homotopy passes through samplewise") {
  auto a = fixtures::swap_action();
  auto sd = build_semidirect_groupoid(a);
  GroupCocycle triv;
  triv.group = a.gamma;
  triv.values.assign(2, std::vector<CircleValue>(2, CircleValue::one()));
  auto h = induce_homotopy_from_group({{0.0, triv}, {1.0, triv}}, sd);
  CHECK(h.sample(0.5).table_equal(TwoCocycle::constant_one(sd.groupoid)));
}
