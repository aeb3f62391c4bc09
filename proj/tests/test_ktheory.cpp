#include "doctest.h"
#include "fixtures.hpp"
#include "twistk/builders.hpp"
#include "twistk/errors.hpp"
#include "twistk/ktheory.hpp"

using namespace twistk;

namespace {

K0Data expect(int k, std::vector<int> sizes) {
  K0Data d;
  d.k = k;
  d.block_sizes = sizes;
  d.unit_class = std::move(sizes);
  return d;
}

}  // namespace

TEST_CASE("matrix units and small groups") {
  auto p2 = make_pair_groupoid(2);
  CHECK(k0_equal(k0(p2, TwoCocycle::constant_one(p2)), expect(1, {2})));

  auto z3 = make_group_groupoid(make_product_cyclic_group({3}));
  CHECK(k0_equal(k0(z3, TwoCocycle::constant_one(z3)), expect(3, {1, 1, 1})));

  auto d3 = make_discrete_groupoid({"x", "y", "z"});
  CHECK(k0_equal(k0(d3, TwoCocycle::constant_one(d3)), expect(3, {1, 1, 1})));

  auto u = disjoint_union({make_pair_groupoid(2), make_pair_groupoid(3)});
  CHECK(k0_equal(k0(u, TwoCocycle::constant_one(u)), expect(2, {2, 3})));
}

TEST_CASE("center dimension counts blocks") {
  auto g = fixtures::z2z2_groupoid();
  auto triv = TwoCocycle::constant_one(g);
  auto alg1 = structure_constants(g, triv);
  CHECK(center(alg1).dimension() == 4);

  auto clock = fixtures::clock_shift_cocycle(g, 2);
  auto alg2 = structure_constants(g, clock);
  CHECK(center(alg2).dimension() == 1);
  CHECK(minimal_central_idempotents(alg2, center(alg2)).size() == 1);
}

TEST_CASE("k0 is invariant under coboundary twisting") {
  auto g = fixtures::z2z2_groupoid();
  auto clock = fixtures::clock_shift_cocycle(g, 2);
  auto base = k0(g, clock);
  for (unsigned seed : {2u, 4u, 6u}) {
    auto w = multiply_cocycles(
        clock, coboundary(fixtures::random_cochain(g, seed, 12)));
    CHECK(k0_equal(k0(g, w), base));
  }
}

TEST_CASE("k0 is invariant under relabeling") {
  auto p3 = make_pair_groupoid(3);
  std::vector<int> perm = {8, 1, 6, 3, 0, 5, 2, 7, 4};
  auto q = relabel(*p3, perm);
  CHECK(k0_equal(k0(p3, TwoCocycle::constant_one(p3)),
                 k0(q, TwoCocycle::constant_one(q))));
}

TEST_CASE("k0_equal compares multisets") {
  K0Data a = expect(2, {1, 3});
  K0Data b = expect(2, {3, 1});
  K0Data c = expect(2, {2, 2});
  CHECK(k0_equal(a, b));
  CHECK_FALSE(k0_equal(a, c));
  CHECK_FALSE(k0_equal(a, expect(1, {3})));
}

TEST_CASE("homotopy invariance verdicts") {
  auto g = fixtures::z2z2_groupoid();
  auto h = CocycleHomotopy::coboundary_path(fixtures::random_cochain(g, 17, 6));
  auto rep = verify_homotopy_invariance(g, h, 5);
  CHECK(rep.pass);
  CHECK(rep.samples.size() == 5);
  CHECK(rep.samples.front().t == 0.0);
  CHECK(rep.samples.back().t == 1.0);
  for (const auto& s : rep.samples) {
    CHECK(s.valid);
    CHECK(k0_equal(s.k0, rep.samples.front().k0));
  }
  CHECK(rep.level == "ALGEBRA_DATA");

  CHECK_THROWS_AS(verify_homotopy_invariance(g, h, 1), Error);
}

TEST_CASE("invalid sample turns the verdict to FAIL") {
  auto g = fixtures::z2z2_groupoid();
  // piecewise table with a broken middle sample
  auto good = TwoCocycle::constant_one(g);
  auto broken = TwoCocycle::constant_one(g);
  broken.set(1, 1, CircleValue::turns(1, 2));
  broken.set(1, 2, CircleValue::turns(1, 3));  // violates the identity
  auto h = CocycleHomotopy::table_of_samples(
      {{0.0, good}, {0.5, broken}, {1.0, good}});
  auto rep = verify_homotopy_invariance(g, h, 3);
  CHECK_FALSE(rep.pass);
  bool saw_invalid = false;
  for (const auto& s : rep.samples)
    if (!s.valid) saw_invalid = true;
  CHECK(saw_invalid);
}
