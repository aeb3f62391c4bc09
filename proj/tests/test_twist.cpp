#include "doctest.h"
#include "fixtures.hpp"
#include "twistk/builders.hpp"
#include "twistk/errors.hpp"
#include "twistk/isomorphism.hpp"
#include "twistk/twist.hpp"

using namespace twistk;

TEST_CASE("trivial twist is the base groupoid") {
  auto g = make_pair_groupoid(2);
  auto t = build_sigma_omega(g, TwoCocycle::constant_one(g), 1);
  CHECK(t.total->num_arrows() == g->num_arrows());
  CHECK(brute_force_isomorphic(*g, *t.total).isomorphic);
  CHECK(validate_twist(t).ok());
  CHECK(canonical_section_cocycle(t).table_equal(TwoCocycle::constant_one(g)));
}

TEST_CASE("arrow and unit counts of the extension") {
  auto g = make_pair_groupoid(2);
  auto t = build_sigma_omega(g, TwoCocycle::constant_one(g), 2);
  CHECK(t.total->num_arrows() == 8);
  CHECK(t.total->num_units() == 2);
  CHECK(validate_groupoid(*t.total).ok());
  CHECK(validate_twist(t).ok());
}

TEST_CASE("Z_2 with w(a,a) = -1 extends to Z_4") {
  auto z2 = make_group_groupoid(make_product_cyclic_group({2}));
  TwoCocycle w = TwoCocycle::constant_one(z2);
  w.set(1, 1, CircleValue::turns(1, 2));
  REQUIRE(validate_cocycle(w).ok());

  auto t = build_sigma_omega(z2, w, 2);
  CHECK(t.total->num_arrows() == 4);
  CHECK(validate_twist(t).ok());
  auto z4 = make_group_groupoid(make_product_cyclic_group({4}));
  CHECK(brute_force_isomorphic(*t.total, *z4).isomorphic);
}

TEST_CASE("cocycle round trip is bit exact") {
  auto g = fixtures::z2z2_groupoid();
  auto clock = fixtures::clock_shift_cocycle(g, 2);
  auto t = build_sigma_omega(g, clock, 2);
  CHECK(validate_twist(t).ok());
  CHECK(canonical_section_cocycle(t).table_equal(clock));

  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    auto w = coboundary(fixtures::random_cochain(g, seed, 8));
    auto t8 = build_sigma_omega(g, w, 8);
    CHECK(validate_twist(t8).ok());
    CHECK(canonical_section_cocycle(t8).table_equal(w));
  }
}

TEST_CASE("changing the section changes the cocycle by a coboundary") {
  auto g = fixtures::z2z2_groupoid();
  auto w = coboundary(fixtures::random_cochain(g, 9, 4));
  auto t = build_sigma_omega(g, w, 4);

  // section s'(g) = (g, k[g]) twists the recovered table by del b with
  // b(g) = exp(2 pi i k[g] / m)
  std::vector<int> k(g->num_arrows(), 0);
  std::vector<CircleValue> bv(g->num_arrows(), CircleValue::one());
  for (int a = 0; a < g->num_arrows(); ++a) {
    if (g->is_unit(a)) continue;
    k[a] = (a * 3) % 4;
    bv[a] = CircleValue::turns(k[a], 4);
  }
  auto recovered = section_cocycle(t, k);
  auto expected = multiply_cocycles(w, coboundary(OneCochain(g, bv)));
  CHECK(recovered.table_equal(expected));
}

TEST_CASE("non root of unity is rejected") {
  auto g = fixtures::z2z2_groupoid();
  auto w = fixtures::clock_shift_cocycle(g, 2);  // values in C_2
  CHECK_THROWS_AS(build_sigma_omega(g, w, 3), Error);
}

TEST_CASE("tampered extension fails validation") {
  auto g = make_group_groupoid(make_product_cyclic_group({2}));
  auto t = build_sigma_omega(g, TwoCocycle::constant_one(g), 2);
  REQUIRE(validate_twist(t).ok());
  FiniteTwist broken = t;
  broken.j_map[1] = 1 - broken.j_map[1];  // j no longer a homomorphism
  CHECK_FALSE(validate_twist(broken).ok());
}
