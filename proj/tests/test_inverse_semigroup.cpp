#include "doctest.h"
#include "fixtures.hpp"
#include "twistk/builders.hpp"
#include "twistk/errors.hpp"
#include "twistk/inverse_semigroup.hpp"
#include "twistk/isomorphism.hpp"
#include "twistk/ktheory.hpp"

using namespace twistk;

namespace {

// group with adjoined zero: names "0" + group element names
SemigroupPtr group_with_zero(const GroupTable& t) {
  int n = t.order();
  std::vector<std::string> names = {"0"};
  names.insert(names.end(), t.names.begin(), t.names.end());
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a + 1][b + 1] = t.mul[a][b] + 1;
  return validate_inverse_semigroup(names, table, 0);
}

// chain semilattice 0 < e < 1 under min
SemigroupPtr chain3() {
  return validate_inverse_semigroup(
      {"0", "e", "1"},
      {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}, 0);
}

}  // namespace

TEST_CASE("inverse semigroup validation") {
  auto s = group_with_zero(make_product_cyclic_group({2}));
  CHECK(s->size() == 3);
  CHECK(s->idempotents.size() == 2);  // 0 and the group identity
  CHECK(s->star[2] == 2);             // the order-2 element is self-inverse

  // left-zero band: two idempotents with xy = x, no unique inverse
  CHECK_THROWS_AS(validate_inverse_semigroup({"a", "b", "0"},
                                             {{0, 0, 2}, {1, 1, 2}, {2, 2, 2}},
                                             2),
                  Error);
}

TEST_CASE("natural order on the chain semilattice") {
  auto s = chain3();
  auto ord = natural_order(*s);
  CHECK(ord[0][1]);
  CHECK(ord[0][2]);
  CHECK(ord[1][2]);
  CHECK_FALSE(ord[2][1]);
  CHECK_FALSE(ord[1][0]);
}

TEST_CASE("spectrum enumerates filters") {
  auto s = chain3();
  // filters on {e, 1}: {1} and {e, 1}
  CHECK(spectrum(*s).size() == 2);

  auto gz = group_with_zero(make_product_cyclic_group({2, 2}));
  CHECK(spectrum(*gz).size() == 1);
}

TEST_CASE("canonical action validates") {
  for (auto s : {chain3(), group_with_zero(make_product_cyclic_group({2}))}) {
    auto ca = canonical_action(s);
    CHECK(validate_twisted_action(ca.action).ok());
  }
}

TEST_CASE("germs of a group with zero recover the group") {
  auto gz = group_with_zero(make_product_cyclic_group({2, 2}));
  auto germ = germ_groupoid(canonical_action(gz).action);
  CHECK(validate_groupoid(*germ.groupoid).ok());
  auto g22 = fixtures::z2z2_groupoid();
  CHECK(brute_force_isomorphic(*germ.groupoid, *g22).isomorphic);
}

TEST_CASE("germs of a semilattice form the discrete groupoid on its spectrum") {
  auto s = chain3();
  auto germ = germ_groupoid(canonical_action(s).action);
  CHECK(validate_groupoid(*germ.groupoid).ok());
  auto d2 = make_discrete_groupoid({"p", "q"});
  CHECK(brute_force_isomorphic(*germ.groupoid, *d2).isomorphic);
}

TEST_CASE("induced cocycle from a twisted action on one character") {
  // (Z_2 x Z_2)^0 with the clock shift group cocycle on the unique point
  auto gz = group_with_zero(make_product_cyclic_group({2, 2}));
  auto gc = bilinear_cocycle({2, 2}, {{0, 0}, {1, 0}});
  auto ca = canonical_action(gz);
  auto action = ca.action;
  for (int s = 1; s < gz->size(); ++s)
    for (int t = 1; t < gz->size(); ++t)
      for (auto& [x, v] : action.omega[{s, t}])
        v = gc.at(s - 1, t - 1);
  REQUIRE(validate_twisted_action(action).ok());

  auto germ = germ_groupoid(action);
  auto w = induced_cocycle_on_germs(action, germ);
  CHECK(validate_cocycle(w).ok());
  auto data = k0(germ.groupoid, w);
  CHECK(data.k == 1);
  CHECK(data.block_sizes == std::vector<int>{2});
}

TEST_CASE("hausdorff listing") {
  auto s = chain3();
  auto ca = canonical_action(s);
  auto rep = hausdorff_check(ca.action);
  CHECK(rep.pass);
  CHECK(rep.union_per_s.size() == 3);
  // elements below "1" are 0, e, 1; their domains cover both characters
  CHECK(rep.union_per_s[2].second.size() == 2);
}
