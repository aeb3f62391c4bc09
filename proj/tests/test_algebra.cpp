#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "twistk/algebra.hpp"
#include "twistk/builders.hpp"

using namespace twistk;

namespace {

double hom_defect(const AlgebraElement& f1, const AlgebraElement& f2,
                  const TwoCocycle& w) {
  Eigen::MatrixXcd lhs = full_rep(convolve(f1, f2, w), w).full();
  Eigen::MatrixXcd rhs = full_rep(f1, w).full() * full_rep(f2, w).full();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("delta products follow the structure constants") {
  auto g = fixtures::z2z2_groupoid();
  auto w = fixtures::clock_shift_cocycle(g, 2);
  auto alg = structure_constants(g, w);
  for (auto [a, b] : composable_pairs(*g).pairs) {
    auto prod = convolve(AlgebraElement::delta(g, a),
                         AlgebraElement::delta(g, b), w);
    auto expected = alg.product(a, b);
    REQUIRE(expected.result >= 0);
    CHECK(std::abs(prod.coeff[expected.result] -
                   expected.scale.value()) < 1e-15);
  }
}

TEST_CASE("unit element is neutral") {
  auto g = make_pair_groupoid(3);
  auto w = TwoCocycle::constant_one(g);
  std::mt19937 rng(4);
  auto f = fixtures::random_element(g, rng);
  auto e = AlgebraElement::unit(g);
  auto left = convolve(e, f, w);
  auto right = convolve(f, e, w);
  for (int i = 0; i < g->num_arrows(); ++i) {
    CHECK(std::abs(left.coeff[i] - f.coeff[i]) < 1e-15);
    CHECK(std::abs(right.coeff[i] - f.coeff[i]) < 1e-15);
  }
  // and rep(unit) is the identity matrix
  auto m = full_rep(e, w).full();
  CHECK((m - Eigen::MatrixXcd::Identity(m.rows(), m.cols()))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("full_rep is a *-homomorphism on random elements") {
  std::mt19937 rng(0);
  for (auto g : {make_pair_groupoid(3), fixtures::z2z2_groupoid()}) {
    auto w = g->num_units() == 1 ? fixtures::clock_shift_cocycle(g, 2)
                                 : TwoCocycle::constant_one(g);
    for (int trial = 0; trial < 25; ++trial) {
      auto f1 = fixtures::random_element(g, rng);
      auto f2 = fixtures::random_element(g, rng);
      CHECK(hom_defect(f1, f2, w) <= 1e-12);

      Eigen::MatrixXcd star = full_rep(involute(f1, w), w).full();
      Eigen::MatrixXcd adj = full_rep(f1, w).full().adjoint();
      CHECK((star - adj).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("involution is an anti-automorphism and an involution") {
  auto g = fixtures::z2z2_groupoid();
  auto w = fixtures::clock_shift_cocycle(g, 2);
  std::mt19937 rng(13);
  auto f1 = fixtures::random_element(g, rng);
  auto f2 = fixtures::random_element(g, rng);

  auto twice = involute(involute(f1, w), w);
  for (int i = 0; i < g->num_arrows(); ++i)
    CHECK(std::abs(twice.coeff[i] - f1.coeff[i]) < 1e-12);

  auto lhs = involute(convolve(f1, f2, w), w);
  auto rhs = convolve(involute(f2, w), involute(f1, w), w);
  for (int i = 0; i < g->num_arrows(); ++i)
    CHECK(std::abs(lhs.coeff[i] - rhs.coeff[i]) < 1e-12);
}

TEST_CASE("reduced norm satisfies the C* identity") {
  std::mt19937 rng(21);
  for (auto g : {make_pair_groupoid(3), fixtures::z3z3_groupoid()}) {
    auto w = g->num_units() == 1 ? fixtures::clock_shift_cocycle(g, 3)
                                 : TwoCocycle::constant_one(g);
    for (int trial = 0; trial < 20; ++trial) {
      auto f = fixtures::random_element(g, rng);
      double n = reduced_norm(f, w);
      double nn = reduced_norm(convolve(involute(f, w), f, w), w);
      CHECK(std::abs(nn - n * n) <= 1e-9);
    }
  }
}
