#ifndef TWISTK_ALGEBRA_HPP
#define TWISTK_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "twistk/cocycle.hpp"
#include "twistk/groupoid.hpp"

namespace twistk {

// Element of the twisted convolution *-algebra: a complex coefficient per
// arrow.
struct AlgebraElement {
  GroupoidPtr groupoid;
  std::vector<std::complex<double>> coeff;

  static AlgebraElement zero(GroupoidPtr g);
  static AlgebraElement delta(GroupoidPtr g, int arrow);
  static AlgebraElement unit(GroupoidPtr g);  // sum of delta_u over units
};

// (f1 *_w f2)(g) = sum_{h in G^{r(g)}} f1(h) f2(h^-1 g) w(h, h^-1 g)
AlgebraElement convolve(const AlgebraElement& f1, const AlgebraElement& f2,
                        const TwoCocycle& w);

// f*(g) = conj( f(g^-1) w(g, g^-1) )
AlgebraElement involute(const AlgebraElement& f, const TwoCocycle& w);

// Block-diagonal matrix image of the regular representations: the block
// at unit u acts on l^2(G_u) with entry (g,h) = f(g h^-1) w(g h^-1, h).
struct MatrixImage {
  std::vector<int> block_unit;               // unit arrow per block
  std::vector<std::vector<int>> basis;       // arrows indexing rows/cols
  std::vector<Eigen::MatrixXcd> blocks;

  int total_size() const;
  Eigen::MatrixXcd full() const;
};

MatrixImage full_rep(const AlgebraElement& f, const TwoCocycle& w);

// sup over units of the spectral norm of the block
double reduced_norm(const AlgebraElement& f, const TwoCocycle& w);

// Complete structure-constant table: delta_g * delta_h = w(g,h) delta_{gh}.
struct StructuredAlgebra {
  GroupoidPtr groupoid;
  const TwoCocycle* cocycle;
  int dimension;

  struct Product {
    int result;       // arrow index of gh, -1 when not composable
    CircleValue scale;
  };
  std::vector<Product> table;  // g * dimension + h

  const Product& product(int g, int h) const {
    return table[static_cast<std::size_t>(g) * dimension + h];
  }
};

StructuredAlgebra structure_constants(const GroupoidPtr& g,
                                      const TwoCocycle& w);

}  // namespace twistk

#endif
