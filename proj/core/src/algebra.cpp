#include "twistk/algebra.hpp"

#include "twistk/errors.hpp"

namespace twistk {

AlgebraElement AlgebraElement::zero(GroupoidPtr g) {
  AlgebraElement f;
  f.coeff.assign(g->num_arrows(), {0.0, 0.0});
  f.groupoid = std::move(g);
  return f;
}

AlgebraElement AlgebraElement::delta(GroupoidPtr g, int arrow) {
  AlgebraElement f = zero(std::move(g));
  f.coeff[arrow] = {1.0, 0.0};
  return f;
}

AlgebraElement AlgebraElement::unit(GroupoidPtr g) {
  AlgebraElement f = zero(g);
  for (int u : g->units()) f.coeff[u] = {1.0, 0.0};
  return f;
}

namespace {
void require_same(const AlgebraElement& f, const TwoCocycle& w) {
  if (f.groupoid != w.groupoid())
    throw Error(ErrorCode::GroupoidMismatch, "algebra operation");
}
}  // namespace

AlgebraElement convolve(const AlgebraElement& f1, const AlgebraElement& f2,
                        const TwoCocycle& w) {
  require_same(f1, w);
  require_same(f2, w);
  const FiniteGroupoid& G = *f1.groupoid;
  AlgebraElement out = AlgebraElement::zero(f1.groupoid);
  for (int g = 0; g < G.num_arrows(); ++g) {
    std::complex<double> acc = 0.0;
    for (int h = 0; h < G.num_arrows(); ++h) {
      if (G.dst(h) != G.dst(g)) continue;  // h in G^{r(g)}
      if (f1.coeff[h] == std::complex<double>(0.0)) continue;
      int hg = G.compose(G.inv(h), g);
      acc += f1.coeff[h] * f2.coeff[hg] * w.at(h, hg).value();
    }
    out.coeff[g] = acc;
  }
  return out;
}

AlgebraElement involute(const AlgebraElement& f, const TwoCocycle& w) {
  require_same(f, w);
  const FiniteGroupoid& G = *f.groupoid;
  AlgebraElement out = AlgebraElement::zero(f.groupoid);
  for (int g = 0; g < G.num_arrows(); ++g)
    out.coeff[g] =
        std::conj(f.coeff[G.inv(g)] * w.at(g, G.inv(g)).value());
  return out;
}

int MatrixImage::total_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  return n;
}

Eigen::MatrixXcd MatrixImage::full() const {
  const int n = total_size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    m.block(off, off, b.rows(), b.cols()) = b;
    off += static_cast<int>(b.rows());
  }
  return m;
}

MatrixImage full_rep(const AlgebraElement& f, const TwoCocycle& w) {
  require_same(f, w);
  const FiniteGroupoid& G = *f.groupoid;
  MatrixImage img;
  for (int u : G.units()) {
    std::vector<int> basis = G.arrows_from(u);
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n, n);
    for (int row = 0; row < n; ++row) {
      int g = basis[row];
      for (int col = 0; col < n; ++col) {
        int h = basis[col];
        int gh_inv = G.compose(g, G.inv(h));
        block(row, col) = f.coeff[gh_inv] * w.at(gh_inv, h).value();
      }
    }
    img.block_unit.push_back(u);
    img.basis.push_back(std::move(basis));
    img.blocks.push_back(std::move(block));
  }
  return img;
}

double reduced_norm(const AlgebraElement& f, const TwoCocycle& w) {
  MatrixImage img = full_rep(f, w);
  double norm = 0.0;
  for (const auto& b : img.blocks) {
    if (b.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b.adjoint() * b,
                                                       Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().maxCoeff();
    norm = std::max(norm, std::sqrt(std::max(0.0, top)));
  }
  return norm;
}

StructuredAlgebra structure_constants(const GroupoidPtr& g,
                                      const TwoCocycle& w) {
  if (w.groupoid() != g)
    throw Error(ErrorCode::GroupoidMismatch, "structure_constants");
  const FiniteGroupoid& G = *g;
  StructuredAlgebra a;
  a.groupoid = g;
  a.cocycle = &w;
  a.dimension = G.num_arrows();
  a.table.resize(static_cast<std::size_t>(a.dimension) * a.dimension);
  for (int x = 0; x < a.dimension; ++x)
    for (int y = 0; y < a.dimension; ++y) {
      auto& p = a.table[static_cast<std::size_t>(x) * a.dimension + y];
      p.result = G.compose(x, y);
      p.scale = p.result >= 0 ? w.at(x, y) : CircleValue::one();
    }
  return a;
}

}  // namespace twistk
