#include "twistk/ktheory.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "twistk/errors.hpp"

namespace twistk {

namespace {

// Rank of a Hermitian PSD Gram matrix with a relative threshold on its
// eigenvalue scale. Guards against thresholds falling inside the
// spectrum.
int gram_rank(const Eigen::MatrixXcd& gram, const KTheoryOptions& opts,
              const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram,
                                                     Eigen::EigenvaluesOnly);
  // stay on the eigenvalue scale of the PSD Gram: squaring the data keeps
  // eps-level noise quadratically below the relative threshold
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  double top = ev.maxCoeff();
  if (top == 0.0) return 0;
  double thr = opts.rank_rel_tol * top;
  int rank = 0;
  for (int i = 0; i < ev.size(); ++i) {
    // clean zeros land near eps * top, far below thr; anything between the
    // threshold and the guard window is neither zero nor data
    if (ev[i] > thr && ev[i] < opts.rank_guard * top)
      throw Error(ErrorCode::RankAmbiguous,
                  std::string(what) + ": singular value " +
                      std::to_string(ev[i]) + " inside the guard window above " +
                      std::to_string(thr));
    if (ev[i] > thr) ++rank;
  }
  return rank;
}

// Row position of each arrow inside MatrixImage::full().
std::vector<int> full_positions(const FiniteGroupoid& G) {
  std::vector<int> pos(G.num_arrows(), -1);
  int off = 0;
  for (int u : G.units())
    for (int g : G.arrows_from(u)) pos[g] = off++;
  return pos;
}

}  // namespace

bool k0_equal(const K0Data& a, const K0Data& b) {
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return a.k == b.k && sorted(a.block_sizes) == sorted(b.block_sizes) &&
         sorted(a.unit_class) == sorted(b.unit_class);
}

CenterBasis center(const StructuredAlgebra& a, const KTheoryOptions& opts) {
  const FiniteGroupoid& G = *a.groupoid;
  const int n = a.dimension;

  // Normal matrix of the commutation system: rows are indexed by
  // (generator g, target arrow r) and have at most two nonzeros, at
  // k = r g^-1 (coefficient +w(k,g)) and k = g^-1 r (coefficient -w(g,k)).
  Eigen::MatrixXcd normal = Eigen::MatrixXcd::Zero(n, n);
  for (int g = 0; g < n; ++g) {
    for (int r = 0; r < n; ++r) {
      int kl = G.composable(r, G.inv(g)) ? G.compose(r, G.inv(g)) : -1;
      if (kl >= 0 && !G.composable(kl, g)) kl = -1;
      int kr = G.composable(G.inv(g), r) ? G.compose(G.inv(g), r) : -1;
      if (kr >= 0 && !G.composable(g, kr)) kr = -1;
      if (kl < 0 && kr < 0) continue;
      std::complex<double> cl =
          kl >= 0 ? a.cocycle->at(kl, g).value() : 0.0;
      std::complex<double> cr =
          kr >= 0 ? -a.cocycle->at(g, kr).value() : 0.0;
      if (kl >= 0 && kl == kr) {
        std::complex<double> c = cl + cr;
        normal(kl, kl) += std::conj(c) * c;
        continue;
      }
      if (kl >= 0) normal(kl, kl) += std::conj(cl) * cl;
      if (kr >= 0) normal(kr, kr) += std::conj(cr) * cr;
      if (kl >= 0 && kr >= 0) {
        normal(kl, kr) += std::conj(cl) * cr;
        normal(kr, kl) += std::conj(cr) * cl;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(normal);
  Eigen::VectorXd sv = es.eigenvalues().cwiseMax(0.0);
  double top = sv.maxCoeff();

  CenterBasis cb;
  if (top == 0.0) {
    // commutative algebra: everything is central
    for (int i = 0; i < n; ++i) {
      AlgebraElement x = AlgebraElement::zero(a.groupoid);
      x.coeff[i] = 1.0;
      cb.basis.push_back(std::move(x));
    }
    return cb;
  }
  double thr = opts.rank_rel_tol * top;
  for (int i = 0; i < n; ++i) {
    if (sv[i] > thr && sv[i] < opts.rank_guard * top)
      throw Error(ErrorCode::RankAmbiguous,
                  "center: singular value " + std::to_string(sv[i]) +
                      " inside the guard window above " + std::to_string(thr));
    if (sv[i] <= thr) {
      AlgebraElement x = AlgebraElement::zero(a.groupoid);
      for (int j = 0; j < n; ++j) x.coeff[j] = es.eigenvectors()(j, i);
      cb.basis.push_back(std::move(x));
    }
  }
  return cb;
}

std::vector<Eigen::MatrixXcd> minimal_central_idempotents(
    const StructuredAlgebra& a, const CenterBasis& c,
    const KTheoryOptions& opts) {
  const FiniteGroupoid& G = *a.groupoid;
  const int n = a.dimension;
  const int k = c.dimension();
  const TwoCocycle& w = *a.cocycle;

  std::vector<int> pos = full_positions(G);
  std::vector<int> arrow_at(n, -1);  // inverse of pos
  for (int i = 0; i < n; ++i) arrow_at[pos[i]] = i;

  // max |(P M_g - M_g P)(r, c)| using the sparsity of the generator
  // matrices: M_g has one nonzero per column, at (g h, h) with value
  // w(g, h).
  auto centrality_residual = [&](const Eigen::MatrixXcd& p, int g) {
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
      int rr = arrow_at[r];
      int c_left = -1;  // arrow c with g c = rr
      if (G.dst(rr) == G.dst(g)) c_left = G.compose(G.inv(g), rr);
      for (int col = 0; col < n; ++col) {
        int hh = arrow_at[col];
        std::complex<double> pm = 0.0, mp = 0.0;
        if (G.dst(hh) == G.src(g))
          pm = p(r, pos[G.compose(g, hh)]) * w.at(g, hh).value();
        if (c_left >= 0)
          mp = w.at(g, c_left).value() * p(pos[c_left], col);
        worst = std::max(worst, std::abs(pm - mp));
      }
    }
    return worst;
  };

  std::string last_issue;
  for (int attempt = 0; attempt < opts.max_reseeds; ++attempt) {
    std::mt19937 rng(static_cast<std::uint32_t>(opts.seed + attempt));
    auto uniform = [&rng]() {
      return 2.0 * (static_cast<double>(rng()) / 4294967296.0) - 1.0;
    };

    AlgebraElement x = AlgebraElement::zero(a.groupoid);
    for (const auto& z : c.basis) {
      std::complex<double> coeff(uniform(), uniform());
      for (int j = 0; j < n; ++j) x.coeff[j] += coeff * z.coeff[j];
    }
    Eigen::MatrixXcd xm = full_rep(x, w).full();
    Eigen::MatrixXcd herm = xm + xm.adjoint();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    const Eigen::VectorXd& ev = es.eigenvalues();

    // cluster by gap
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= ev.size(); ++i) {
      if (i == ev.size() || ev[i] - ev[i - 1] > opts.eigen_gap) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    }
    if (static_cast<int>(clusters.size()) != k) {
      last_issue = "cluster count " + std::to_string(clusters.size()) +
                   " != center dimension " + std::to_string(k);
      continue;
    }

    std::vector<Eigen::MatrixXcd> projections;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    bool ok = true;
    for (auto [b, e] : clusters) {
      Eigen::MatrixXcd v = es.eigenvectors().middleCols(b, e - b);
      Eigen::MatrixXcd p = v * v.adjoint();
      if ((p * p - p).cwiseAbs().maxCoeff() > opts.idempotent_tol ||
          (p - p.adjoint()).cwiseAbs().maxCoeff() > opts.idempotent_tol) {
        ok = false;
        last_issue = "projection residual above tolerance";
        break;
      }
      for (int g = 0; g < n; ++g) {
        if (centrality_residual(p, g) > opts.idempotent_tol) {
          ok = false;
          last_issue = "projection is not central";
          break;
        }
      }
      if (!ok) break;
      sum += p;
      projections.push_back(std::move(p));
    }
    if (!ok) continue;
    if ((sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() >
        opts.idempotent_tol) {
      last_issue = "projections do not sum to the identity";
      continue;
    }
    return projections;
  }
  throw Error(ErrorCode::EigenGapAmbiguous,
              "no clean spectral clustering after " +
                  std::to_string(opts.max_reseeds) + " seeds (" + last_issue +
                  ")");
}

K0Data k0(const GroupoidPtr& g, const TwoCocycle& w,
          const KTheoryOptions& opts) {
  const FiniteGroupoid& G = *g;
  const int n = G.num_arrows();
  StructuredAlgebra alg = structure_constants(g, w);
  CenterBasis cb = center(alg, opts);
  std::vector<Eigen::MatrixXcd> zs =
      minimal_central_idempotents(alg, cb, opts);

  std::vector<int> pos = full_positions(G);

  K0Data data;
  data.k = static_cast<int>(zs.size());
  int total = 0;
  for (const auto& z : zs) {
    // Gram matrix of { z . rep(delta_a) } over arrows a; its rank is the
    // dimension n_i^2 of the block cut out by z.
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (G.src(a) != G.src(b)) continue;
        std::complex<double> acc = 0.0;
        for (int h = 0; h < n; ++h) {
          if (G.dst(h) != G.src(a)) continue;
          int ah = G.compose(a, h);
          int bh = G.compose(b, h);
          acc += std::conj(w.at(a, h).value()) * w.at(b, h).value() *
                 z(pos[ah], pos[bh]);
        }
        gram(a, b) = acc;
      }
    }
    int rank = gram_rank(gram, opts, "k0 block rank");
    int ni = static_cast<int>(std::lround(std::sqrt(
        static_cast<double>(rank))));
    if (ni * ni != rank)
      throw Error(ErrorCode::BlockSizeInconsistent,
                  "block span rank " + std::to_string(rank) +
                      " is not a perfect square");
    data.block_sizes.push_back(ni);
    total += rank;
  }
  if (total != n)
    throw Error(ErrorCode::BlockSizeInconsistent,
                "sum of n_i^2 = " + std::to_string(total) +
                    " != algebra dimension " + std::to_string(n));
  std::sort(data.block_sizes.begin(), data.block_sizes.end());
  data.unit_class = data.block_sizes;
  return data;
}

InvarianceReport verify_homotopy_invariance(const GroupoidPtr& g,
                                            const CocycleHomotopy& h,
                                            int samples,
                                            const KTheoryOptions& opts) {
  if (samples < 2)
    throw Error(ErrorCode::SampleInvalid, "need at least 2 samples");
  if (h.groupoid() != g)
    throw Error(ErrorCode::GroupoidMismatch, "verify_homotopy_invariance");

  InvarianceReport rep;
  rep.pass = true;
  for (int i = 0; i < samples; ++i) {
    InvarianceReport::Sample s;
    s.t = static_cast<double>(i) / (samples - 1);
    try {
      TwoCocycle wt = h.sample(s.t);
      s.k0 = k0(g, wt, opts);
      s.valid = true;
    } catch (const Error& e) {
      s.valid = false;
      s.error = e.what();
      rep.pass = false;
    }
    rep.samples.push_back(std::move(s));
  }
  for (const auto& s : rep.samples)
    if (s.valid && !k0_equal(s.k0, rep.samples.front().k0)) rep.pass = false;
  if (!rep.samples.front().valid) rep.pass = false;
  return rep;
}

}  // namespace twistk
