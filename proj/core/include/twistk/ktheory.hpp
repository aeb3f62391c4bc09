#ifndef TWISTK_KTHEORY_HPP
#define TWISTK_KTHEORY_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "twistk/algebra.hpp"
#include "twistk/homotopy.hpp"

namespace twistk {

// Numerical guards for the Wedderburn pipeline. The guards convert silent
// misclustering into hard errors (RankAmbiguous / EigenGapAmbiguous).
struct KTheoryOptions {
  double rank_rel_tol = 1e-8;    // SVD rank threshold, relative
  double rank_guard = 1e-6;      // ambiguity window around the threshold
  double eigen_gap = 1e-6;       // eigenvalue clustering gap
  double idempotent_tol = 1e-9;  // residual for z^2 = z = z*, centrality
  int seed = 0;
  int max_reseeds = 5;
};

// K0 of a finite-dimensional *-algebra A = (+) M_{n_i}: block count,
// ascending block sizes, and the class of the unit [1] = (n_1,...,n_k).
struct K0Data {
  int k = 0;
  std::vector<int> block_sizes;  // ascending
  std::vector<int> unit_class;   // n_i in block order
};

bool k0_equal(const K0Data& a, const K0Data& b);

struct CenterBasis {
  std::vector<AlgebraElement> basis;  // orthonormal in coefficient space
  int dimension() const { return static_cast<int>(basis.size()); }
};

// Kernel basis of the commutation system {x : x d_g = d_g x for all g}.
CenterBasis center(const StructuredAlgebra& a,
                   const KTheoryOptions& opts = {});

// Spectral projections of a seeded-random Hermitian central element,
// returned in the full matrix picture. Exactly one projection per
// Wedderburn block.
std::vector<Eigen::MatrixXcd> minimal_central_idempotents(
    const StructuredAlgebra& a, const CenterBasis& c,
    const KTheoryOptions& opts = {});

K0Data k0(const GroupoidPtr& g, const TwoCocycle& w,
          const KTheoryOptions& opts = {});

struct InvarianceReport {
  struct Sample {
    double t = 0.0;
    bool valid = false;
    std::string error;
    K0Data k0;
  };
  std::vector<Sample> samples;
  bool pass = false;
  // We assert equality of the full block data, which is stronger than
  // the K-group isomorphism the theorem asserts.
  std::string level = "ALGEBRA_DATA";
  std::string k1_note = "K1 = 0 (finite-dimensional algebra)";
};

// Samples w_t on a uniform grid including 0 and 1 and checks that K0Data
// is constant along the path.
InvarianceReport verify_homotopy_invariance(const GroupoidPtr& g,
                                            const CocycleHomotopy& h,
                                            int samples,
                                            const KTheoryOptions& opts = {});

}  // namespace twistk

#endif
