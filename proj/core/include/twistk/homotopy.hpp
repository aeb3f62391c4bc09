#ifndef TWISTK_HOMOTOPY_HPP
#define TWISTK_HOMOTOPY_HPP

#include <unordered_map>
#include <utility>
#include <vector>

#include "twistk/cocycle.hpp"

namespace twistk {

enum class HomotopyKind { CoboundaryPath, LinearLift, TableOfSamples };

// A path of 2-cocycles t -> w_t, t in [0,1], given by a sampler. Every
// sample is validated before it is handed out; a failing sample raises
// SampleInvalid. Arbitrary interpolation of a multiplicative table is not
// offered: wraparound of angles can break the cocycle identity at
// intermediate t, so paths must come as coboundary paths or as exact
// additive lifts.
class CocycleHomotopy {
 public:
  // w_t = coboundary(b^t) with the angles of b scaled by t.
  static CocycleHomotopy coboundary_path(const OneCochain& b);

  // w_t(g,h) = exp(i t c(g,h)); c must satisfy the additive cocycle
  // identity (checked on every sample via the multiplicative validator).
  static CocycleHomotopy linear_lift(
      GroupoidPtr g, std::unordered_map<std::uint64_t, double> c);
  static std::uint64_t lift_key(int g, int h);

  // piecewise-constant path through explicit samples (t ascending)
  static CocycleHomotopy table_of_samples(
      std::vector<std::pair<double, TwoCocycle>> samples);

  HomotopyKind kind() const { return kind_; }
  const GroupoidPtr& groupoid() const { return G_; }

  TwoCocycle sample(double t, double tol = 1e-9) const;

 private:
  CocycleHomotopy(GroupoidPtr g, HomotopyKind k)
      : G_(std::move(g)), kind_(k) {}

  GroupoidPtr G_;
  HomotopyKind kind_;
  std::vector<CircleValue> b_;                      // CoboundaryPath
  std::unordered_map<std::uint64_t, double> lift_;  // LinearLift
  std::vector<std::pair<double, TwoCocycle>> samples_;
};

}  // namespace twistk

#endif
