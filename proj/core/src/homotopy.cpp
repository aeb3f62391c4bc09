#include "twistk/homotopy.hpp"

#include <cmath>
#include <sstream>

#include "twistk/errors.hpp"

namespace twistk {

std::uint64_t CocycleHomotopy::lift_key(int g, int h) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(h);
}

CocycleHomotopy CocycleHomotopy::coboundary_path(const OneCochain& b) {
  CocycleHomotopy h(b.groupoid(), HomotopyKind::CoboundaryPath);
  h.b_.resize(b.groupoid()->num_arrows());
  for (int g = 0; g < b.groupoid()->num_arrows(); ++g) h.b_[g] = b.at(g);
  return h;
}

CocycleHomotopy CocycleHomotopy::linear_lift(
    GroupoidPtr g, std::unordered_map<std::uint64_t, double> c) {
  CocycleHomotopy h(std::move(g), HomotopyKind::LinearLift);
  h.lift_ = std::move(c);
  return h;
}

CocycleHomotopy CocycleHomotopy::table_of_samples(
    std::vector<std::pair<double, TwoCocycle>> samples) {
  if (samples.empty())
    throw Error(ErrorCode::SampleInvalid, "empty sample table");
  CocycleHomotopy h(samples.front().second.groupoid(),
                    HomotopyKind::TableOfSamples);
  h.samples_ = std::move(samples);
  return h;
}

TwoCocycle CocycleHomotopy::sample(double t, double tol) const {
  if (t < 0.0 || t > 1.0)
    throw Error(ErrorCode::SampleInvalid, "t outside [0,1]");
  const FiniteGroupoid& G = *G_;

  TwoCocycle w(G_);
  switch (kind_) {
    case HomotopyKind::CoboundaryPath: {
      if (t == 0.0) {
        w = TwoCocycle::constant_one(G_);
        break;
      }
      std::vector<CircleValue> bt(G.num_arrows());
      for (int g = 0; g < G.num_arrows(); ++g) {
        if (t == 1.0)
          bt[g] = b_[g];
        else
          bt[g] = CircleValue::radians(t * b_[g].angle_radians());
      }
      for (auto [g, h] : composable_pairs(G).pairs)
        w.set(g, h, bt[g] * bt[h] * bt[G.compose(g, h)].conj());
      break;
    }
    case HomotopyKind::LinearLift: {
      for (auto [g, h] : composable_pairs(G).pairs) {
        auto it = lift_.find(lift_key(g, h));
        double c = it == lift_.end() ? 0.0 : it->second;
        if (t == 0.0 || c == 0.0)
          w.set(g, h, CircleValue::one());
        else
          w.set(g, h, CircleValue::radians(t * c));
      }
      break;
    }
    case HomotopyKind::TableOfSamples: {
      // nearest listed sample
      std::size_t best = 0;
      for (std::size_t i = 1; i < samples_.size(); ++i)
        if (std::abs(samples_[i].first - t) <
            std::abs(samples_[best].first - t))
          best = i;
      w = samples_[best].second;
      break;
    }
  }

  auto rep = validate_cocycle(w, tol);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "sample at t=" << t << " fails validation: " << rep.summary();
    throw Error(ErrorCode::SampleInvalid, os.str());
  }
  return w;
}

}  // namespace twistk
