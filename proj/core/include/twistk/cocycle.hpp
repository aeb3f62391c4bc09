#ifndef TWISTK_COCYCLE_HPP
#define TWISTK_COCYCLE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "twistk/circle.hpp"
#include "twistk/groupoid.hpp"
#include "twistk/report.hpp"

namespace twistk {

// Circle-valued function on the composable pairs of a fixed groupoid.
class TwoCocycle {
 public:
  explicit TwoCocycle(GroupoidPtr g) : G_(std::move(g)) {}

  static TwoCocycle constant_one(GroupoidPtr g);

  const GroupoidPtr& groupoid() const { return G_; }

  // Throws MissingPair when (g,h) is composable but has no value.
  CircleValue at(int g, int h) const;
  bool has(int g, int h) const;
  void set(int g, int h, CircleValue v);

  TwoCocycle conj() const;
  bool all_exact() const;

  // Bit-exact table equality on exact tables; tol on the rest.
  bool table_equal(const TwoCocycle& other, double tol = 0.0) const;

 private:
  GroupoidPtr G_;
  std::unordered_map<std::uint64_t, CircleValue> vals_;
};

// Arrow-indexed circle values with value 1 on units.
class OneCochain {
 public:
  OneCochain(GroupoidPtr g, std::vector<CircleValue> values);

  static OneCochain constant_one(GroupoidPtr g);

  const GroupoidPtr& groupoid() const { return G_; }
  const CircleValue& at(int g) const { return vals_[g]; }

  OneCochain pointwise_product(const OneCochain& other) const;

 private:
  GroupoidPtr G_;
  std::vector<CircleValue> vals_;
};

// Cocycle identity + normalization + completeness check. `tol` applies
// only to non-exact tables.
ValidationReport validate_cocycle(const TwoCocycle& w, double tol = 1e-9);

// del b(g,h) = b(g) b(h) b(gh)^-1
TwoCocycle coboundary(const OneCochain& b);

// Pointwise product; throws GroupoidMismatch on different groupoids.
TwoCocycle multiply_cocycles(const TwoCocycle& w1, const TwoCocycle& w2);

// Divides out the coboundary of b(g) = w(r(g), g) to restore the unit
// normalization; input must satisfy the cocycle identity.
TwoCocycle normalize_cocycle(const TwoCocycle& w, double tol = 1e-9);

// For a cocycle valued in C_m, solves d(exponents) = exponents(w) over
// Z_m. Returns the trivializing cochain or nullopt (nontrivial class).
std::optional<OneCochain> try_trivialize(const TwoCocycle& w, std::int64_t m,
                                         int arrow_cap = 4096);

}  // namespace twistk

#endif
