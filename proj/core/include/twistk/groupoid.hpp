#ifndef TWISTK_GROUPOID_HPP
#define TWISTK_GROUPOID_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twistk/report.hpp"

namespace twistk {

// A finite groupoid as explicit tables. Units are stored as identity
// arrows and also listed separately; src/dst of an arrow refer to the
// identity arrow of the corresponding unit. Immutable after validation;
// all operations on it are pure.
class FiniteGroupoid {
 public:
  FiniteGroupoid(std::vector<std::string> arrow_ids,
                 std::vector<int> src, std::vector<int> dst,
                 std::vector<int> units, std::vector<int> inv,
                 std::vector<int> compose_table);

  int num_arrows() const { return static_cast<int>(ids_.size()); }
  int num_units() const { return static_cast<int>(units_.size()); }
  const std::vector<int>& units() const { return units_; }
  const std::string& id(int g) const { return ids_[g]; }

  // Index of the named arrow, -1 if absent.
  int arrow(const std::string& id) const;

  int src(int g) const { return src_[g]; }
  int dst(int g) const { return dst_[g]; }
  int inv(int g) const { return inv_[g]; }
  bool is_unit(int g) const { return unit_flag_[g]; }

  bool composable(int g, int h) const { return src_[g] == dst_[h]; }
  // gh, or -1 when the pair is not in the table.
  int compose(int g, int h) const {
    return table_[static_cast<std::size_t>(g) * ids_.size() + h];
  }

  // All arrows with src == u / dst == u, ascending.
  std::vector<int> arrows_from(int u) const;
  std::vector<int> arrows_into(int u) const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> src_, dst_;
  std::vector<int> units_;
  std::vector<bool> unit_flag_;
  std::vector<int> inv_;
  std::vector<int> table_;  // num_arrows^2, -1 = undefined
  std::unordered_map<std::string, int> index_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

// Checks every groupoid axiom on the tables: composability domain,
// associativity, involutive inverse, cancellation, unit laws. Topological
// axioms are recorded as trivially satisfied notes.
ValidationReport validate_groupoid(const FiniteGroupoid& g);

struct ComposablePairs {
  std::vector<std::pair<int, int>> pairs;
};

ComposablePairs composable_pairs(const FiniteGroupoid& g);

// The isotropy group G_u^u at a unit, as a multiplication table over the
// arrows with src == dst == u.
struct IsotropyGroup {
  std::vector<int> arrows;                  // groupoid arrow indices
  std::vector<std::vector<int>> table;      // local indices
  std::vector<std::string> names;
};

IsotropyGroup isotropy(const FiniteGroupoid& g, int unit_arrow);

}  // namespace twistk

#endif
