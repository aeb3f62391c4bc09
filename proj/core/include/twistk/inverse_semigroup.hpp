#ifndef TWISTK_INVERSE_SEMIGROUP_HPP
#define TWISTK_INVERSE_SEMIGROUP_HPP

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twistk/circle.hpp"
#include "twistk/cocycle.hpp"
#include "twistk/groupoid.hpp"
#include "twistk/report.hpp"

namespace twistk {

// Finite inverse semigroup with zero: multiplication table plus the
// unique generalized inverse of each element.
struct FiniteInverseSemigroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  std::vector<int> star;
  int zero = -1;
  std::vector<int> idempotents;  // ascending, includes zero

  int size() const { return static_cast<int>(names.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }
  int element(const std::string& name) const;
};

using SemigroupPtr = std::shared_ptr<const FiniteInverseSemigroup>;

// Computes stars and checks the inverse semigroup axioms; throws
// NotInverseSemigroup with a witness.
SemigroupPtr validate_inverse_semigroup(std::vector<std::string> names,
                                        std::vector<std::vector<int>> table,
                                        int zero);

// s <= t iff s = t s* s, as an explicit relation matrix.
std::vector<std::vector<bool>> natural_order(const FiniteInverseSemigroup& s);

// chi: E -> {0,1}, nonzero, multiplicative, chi(0) = 0. Indexed by
// position in `idempotents`.
struct Character {
  std::vector<char> values;
  bool operator==(const Character&) const = default;
};

// Exhaustive enumeration of the spectrum of E; |E| capped at 20.
std::vector<Character> spectrum(const FiniteInverseSemigroup& s);

// Twisted action of S on a finite set X: domains, partial bijections
// theta_s : D_s -> D_{s*}, and circle-valued cocycle maps on D_{st}.
struct SemigroupTwistedAction {
  SemigroupPtr S;
  std::vector<std::string> space;
  std::vector<std::vector<int>> domain;              // per s, ascending
  std::vector<std::unordered_map<int, int>> theta;   // per s, x -> y
  std::map<std::pair<int, int>, std::unordered_map<int, CircleValue>> omega;

  bool in_domain(int s, int x) const;
  // theta_s(x); -1 outside the domain
  int apply(int s, int x) const;
  CircleValue omega_at(int s, int t, int x) const;
};

// The canonical action on the spectrum of E, with trivial cocycle.
// Returns the action together with the character list describing X.
struct CanonicalAction {
  SemigroupTwistedAction action;
  std::vector<Character> characters;
};
CanonicalAction canonical_action(const SemigroupPtr& s);

// Conditions (1)-(3) of a twisted action, pointwise.
ValidationReport validate_twisted_action(const SemigroupTwistedAction& a);

// Groupoid of germs: classes [s,x] with (s,x) ~ (t,x) iff some idempotent
// e with x in D_e has se = te; src [s,x] = x, dst [s,x] = theta_s(x).
struct GermGroupoid {
  GroupoidPtr groupoid;
  // (semigroup element, point) -> arrow index; -1 when x outside D_s
  std::vector<std::vector<int>> germ_map;
  std::vector<int> unit_of_point;  // point -> unit arrow
};

GermGroupoid germ_groupoid(const SemigroupTwistedAction& a);

// Pushes the action's cocycle through the germ quotient:
// w([s, theta_t(x)], [t, x]) = omega(s,t)(x). Representative independence
// is checked over all representative pairs; a failure raises
// IllDefinedGerm.
TwoCocycle induced_cocycle_on_germs(const SemigroupTwistedAction& a,
                                    const GermGroupoid& g);

// Hausdorffness criterion listing: per s, the union of D_e over idempotents
// e <= s. Always closed (finite discrete topology); listed so the
// criterion is inspectable.
struct HausdorffReport {
  bool pass = true;
  std::vector<std::pair<std::string, std::vector<std::string>>> union_per_s;
  std::vector<std::string> notes;
};

HausdorffReport hausdorff_check(const SemigroupTwistedAction& a);

}  // namespace twistk

#endif
