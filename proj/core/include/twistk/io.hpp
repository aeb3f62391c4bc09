#ifndef TWISTK_IO_HPP
#define TWISTK_IO_HPP

#include <cstdint>
#include <string>

#include "twistk/cocycle.hpp"
#include "twistk/groupoid.hpp"
#include "twistk/homotopy.hpp"
#include "twistk/inverse_semigroup.hpp"
#include "twistk/ktheory.hpp"
#include "twistk/semidirect.hpp"
#include "twistk/twist.hpp"

// File formats. Everything here throws Error(ParseError, ...) on bad
// input; the JSON library never leaks through this boundary.
namespace twistk::io {

enum class Schema {
  Groupoid,       // units + arrows
  Cocycle,        // values | family
  Homotopy,       // kind
  Semigroup,      // elements + table + zero
  TwistedAction,  // space + domains + theta
  DirectedAction, // gamma + P + X
  Unknown,
};

Schema detect_schema(const std::string& text);

GroupoidPtr parse_groupoid(const std::string& text);

// `values` tables, or the coboundary / bilinear / product families. The
// bilinear family reads the exponent tuple of each arrow from its id
// "(a1,...,ak)" (the naming used by group and semidirect builders).
TwoCocycle parse_cocycle(const std::string& text, const GroupoidPtr& g);

// coboundary_path or linear_lift; linear_lift entries carry "radians" as
// a number or a string "p/q" meaning (p/q) pi.
CocycleHomotopy parse_homotopy(const std::string& text, const GroupoidPtr& g);

SemigroupPtr parse_semigroup(const std::string& text);

// Twisted action over a previously parsed semigroup; the omega field is
// optional and defaults to the trivial cocycle on each D_{st}.
SemigroupTwistedAction parse_twisted_action(const std::string& text,
                                            const SemigroupPtr& s);

DirectedAction parse_directed_action(const std::string& text);

std::string write_groupoid(const FiniteGroupoid& g);
std::string write_cocycle(const TwoCocycle& w);
std::string write_k0(const K0Data& d);
std::string write_invariance(const InvarianceReport& r);
std::string write_twist_sidecar(const FiniteTwist& t);
std::string write_semidirect_labels(const SemidirectGroupoid& g,
                                    const GroupTable& gamma);

// FNV-1a, used as the input digest in run reports.
std::uint64_t digest(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace twistk::io

#endif
