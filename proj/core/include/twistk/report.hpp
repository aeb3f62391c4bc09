#ifndef TWISTK_REPORT_HPP
#define TWISTK_REPORT_HPP

#include <string>
#include <vector>

namespace twistk {

struct Violation {
  std::string kind;     // axiom / condition name
  std::string witness;  // offending elements, human readable
  double deviation = 0.0;
};

// Outcome of a validator. `notes` records checks that are trivially
// satisfied in the finite discrete setting (openness, closedness, ...)
// so they are visible rather than silently skipped.
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }

  void fail(std::string kind, std::string witness, double deviation = 0.0) {
    violations.push_back({std::move(kind), std::move(witness), deviation});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  std::string summary() const;
};

}  // namespace twistk

#endif
