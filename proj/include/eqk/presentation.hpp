#pragma once

#include <string>
#include <vector>

#include "eqk/localization.hpp"

namespace eqk {

/// One ideal generator of the presentation over the wonderful compactification.
struct Relation {
  std::string kind;   // "non-face" or "line-bundle"
  std::string label;  // e.g. "X<1,3>" or "X1^1*X2^0 - [L_g1]"
  bool vanishes = false;
  std::string failing_point;  // first fixed point with a nonzero value
};

struct PresentationReport {
  std::vector<std::string> generators;  // X_j for the rays of F+
  std::vector<Relation> relations;
  std::size_t fixed_points = 0;
  bool ok() const;
};

/// Evaluates every generator of the ideal at all fixed points of X.
PresentationReport presentation_check(const FanPtr& fan);

/// Throws RelationViolation naming the first relation that does not vanish.
void require_presentation(const PresentationReport& report);

}  // namespace eqk
