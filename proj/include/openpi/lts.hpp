// Late labelled transition system.
#pragma once

#include <stdexcept>
#include <vector>

#include "openpi/syntax.hpp"

namespace openpi {

/// A transition P --label--> residual. For bound labels the residual is the
/// body of an abstraction over label.object, which is fresh for P.
struct Transition {
  Label label;
  Process residual;
};

class FreshnessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All transitions of `p`, deduplicated up to alpha-equivalence, in
/// structural order (left before right, moves before communications).
std::vector<Transition> transitions(const Process& p);

/// Residuals of the transitions of `p` whose label equals `l` (bound labels
/// compared up to their binder, residuals instantiated at l.object).
/// Throws FreshnessViolation if the binder of `l` is free in `p`.
std::vector<Process> transitions_with_label(const Process& p, const Label& l);

/// Names x such that p has a barb on x (input, free or bound output).
NameSet barbs(const Process& p);

}  // namespace openpi
