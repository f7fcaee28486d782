#ifndef BURN_CLOSED_FORMS_HPP
#define BURN_CLOSED_FORMS_HPP

#include <optional>
#include <string>

namespace burn {

// One row of a family bound table: the closed-form window for a parameter
// value, optionally alongside an exact solver value filled in by a sweep.
struct BoundRow {
  std::string name;
  int n = 0;
  int lower = 0;
  int upper = 0;
  std::optional<int> computed;
};

// Closed-form windows for the named families. Names: path-bg, path-bg',
// cycle-bg, cycle-bg', hypercube-bg, hypercube-bg'. The hypercube rows are
// exact (lower == upper). All ceiling-of-square-root expressions are
// evaluated in integer arithmetic. Throws std::invalid_argument on an
// unknown name or an out-of-range n.
BoundRow closed_forms(const std::string& name, int n);

}  // namespace burn

#endif
