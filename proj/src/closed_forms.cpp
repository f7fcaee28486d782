#include "burn/closed_forms.hpp"

#include <stdexcept>

namespace burn {

namespace {

// Smallest m >= 0 with (a*m + b)^2 >= target. Evaluates the ceilings below
// exactly in integer arithmetic; values are tiny, so a linear scan beats
// worrying about floating-point edge cases.
int least_root(long long a, long long b, long long target) {
  int m = 0;
  while ((a * m + b) * (a * m + b) < target) ++m;
  return m;
}

// ceil(sqrt(s) - 1): smallest m with (m+1)^2 >= s.
int ceil_sqrt_minus_1(long long s) { return least_root(1, 1, s); }

// ceil(sqrt(2n + 1/4) - 1/2): smallest m with (2m+1)^2 >= 8n+1.
int path_upper(long long n) { return least_root(2, 1, 8 * n + 1); }

}  // namespace

BoundRow closed_forms(const std::string& name, int n) {
  BoundRow row;
  row.name = name;
  row.n = n;
  if (name == "path-bg" || name == "path-bg'" || name == "cycle-bg") {
    int min_n = (name == "cycle-bg") ? 3 : 1;
    if (n < min_n) throw std::invalid_argument("closed_forms: n out of range for " + name);
    row.lower = (name == "path-bg'") ? ceil_sqrt_minus_1(2LL * n + 2) : ceil_sqrt_minus_1(2LL * n + 1);
    row.upper = path_upper(n);
    return row;
  }
  if (name == "cycle-bg'") {
    if (n < 3) throw std::invalid_argument("closed_forms: n out of range for cycle-bg'");
    // ceil(sqrt(2n+7) - 2) and ceil(sqrt(2n + 17/4) - 3/2), the latter as
    // the smallest m with (2m+3)^2 >= 8n+17.
    row.lower = least_root(1, 2, 2LL * n + 7);
    row.upper = least_root(2, 3, 8LL * n + 17);
    return row;
  }
  if (name == "hypercube-bg") {
    if (n < 1 || n > 6) throw std::invalid_argument("closed_forms: d out of range for hypercube-bg");
    int v = (n <= 2) ? 2 : (n + 2) / 2 + 1;  // ceil((d+1)/2) + 1
    row.lower = row.upper = v;
    return row;
  }
  if (name == "hypercube-bg'") {
    if (n < 1 || n > 6) throw std::invalid_argument("closed_forms: d out of range for hypercube-bg'");
    int v = (n + 1) / 2 + 1;  // ceil(d/2) + 1
    row.lower = row.upper = v;
    return row;
  }
  throw std::invalid_argument("closed_forms: unknown name " + name);
}

}  // namespace burn
