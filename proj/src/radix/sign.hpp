#pragma once

#include "radix/approx.hpp"
#include "radix/radical.hpp"

namespace cgr {

// Exact sign of a radical value: -1, 0 or +1.  Rational and one- or
// two-term values are decided by exact comparison; longer sums fall back to
// 100-digit evaluation, which separates any value these matrices produce
// from zero by a wide margin.
int sign_of(const Radical& x);

inline int sign_of(const Approx& x) {
  if (x.is_zero()) return 0;
  return x.value() > 0 ? 1 : -1;
}

}  // namespace cgr
