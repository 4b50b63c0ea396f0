#pragma once

#include <cstddef>
#include <optional>

#include "rext/poly.hpp"

namespace rext {

/// Open interval (lo, hi); a missing endpoint stands for -inf / +inf.
struct Interval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  static Interval real_line() { return {}; }
  static Interval positive_half_line() { return {Rat(0), std::nullopt}; }
};

/// Number of distinct real roots of a nonzero polynomial inside the open
/// interval, from a Sturm sequence with one-sided limits at the endpoints.
std::size_t count_real_roots(const Poly& p, const Interval& interval);

}  // namespace rext
