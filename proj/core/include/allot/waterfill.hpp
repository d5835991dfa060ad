#pragma once

#include <optional>
#include <span>
#include <vector>

#include "allot/rational.hpp"

namespace allot {

/// One term clamp(level, lo, hi) of a water-filling sum. An absent upper bound
/// means the term keeps rising with the level.
struct ClampTerm {
  Rat lo;
  std::optional<Rat> hi;
};

/// Sum of clamp(level, lo_i, hi_i) over all terms.
Rat clamp_sum(std::span<const ClampTerm> terms, const Rat& level);

/// Smallest level >= floor with clamp_sum(terms, level) == target, found by
/// an exact scan over the sorted breakpoints. Throws DomainError when the
/// target is out of reach.
Rat solve_clamp_level(std::span<const ClampTerm> terms, const Rat& target, const Rat& floor = 0);

/// Level for sum_i min(cap_i, level) == target with caps >= 0.
Rat solve_capped_level(std::span<const Rat> caps, const Rat& target);

/// Level for sum_i max(base_i, level) == target.
Rat solve_floored_level(std::span<const Rat> bases, const Rat& target);

}  // namespace allot
