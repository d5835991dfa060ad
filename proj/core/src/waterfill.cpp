#include "allot/waterfill.hpp"

#include <algorithm>

namespace allot {

Rat clamp_sum(std::span<const ClampTerm> terms, const Rat& level) {
  Rat sum = 0;
  for (const ClampTerm& t : terms) {
    if (level <= t.lo) {
      sum += t.lo;
    } else if (t.hi && level >= *t.hi) {
      sum += *t.hi;
    } else {
      sum += level;
    }
  }
  return sum;
}

Rat solve_clamp_level(std::span<const ClampTerm> terms, const Rat& target, const Rat& floor) {
  std::vector<Rat> breaks{floor};
  for (const ClampTerm& t : terms) {
    if (t.hi && *t.hi < t.lo) throw DomainError("clamp term with hi < lo");
    if (t.lo > floor) breaks.push_back(t.lo);
    if (t.hi && *t.hi > floor) breaks.push_back(*t.hi);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  if (clamp_sum(terms, floor) > target) {
    throw DomainError("water-filling target " + to_string(target) + " below the reachable minimum");
  }

  // clamp_sum is nondecreasing: binary-search the first breakpoint reaching the target.
  std::size_t lo = 0;
  std::size_t hi = breaks.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (clamp_sum(terms, breaks[mid]) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  if (lo == 0) return floor;

  const Rat& left = breaks[lo - 1];
  const Rat base = clamp_sum(terms, left);
  Rat slope = 0;
  if (lo < breaks.size()) {
    const Rat& right = breaks[lo];
    slope = (clamp_sum(terms, right) - base) / (right - left);
  } else {
    for (const ClampTerm& t : terms) {
      if (!t.hi && t.lo <= left) slope += 1;
    }
    if (slope == 0) {
      throw DomainError("water-filling target " + to_string(target) + " above the reachable maximum");
    }
  }
  return left + (target - base) / slope;
}

Rat solve_capped_level(std::span<const Rat> caps, const Rat& target) {
  std::vector<ClampTerm> terms;
  terms.reserve(caps.size());
  for (const Rat& c : caps) terms.push_back({0, c});
  return solve_clamp_level(terms, target);
}

Rat solve_floored_level(std::span<const Rat> bases, const Rat& target) {
  std::vector<ClampTerm> terms;
  terms.reserve(bases.size());
  for (const Rat& b : bases) terms.push_back({b, std::nullopt});
  return solve_clamp_level(terms, target);
}

}  // namespace allot
