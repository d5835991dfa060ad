#pragma once

#include <span>
#include <string>

#include "allot/rational.hpp"

namespace allot {

/// Outcome of comparing two consumptions x and y under a preference.
enum class Comparison {
  kStrict,       ///< x is strictly preferred to y
  kIndifferent,  ///< x and y are indifferent
  kWorse,        ///< y is strictly preferred to x
};

/// Piecewise-linear single-peaked or single-plateaued preference over amounts
/// of one commodity.
///
/// Disutility is zero on the plateau [lo, hi], grows with slope `left_slope`
/// below it and with slope `right_slope` above it. A single-peaked preference
/// is the degenerate plateau lo == hi. The unbounded variant models an
/// infinite peak: d(x) = -x, so more is always better. It is meant for
/// comparisons and opponent sampling only; rules refuse it.
class Preference {
 public:
  static Preference single_peaked(Rat peak, Rat left_slope = 1, Rat right_slope = 1);
  static Preference single_plateaued(Rat lo, Rat hi, Rat left_slope = 1, Rat right_slope = 1);
  static Preference unbounded();

  bool is_unbounded() const noexcept { return unbounded_; }
  bool is_single_peaked() const noexcept { return !unbounded_ && lo_ == hi_; }

  /// Peak of a single-peaked preference; throws DomainError otherwise.
  const Rat& peak() const;
  const Rat& plateau_lo() const;
  const Rat& plateau_hi() const;
  const Rat& left_slope() const noexcept { return left_; }
  const Rat& right_slope() const noexcept { return right_; }

  /// Same peak/plateau, different slopes.
  Preference with_slopes(Rat left_slope, Rat right_slope) const;

  Rat disutility(const Rat& x) const;

  /// Compares consumption x against y exactly.
  Comparison compare(const Rat& x, const Rat& y) const;
  bool strictly_prefers(const Rat& x, const Rat& y) const { return compare(x, y) == Comparison::kStrict; }
  bool weakly_prefers(const Rat& x, const Rat& y) const { return compare(x, y) != Comparison::kWorse; }
  bool indifferent(const Rat& x, const Rat& y) const { return compare(x, y) == Comparison::kIndifferent; }

  /// True when x lies in the peak set (zero disutility).
  bool is_ideal(const Rat& x) const;

  friend bool operator==(const Preference&, const Preference&) = default;

 private:
  Preference(Rat lo, Rat hi, Rat left, Rat right, bool unbounded);

  Rat lo_;
  Rat hi_;
  Rat left_;
  Rat right_;
  bool unbounded_ = false;
};

/// The least preferred element of a finite set; ties go to the smallest amount.
/// Throws DomainError on an empty set.
Rat worst(const Preference& pref, std::span<const Rat> amounts);

/// The least preferred point of the closed interval [lo, hi]. Disutility is
/// piecewise linear and quasi-convex, so the maximum sits at an endpoint.
Rat worst_of_interval(const Preference& pref, const Rat& lo, const Rat& hi);

std::string describe(const Preference& pref);

}  // namespace allot
