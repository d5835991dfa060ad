#include "allot/preference.hpp"

namespace allot {

Preference::Preference(Rat lo, Rat hi, Rat left, Rat right, bool unbounded)
    : lo_(std::move(lo)), hi_(std::move(hi)), left_(std::move(left)), right_(std::move(right)), unbounded_(unbounded) {}

Preference Preference::single_peaked(Rat peak, Rat left_slope, Rat right_slope) {
  Rat hi = peak;
  return single_plateaued(std::move(peak), std::move(hi), std::move(left_slope), std::move(right_slope));
}

Preference Preference::single_plateaued(Rat lo, Rat hi, Rat left_slope, Rat right_slope) {
  if (lo < 0) throw DomainError("peak must be nonnegative, got " + to_string(lo));
  if (hi < lo) throw DomainError("plateau upper end " + to_string(hi) + " below lower end " + to_string(lo));
  if (left_slope <= 0 || right_slope <= 0) throw DomainError("disutility slopes must be positive");
  return Preference(std::move(lo), std::move(hi), std::move(left_slope), std::move(right_slope), false);
}

Preference Preference::unbounded() { return Preference(0, 0, 1, 1, true); }

const Rat& Preference::peak() const {
  if (!is_single_peaked()) throw DomainError("preference has no single finite peak");
  return lo_;
}

const Rat& Preference::plateau_lo() const {
  if (unbounded_) throw DomainError("unbounded preference has no finite plateau");
  return lo_;
}

const Rat& Preference::plateau_hi() const {
  if (unbounded_) throw DomainError("unbounded preference has no finite plateau");
  return hi_;
}

Preference Preference::with_slopes(Rat left_slope, Rat right_slope) const {
  if (unbounded_) return *this;
  return single_plateaued(lo_, hi_, std::move(left_slope), std::move(right_slope));
}

Rat Preference::disutility(const Rat& x) const {
  if (x < 0) throw DomainError("consumption must be nonnegative, got " + to_string(x));
  if (unbounded_) return -x;
  if (x < lo_) return left_ * (lo_ - x);
  if (x > hi_) return right_ * (x - hi_);
  return 0;
}

Comparison Preference::compare(const Rat& x, const Rat& y) const {
  const int c = cmp(disutility(x), disutility(y));
  if (c < 0) return Comparison::kStrict;
  if (c > 0) return Comparison::kWorse;
  return Comparison::kIndifferent;
}

bool Preference::is_ideal(const Rat& x) const { return !unbounded_ && lo_ <= x && x <= hi_; }

Rat worst(const Preference& pref, std::span<const Rat> amounts) {
  if (amounts.empty()) throw DomainError("worst element of an empty set");
  const Rat* best = &amounts.front();
  Rat worst_d = pref.disutility(*best);
  for (const Rat& x : amounts.subspan(1)) {
    Rat d = pref.disutility(x);
    if (d > worst_d || (d == worst_d && x < *best)) {
      best = &x;
      worst_d = std::move(d);
    }
  }
  return *best;
}

Rat worst_of_interval(const Preference& pref, const Rat& lo, const Rat& hi) {
  if (hi < lo) throw DomainError("empty interval");
  return pref.disutility(hi) > pref.disutility(lo) ? hi : lo;
}

std::string describe(const Preference& pref) {
  if (pref.is_unbounded()) return "peak=inf";
  std::string s = pref.is_single_peaked() ? "peak=" + to_string(pref.peak())
                                          : "plateau=[" + to_string(pref.plateau_lo()) + "," +
                                                to_string(pref.plateau_hi()) + "]";
  return s + " slopes=(" + to_string(pref.left_slope()) + "," + to_string(pref.right_slope()) + ")";
}

}  // namespace allot
