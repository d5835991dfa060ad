#pragma once

// Independent reference computations. Nothing here calls the solvers under test.

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "allot/economy.hpp"

namespace allot::oracle {

/// Bracket [lo, hi] of the root of a nondecreasing f after `iterations` halvings.
template <class F>
std::pair<Rat, Rat> bisect(F f, const Rat& target, Rat lo, Rat hi, int iterations = 60) {
  for (int k = 0; k < iterations; ++k) {
    Rat mid = (lo + hi) / 2;
    if (f(mid) < target) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

inline Rat sum_min(std::span<const Rat> c, const Rat& level) {
  Rat s = 0;
  for (const Rat& x : c) s += std::min(x, level);
  return s;
}

inline Rat sum_excess(std::span<const Rat> c, const Rat& level) {
  Rat s = 0;
  for (const Rat& x : c) s += std::max(Rat(0), Rat(x - level));
  return s;
}

inline Rat largest(std::span<const Rat> xs) {
  Rat m = 0;
  for (const Rat& x : xs) m = std::max(m, x);
  return m;
}

/// Equal-awards level by bisection: sum min(c, l) = E.
inline std::pair<Rat, Rat> cea_bracket(std::span<const Rat> c, const Rat& e) {
  return bisect([&](const Rat& l) { return sum_min(c, l); }, e, 0, largest(c));
}

/// Equal-losses level by bisection: sum max(0, c - l) = E (decreasing in l).
inline std::pair<Rat, Rat> cel_bracket(std::span<const Rat> c, const Rat& e) {
  return bisect([&](const Rat& l) { return Rat(-sum_excess(c, l)); }, Rat(-e), 0, largest(c));
}

/// Worst element by scanning every pair; ties to the smaller amount.
inline Rat brute_worst(const Preference& pref, std::span<const Rat> ys) {
  for (const Rat& y : ys) {
    bool worst = true;
    for (const Rat& other : ys) {
      const Rat dy = pref.disutility(y), dz = pref.disutility(other);
      if (dz > dy || (dz == dy && other < y)) worst = false;
    }
    if (worst) return y;
  }
  return ys.front();
}

/// Searches the lattice x + h * (a_1, ..., a_{n-1}, -sum a) with |a_k| <= radius
/// for a Pareto improvement over x.
inline std::optional<std::vector<Rat>> pareto_improvement(const Economy& econ, std::span<const Rat> x, const Rat& h,
                                                          int radius) {
  const std::size_t n = econ.size();
  std::vector<int> a(n - 1, -radius);
  while (true) {
    std::vector<Rat> y(x.begin(), x.end());
    Rat moved = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      y[k] += h * a[k];
      moved += h * a[k];
    }
    y[n - 1] -= moved;
    const bool feasible = std::all_of(y.begin(), y.end(), [](const Rat& v) { return v >= 0; });
    if (feasible) {
      bool weakly = true, strictly = false;
      for (std::size_t i = 0; i < n; ++i) {
        const Rat dy = econ.pref(i).disutility(y[i]), dx = econ.pref(i).disutility(x[i]);
        weakly = weakly && dy <= dx;
        strictly = strictly || dy < dx;
      }
      if (weakly && strictly) return y;
    }
    std::size_t k = 0;
    while (k < a.size() && a[k] == radius) a[k++] = -radius;
    if (k == a.size()) return std::nullopt;
    ++a[k];
  }
}

/// Same-sidedness read directly from the definition.
inline bool same_sided(const Economy& econ, std::span<const Rat> x) {
  Rat total = 0;
  for (const Rat& p : econ.peaks()) total += p;
  for (std::size_t i = 0; i < econ.size(); ++i) {
    const Rat p = econ.pref(i).peak();
    if (total >= econ.omega() && x[i] > p) return false;
    if (total <= econ.omega() && x[i] < p) return false;
  }
  return true;
}

}  // namespace allot::oracle
