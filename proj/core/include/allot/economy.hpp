#pragma once

#include <optional>
#include <span>
#include <vector>

#include "allot/claims.hpp"
#include "allot/preference.hpp"
#include "allot/rational.hpp"

namespace allot {

/// A preference profile sharing a social endowment omega > 0, optionally with
/// individual endowments summing to omega. At least two agents.
class Economy {
 public:
  Economy(std::vector<Preference> prefs, Rat omega, std::optional<std::vector<Rat>> endowments = std::nullopt);

  std::size_t size() const noexcept { return prefs_.size(); }
  std::span<const Preference> prefs() const noexcept { return prefs_; }
  const Preference& pref(std::size_t i) const { return prefs_.at(i); }
  const Rat& omega() const noexcept { return omega_; }
  /// omega / n.
  const Rat& equal_share() const noexcept { return equal_share_; }

  bool has_endowments() const noexcept { return endowments_.has_value(); }
  /// Individual endowments; throws DomainError when absent.
  std::span<const Rat> endowments() const;

  bool all_single_peaked() const;
  bool any_unbounded() const;

  /// Peaks of a single-peaked profile; throws DomainError otherwise.
  std::vector<Rat> peaks() const;

  /// Same economy with agent i's preference replaced.
  Economy with_pref(std::size_t i, Preference p) const;

  friend bool operator==(const Economy&, const Economy&) = default;

 private:
  std::vector<Preference> prefs_;
  Rat omega_;
  Rat equal_share_;
  std::optional<std::vector<Rat>> endowments_;
};

/// Nonnegative amounts summing exactly to the social endowment.
class Allotment {
 public:
  Allotment(std::vector<Rat> amounts, const Rat& omega);

  std::span<const Rat> amounts() const noexcept { return amounts_; }
  const Rat& operator[](std::size_t i) const { return amounts_.at(i); }
  std::size_t size() const noexcept { return amounts_.size(); }

  friend bool operator==(const Allotment&, const Allotment&) = default;

 private:
  std::vector<Rat> amounts_;
};

/// Agents that are fully satiated (plus) versus adjusted (minus) relative to
/// a reference point per agent (omega/n, or individual endowments).
struct SimplePartition {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  /// Aggregate excess demand sum p_j - omega.
  Rat z;
  /// Amount left for the minus agents after the first step.
  Rat adjustment;
  /// Reference point of each agent.
  std::vector<Rat> reference;

  bool excess_demand() const { return z >= 0; }
};

/// sum_j p_j - omega; zero counts as excess demand.
Rat excess(const Economy& econ);

/// Partition relative to equal division omega/n.
SimplePartition partition(const Economy& econ);

/// Partition relative to arbitrary per-agent reference points.
SimplePartition partition(const Economy& econ, std::span<const Rat> reference);

/// Partition relative to the economy's individual endowments.
SimplePartition endowment_partition(const Economy& econ);

/// Claims |p_i - ref_i| of the minus agents (in partition order) against the
/// partition's adjustment.
ClaimsProblem claims_of_minus(const SimplePartition& part, const Economy& econ);

/// Economy whose agents all share the same slopes and the given peaks.
Economy make_economy(std::span<const Rat> peaks, const Rat& omega);

}  // namespace allot
