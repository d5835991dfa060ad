#include "allot/economy.hpp"

namespace allot {

Economy::Economy(std::vector<Preference> prefs, Rat omega, std::optional<std::vector<Rat>> endowments)
    : prefs_(std::move(prefs)), omega_(std::move(omega)), endowments_(std::move(endowments)) {
  if (prefs_.size() < 2) throw DomainError("an economy needs at least two agents");
  if (omega_ <= 0) throw DomainError("social endowment must be positive, got " + to_string(omega_));
  equal_share_ = omega_ / static_cast<unsigned long>(prefs_.size());
  if (endowments_) {
    if (endowments_->size() != prefs_.size()) throw DomainError("one individual endowment per agent required");
    Rat sum = 0;
    for (const Rat& w : *endowments_) {
      if (w < 0) throw DomainError("negative individual endowment " + to_string(w));
      sum += w;
    }
    if (sum != omega_) {
      throw DomainError("individual endowments sum to " + to_string(sum) + ", not " + to_string(omega_));
    }
  }
}

std::span<const Rat> Economy::endowments() const {
  if (!endowments_) throw DomainError("economy has no individual endowments");
  return *endowments_;
}

bool Economy::all_single_peaked() const {
  for (const Preference& p : prefs_) {
    if (!p.is_single_peaked()) return false;
  }
  return true;
}

bool Economy::any_unbounded() const {
  for (const Preference& p : prefs_) {
    if (p.is_unbounded()) return true;
  }
  return false;
}

std::vector<Rat> Economy::peaks() const {
  std::vector<Rat> out;
  out.reserve(prefs_.size());
  for (const Preference& p : prefs_) out.push_back(p.peak());
  return out;
}

Economy Economy::with_pref(std::size_t i, Preference p) const {
  Economy copy = *this;
  copy.prefs_.at(i) = std::move(p);
  return copy;
}

Allotment::Allotment(std::vector<Rat> amounts, const Rat& omega) : amounts_(std::move(amounts)) {
  Rat sum = 0;
  for (const Rat& x : amounts_) {
    if (x < 0) throw DomainError("negative amount " + to_string(x) + " in allotment");
    sum += x;
  }
  if (sum != omega) throw DomainError("allotment sums to " + to_string(sum) + ", not " + to_string(omega));
}

Rat excess(const Economy& econ) {
  Rat z = -econ.omega();
  for (const Preference& p : econ.prefs()) z += p.peak();
  return z;
}

SimplePartition partition(const Economy& econ, std::span<const Rat> reference) {
  if (reference.size() != econ.size()) throw DomainError("one reference point per agent required");
  SimplePartition part;
  part.z = excess(econ);
  part.reference.assign(reference.begin(), reference.end());
  const bool demand = part.z >= 0;
  Rat first_step = 0;
  for (std::size_t i = 0; i < econ.size(); ++i) {
    const Rat& p = econ.pref(i).peak();
    const bool simple = demand ? p < reference[i] : p > reference[i];
    if (simple) {
      part.plus.push_back(i);
      first_step += p;
    } else {
      part.minus.push_back(i);
      first_step += reference[i];
    }
  }
  part.adjustment = abs_diff(econ.omega(), first_step);
  return part;
}

SimplePartition partition(const Economy& econ) {
  const std::vector<Rat> reference(econ.size(), econ.equal_share());
  return partition(econ, reference);
}

SimplePartition endowment_partition(const Economy& econ) { return partition(econ, econ.endowments()); }

ClaimsProblem claims_of_minus(const SimplePartition& part, const Economy& econ) {
  std::vector<Rat> claims;
  claims.reserve(part.minus.size());
  for (std::size_t i : part.minus) claims.push_back(abs_diff(econ.pref(i).peak(), part.reference[i]));
  return ClaimsProblem(std::move(claims), part.adjustment);
}

Economy make_economy(std::span<const Rat> peaks, const Rat& omega) {
  std::vector<Preference> prefs;
  prefs.reserve(peaks.size());
  for (const Rat& p : peaks) prefs.push_back(Preference::single_peaked(p));
  return Economy(std::move(prefs), omega);
}

}  // namespace allot
