#pragma once

#include <span>
#include <vector>

#include "zdring/finite_ring.hpp"

namespace zdring {

/// A two-sided ideal, stored as the sorted list of its member indices.
/// Construct through make_ideal, which checks closure.
class Ideal {
 public:
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element a) const;
  bool is_zero() const noexcept { return members_.size() == 1; }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  /// Ordering by (size, members).
  friend bool operator<(const Ideal& a, const Ideal& b);

 private:
  friend Ideal make_ideal(const FiniteRing&, std::span<const Element>);
  friend Ideal trusted_ideal(std::vector<Element>);
  std::vector<Element> members_;
};

/// Validates that `members` is a two-sided ideal of `ring`; throws
/// NotAnIdeal otherwise. Duplicates and order are irrelevant.
Ideal make_ideal(const FiniteRing& ring, std::span<const Element> members);

/// Wraps a member list already known to be an ideal (sorted, unique).
Ideal trusted_ideal(std::vector<Element> sorted_members);

Ideal zero_ideal();
Ideal whole_ring_ideal(const FiniteRing& ring);

}  // namespace zdring
