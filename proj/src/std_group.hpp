#pragma once

// Standard coordinates for a finite abelian group of a given type: element
// index sum_i a_i * place_i with place_0 = 1 and place_{i+1} = place_i * c_i,
// so the span of the first m generators occupies indices [0, place_m).

#include <cstddef>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/isomorphism.hpp"

namespace zdring::detail {

class StdGroup {
 public:
  explicit StdGroup(AdditiveType type);

  const AdditiveType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return type_.size(); }
  std::size_t order() const noexcept { return n_; }
  std::size_t place(std::size_t i) const noexcept { return place_[i]; }
  std::size_t coord(Element x, std::size_t i) const noexcept { return coords_[x * type_.size() + i]; }

  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  /// k·x for 0 <= k.
  Element scale(std::size_t k, Element x) const noexcept;
  Element generator(std::size_t i) const noexcept { return static_cast<Element>(place_[i]); }

  /// Elements x with m·x = 0.
  std::vector<Element> killed_by(std::size_t m) const;

  /// Bilinear product determined by generator products constants[i*k+j].
  Element product(const std::vector<Element>& constants, Element x, Element y) const noexcept;

  std::vector<Element> flat_add() const { return add_; }

 private:
  AdditiveType type_;
  std::size_t n_ = 1;
  std::vector<std::size_t> place_;
  std::vector<std::size_t> coords_;
  std::vector<Element> add_;
};

/// Isomorphism-invariant element profile, comparable across rings.
using Profile = std::vector<std::size_t>;
std::vector<Profile> element_profiles(const FiniteRing& ring);

/// Colour classes refined from the profiles until stable; colour ids are
/// ranks of sorted signatures, so isomorphic rings get matching colours.
std::vector<std::size_t> refined_colors(const FiniteRing& ring);

}  // namespace zdring::detail
