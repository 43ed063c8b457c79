#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdring/limits.hpp"

namespace zdring {

/// Elements of a finite ring are dense indices 0..n-1; index 0 is the
/// additive zero.
using Element = std::uint32_t;

/// Row-major square operation table.
using Table = std::vector<std::vector<Element>>;

/// A finite associative ring given by its addition and multiplication
/// tables. Instances are only produced by make_ring (or by constructors that
/// go through it), so every FiniteRing satisfies the ring axioms. Immutable
/// after construction.
class FiniteRing {
 public:
  std::size_t order() const noexcept { return n_; }

  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  /// k·a for any integer k (negative k uses the additive inverse).
  Element scale(long long k, Element a) const noexcept;
  /// Additive order of a.
  std::size_t additive_order(Element a) const noexcept;

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> mul_table() const noexcept { return mul_; }
  Table add_rows() const;
  Table mul_rows() const;

  const std::string& label() const noexcept { return label_; }
  /// Display name of an element; falls back to its index.
  std::string element_name(Element a) const;
  bool has_element_names() const noexcept { return !names_.empty(); }

  FiniteRing with_label(std::string label) const;
  FiniteRing with_element_names(std::vector<std::string> names) const;

  /// Table equality (labels and names are ignored).
  bool same_tables(const FiniteRing& other) const noexcept {
    return n_ == other.n_ && add_ == other.add_ && mul_ == other.mul_;
  }

 private:
  friend FiniteRing make_ring(const Table&, const Table&, std::string, const Limits&);
  friend FiniteRing make_ring_flat(std::size_t, std::vector<Element>, std::vector<Element>,
                                   std::string, const Limits&);
  FiniteRing() = default;

  std::size_t n_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::string label_;
  std::vector<std::string> names_;
};

/// Validates the tables eagerly and returns the ring. Throws AxiomViolation
/// naming the first failing axiom and a witness triple, or OrderCapExceeded.
FiniteRing make_ring(const Table& add, const Table& mul, std::string label = {},
                     const Limits& limits = {});

/// Same as make_ring for flat row-major tables of size n*n.
FiniteRing make_ring_flat(std::size_t n, std::vector<Element> add, std::vector<Element> mul,
                          std::string label = {}, const Limits& limits = {});

/// A map between the index sets of two rings.
struct RingHom {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Element> image;
  bool is_isomorphism = false;

  Element operator()(Element a) const { return image.at(a); }
};

/// True when `hom` preserves both tables of source -> target (and is a
/// bijection if it claims to be an isomorphism).
bool is_homomorphism(const RingHom& hom, const FiniteRing& source, const FiniteRing& target);

}  // namespace zdring
