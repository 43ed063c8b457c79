#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/ideal.hpp"
#include "zdring/limits.hpp"

namespace zdring {

/// Nonzero x with xy = 0 or yx = 0 for some nonzero y, in increasing order.
std::vector<Element> zero_divisors(const FiniteRing& ring);

/// Two-sided identity, if the ring has one.
std::optional<Element> identity_element(const FiniteRing& ring);

/// Invertible elements. Throws NoIdentity when the ring has no identity.
std::vector<Element> units(const FiniteRing& ring);
std::vector<Element> idempotents(const FiniteRing& ring);
std::vector<Element> nilpotent_elements(const FiniteRing& ring);

bool is_commutative(const FiniteRing& ring);

/// Additive subgroup generated by `seeds`, sorted.
std::vector<Element> additive_closure(const FiniteRing& ring, std::span<const Element> seeds);

/// Smallest two-sided ideal containing a: Za + Ra + aR + RaR.
Ideal principal_ideal(const FiniteRing& ring, Element a);
Ideal ideal_sum(const FiniteRing& ring, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// Additive span of all products xy with x in a, y in b.
Ideal ideal_product(const FiniteRing& ring, const Ideal& a, const Ideal& b);
/// Least k with I^k = 0, if I is nilpotent.
std::optional<std::size_t> ideal_nilpotency_index(const FiniteRing& ring, const Ideal& ideal);

/// Every two-sided ideal, sorted by (size, members). Throws
/// OrderCapExceeded above limits.structural_cap.
std::vector<Ideal> ideals(const FiniteRing& ring, const Limits& limits = {});

/// Largest nilpotent two-sided ideal (the Jacobson radical of a finite ring).
Ideal jacobson_radical(const FiniteRing& ring, const Limits& limits = {});

/// Least n with R^n = 0, absent when the ring is not nilpotent.
std::optional<std::size_t> nilpotency_index(const FiniteRing& ring);

/// True iff the ring has a unique minimal nonzero ideal.
bool is_subdirectly_irreducible(const FiniteRing& ring, const Limits& limits = {});

/// R/J(R) is a field. Throws NoIdentity for rings without identity.
bool is_local(const FiniteRing& ring, const Limits& limits = {});

bool is_field(const FiniteRing& ring);

/// Finest decomposition of R as a direct sum of nonzero ideals, components
/// sorted by (size, ring certificate). A single component means R is
/// indecomposable.
std::vector<Ideal> decompose(const FiniteRing& ring, const Limits& limits = {});

struct StructureReport {
  std::size_t order = 0;
  std::string label;
  std::optional<Element> identity;
  bool is_commutative = false;
  bool is_field = false;
  /// Absent for rings without identity.
  std::optional<bool> is_local;
  std::optional<std::size_t> nilpotency_index;
  bool is_subdirectly_irreducible = false;
  bool is_decomposable = false;
  std::size_t characteristic = 1;
  std::size_t zero_divisor_count = 0;
  Ideal jacobson_radical;

  bool has_identity() const noexcept { return identity.has_value(); }
  bool is_nilpotent() const noexcept { return nilpotency_index.has_value(); }
};

StructureReport structure_report(const FiniteRing& ring, const Limits& limits = {});

/// `key: value` lines in a fixed key order.
std::string render_report(const StructureReport& report);

/// Checks the cross-field consistency rules of a report (used by tests and
/// the atlas); returns an empty string when consistent, else a description.
std::string report_inconsistency(const StructureReport& report);

}  // namespace zdring
