#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/limits.hpp"

namespace zdring {

/// Invariant factor type of the additive group as prime-power cyclic orders,
/// primes ascending and, within a prime, orders descending. [4,2] is
/// Z4 + Z2; the zero ring has the empty type.
using AdditiveType = std::vector<std::size_t>;

AdditiveType additive_type(const FiniteRing& ring);

/// Canonical byte string: equal for two rings iff they are isomorphic.
using Certificate = std::vector<std::uint8_t>;

/// Searches for an isomorphism R -> S by backtracking over images of an
/// additive basis of R, checking products as soon as they are determined.
/// Absent when the orders differ or no isomorphism exists.
std::optional<RingHom> ring_isomorphic(const FiniteRing& r, const FiniteRing& s,
                                       const Limits& limits = {});

/// Minimum, over additive bases compatible with an isomorphism-invariant
/// element colouring, of (colour sequence, structure constants) in standard
/// coordinates. Throws OrderCapExceeded above limits.structural_cap.
Certificate ring_canonical_certificate(const FiniteRing& ring, const Limits& limits = {});

/// Rebuilds a ring in standard coordinates from its certificate. The result
/// has the same certificate.
FiniteRing ring_from_certificate(const Certificate& certificate);

/// Ring on the standard group of `type` (mixed radix, first coordinate least
/// significant) with generator products `constants[i*k + j]` given as
/// standard indices. Throws AxiomViolation if the result is not associative.
FiniteRing ring_from_structure_constants(const AdditiveType& type,
                                         const std::vector<Element>& constants,
                                         const Limits& limits = {});

std::string to_hex(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);

}  // namespace zdring
