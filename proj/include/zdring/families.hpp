#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/ideal.hpp"
#include "zdring/limits.hpp"

namespace zdring {

bool is_prime(long long n) noexcept;

/// The zero ring {0}.
FiniteRing zero_ring();

/// Residue ring Z/nZ; element k is the residue k.
FiniteRing zn(std::size_t n, const Limits& limits = {});

/// GF(p^k), built over the lexicographically least monic irreducible
/// polynomial of degree k (coefficients compared from the constant term up).
/// Element index a0 + a1 p + ... + a_{k-1} p^{k-1} is a0 + a1 t + ... .
FiniteRing gf(long long p, std::size_t k = 1, const Limits& limits = {});

/// Coefficients (constant term first, leading 1 last) of the modulus gf uses.
std::vector<long long> gf_modulus(long long p, std::size_t k);

/// N_{0,p^n} = <a; a^2 = 0, p^n a = 0>. Element m is m·a.
FiniteRing n0(long long p, std::size_t n = 1, const Limits& limits = {});

/// N_{p^2} = <a; a^2 = pa, p^2 a = 0>. Element m is m·a.
FiniteRing np2(long long p, const Limits& limits = {});

/// N_{p,p}: 3x3 strictly upper triangular matrices over GF(p) with equal
/// superdiagonal entries a and corner entry b; index a + p·b.
FiniteRing npp(long long p, const Limits& limits = {});

/// A_p: 2x2 matrices over GF(p) with zero bottom row; index x + p·y for
/// the top row (x, y). (1,0) is a left identity.
FiniteRing ap(long long p, const Limits& limits = {});

/// A_p^0: 2x2 matrices over GF(p) with zero right column; index x + p·y for
/// the left column (x, y). (1,0) is a right identity.
FiniteRing ap0(long long p, const Limits& limits = {});

/// Z_p[x]/(x^2); index a + p·b for a + b x.
FiniteRing zpx_mod_x2(long long p, const Limits& limits = {});

/// Componentwise direct sum; element (r, s) has index r·|S| + s.
FiniteRing direct_sum(const FiniteRing& r, const FiniteRing& s, const Limits& limits = {});

/// k×k matrices over `base`; entries stored row-major, entry t contributing
/// digit t (least significant first) in base |R|.
FiniteRing matrix_ring(const FiniteRing& base, std::size_t k, const Limits& limits = {});

/// R/I. Coset representatives are least indices; cosets are numbered in
/// increasing order of representative.
FiniteRing quotient(const FiniteRing& ring, const Ideal& ideal);

/// Coset index of every element of R under the projection R -> R/I.
std::vector<Element> quotient_map(const FiniteRing& ring, const Ideal& ideal);

struct GeneratedSubring {
  FiniteRing ring;
  /// embedding[i] is the element of the parent ring that subring element i
  /// stands for; increasing, embedding[0] = 0.
  std::vector<Element> embedding;
};

/// Closure of `gens` under +, - and ·.
GeneratedSubring subring_generated(const FiniteRing& ring, std::span<const Element> gens);

/// Ring on a subset closed under +, - and · (members sorted, 0 first).
FiniteRing restrict_to(const FiniteRing& ring, std::span<const Element> closed_subset);

/// Least m >= 1 with m·x = 0 for every x.
std::size_t characteristic(const FiniteRing& ring);

}  // namespace zdring
