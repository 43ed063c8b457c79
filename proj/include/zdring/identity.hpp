#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/limits.hpp"
#include "zdring/ncpoly.hpp"

namespace zdring {

using Assignment = std::map<Variable, Element>;

/// Value of p in the ring; integer coefficients act by repeated addition.
Element evaluate(const NcPoly& p, const FiniteRing& ring, const Assignment& assignment);

struct IdentityOptions {
  /// When |R|^d exceeds the budget, test this many random assignments
  /// instead of throwing BudgetExceeded.
  bool allow_sampling = false;
  std::uint64_t seed = 0x5eed;
};

struct IdentityResult {
  bool holds = true;
  /// Lexicographically least failing assignment (exhaustive mode).
  std::optional<Assignment> counterexample;
  std::uint64_t evaluations = 0;
  /// True when the verdict comes from random sampling.
  bool sampled = false;
};

/// Checks p = 0 on every assignment of its variables. Assignments are
/// ordered lexicographically with the lowest variable most significant.
IdentityResult satisfies_identity(const FiniteRing& ring, const NcPoly& p, const Limits& limits = {},
                                  const IdentityOptions& options = {});

/// "x=1, y=0" style rendering.
std::string render_assignment(const Assignment& assignment);

}  // namespace zdring
