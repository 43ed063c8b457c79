#pragma once

#include <cstddef>
#include <cstdint>

namespace zdring {

/// Resource limits shared by the library. Every operation that can blow up
/// takes one of these; the defaults are what the CLI uses unless overridden.
struct Limits {
  /// Largest ring order any constructor will build.
  std::size_t order_cap = 256;
  /// Largest order for ideal-lattice based operations.
  std::size_t structural_cap = 64;
  /// Largest vertex count for canonical labeling.
  std::size_t graph_cap = 64;
  /// Largest order enumerate_rings accepts. Values above
  /// kEnumerationHardMax are clamped.
  std::size_t enumeration_cap = 9;
  /// Maximum number of assignments an exhaustive identity check may visit.
  std::uint64_t identity_budget = 10'000'000;
  /// Worker threads for the parallel scans; 0 means hardware concurrency.
  unsigned workers = 0;

  static constexpr std::size_t kEnumerationHardMax = 16;

  std::size_t effective_enumeration_cap() const noexcept {
    return enumeration_cap < kEnumerationHardMax ? enumeration_cap : kEnumerationHardMax;
  }
  unsigned effective_workers() const noexcept;
};

}  // namespace zdring
