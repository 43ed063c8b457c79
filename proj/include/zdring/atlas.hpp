#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdring/finite_ring.hpp"
#include "zdring/graph.hpp"
#include "zdring/isomorphism.hpp"
#include "zdring/limits.hpp"
#include "zdring/ncpoly.hpp"
#include "zdring/structure.hpp"

namespace zdring {

/// Representative of one isomorphism class with its cached invariants.
struct AtlasEntry {
  FiniteRing ring;
  Certificate certificate;
  StructureReport report;
  std::vector<std::uint8_t> graph_certificate;
};

/// Builds an entry for an arbitrary ring (certificate, report, graph form).
AtlasEntry make_entry(const FiniteRing& ring, const Limits& limits = {});

/// Additive type plus the products of generators, constants[i*k+j] being
/// g_i * g_j in standard coordinates.
struct GeneratorPresentation {
  AdditiveType type;
  std::vector<Element> constants;
};

/// All additive types of order n (prime-power cyclic orders, primes
/// ascending, orders descending within a prime). Throws OrderCapExceeded
/// above the enumeration cap.
std::vector<AdditiveType> abelian_group_types(std::size_t n, const Limits& limits = {});

/// Every associative presentation on a p-group type, in scan order. Mostly
/// useful for tests; enumerate_rings deduplicates these by certificate.
std::vector<GeneratorPresentation> associative_presentations(const AdditiveType& type,
                                                             const Limits& limits = {});

/// One entry per isomorphism class of rings of order n, sorted by
/// certificate. Composite orders are assembled from their p-primary parts.
/// Results are memoized per order for the lifetime of the process.
std::vector<AtlasEntry> enumerate_rings(std::size_t n, const Limits& limits = {});

/// All classes of order 1..n_max in order of (order, certificate).
std::vector<AtlasEntry> enumerate_up_to(std::size_t n_max, const Limits& limits = {});

/// Entries of order <= n_max whose zero-divisor graph is isomorphic to g.
std::vector<AtlasEntry> rings_with_graph(std::size_t n_max, const SimpleGraph& g, const Limits& limits = {});

/// Index pairs (i < j) of entries with isomorphic graphs but non-isomorphic
/// rings. With a filter, only entries satisfying every listed identity take
/// part. The order-1 zero ring is skipped: its empty graph matches that of
/// every finite field.
std::vector<std::pair<std::size_t, std::size_t>> graph_determinacy_report(
    const std::vector<AtlasEntry>& entries, const std::optional<std::vector<NcPoly>>& filter = std::nullopt,
    const Limits& limits = {});

/// Catalog name for a ring of this certificate ("Z9", "N0(3)", "Z2+Z2"...),
/// if one of the named constructions of that order matches.
std::optional<std::string> catalog_label(const Certificate& certificate, const Limits& limits = {});

std::string write_atlas(const std::vector<AtlasEntry>& entries);
std::vector<AtlasEntry> read_atlas(std::string_view text, const Limits& limits = {});
void save_atlas(const std::vector<AtlasEntry>& entries, const std::filesystem::path& path);
std::vector<AtlasEntry> load_atlas(const std::filesystem::path& path, const Limits& limits = {});

}  // namespace zdring
