#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zdring/finite_ring.hpp"

namespace zdring {

/// Serializes a ring in the "ringtab 1" text format:
///
///     ringtab 1
///     order <n>
///     label <text>        (only when the ring has a label)
///     add
///     <n rows of n indices>
///     mul
///     <n rows of n indices>
std::string write_ringtab(const FiniteRing& ring);

/// Parses one ringtab block. Structural problems raise FormatError; tables
/// that parse but break an axiom raise AxiomViolation exactly as make_ring.
FiniteRing read_ringtab(std::string_view text, const Limits& limits = {});

/// Splits text holding several ringtab blocks and parses each.
std::vector<FiniteRing> read_ringtabs(std::string_view text, const Limits& limits = {});

FiniteRing load_ringtab(const std::filesystem::path& path, const Limits& limits = {});
void save_ringtab(const FiniteRing& ring, const std::filesystem::path& path);

/// Whole-file helpers shared by the loaders; throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace zdring
