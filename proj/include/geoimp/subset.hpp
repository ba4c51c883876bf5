#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace geoimp {

/// Finite sets of small indices (elements, points, filters) as bit masks.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

constexpr Subset bit(int i) { return Subset{1} << i; }
constexpr bool contains(Subset s, int i) { return (s >> i) & 1U; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr Subset full_set(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline int cardinality(Subset s) { return std::popcount(s); }

std::vector<int> members(Subset s);

/// Canonical order on subsets: by size, then lexicographically on the sorted
/// member lists.
bool canonical_less(Subset a, Subset b);

/// Renders {x,y} using the given names; the empty set is rendered "{}".
std::string format_set(std::span<const std::string> names, Subset s);

}  // namespace geoimp
