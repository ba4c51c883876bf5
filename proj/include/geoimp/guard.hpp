#pragma once

#include <cstddef>
#include <string_view>

namespace geoimp {

/// Largest carrier on which powerset-style enumerations run. Defaults to 20;
/// the GEOIMP_SIZE_GUARD environment variable overrides it.
std::size_t size_guard();

/// Throws ModelError(TooLarge) when `size` exceeds `limit`.
void require_within(std::size_t size, std::size_t limit, std::string_view what);

}  // namespace geoimp
