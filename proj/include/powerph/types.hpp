#pragma once

#include <cstdint>
#include <limits>

namespace powerph {

using Vertex = std::uint32_t;
using SimplexId = std::uint32_t;

/// Power-filtration scale. Integer valued since graph distances are hop counts.
using Scale = std::int32_t;

inline constexpr Scale kInfiniteScale = std::numeric_limits<Scale>::max();

}  // namespace powerph
