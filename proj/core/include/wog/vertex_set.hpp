#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wog {

/// Bitmask over at most 64 vertices (or registry variables).
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxSetVertices = 64;

inline constexpr VertexSet singleton(std::uint32_t v) { return VertexSet{1} << v; }
inline constexpr bool has_member(VertexSet s, std::uint32_t v) { return (s >> v) & 1U; }
inline int set_size(VertexSet s) { return std::popcount(s); }

template <typename Int = std::uint32_t>
std::vector<Int> set_members(VertexSet s) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s) {
    out.push_back(static_cast<Int>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

template <typename Int>
VertexSet set_of(std::span<const Int> members) {
  VertexSet s = 0;
  for (auto m : members) s |= singleton(static_cast<std::uint32_t>(m));
  return s;
}

/// Smaller sets first; equal sizes compare their sorted member lists.
inline bool set_order_less(VertexSet a, VertexSet b) {
  const int sa = std::popcount(a), sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  const VertexSet diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

/// `{a, b, c}` with names listed by index.
std::string render_set(VertexSet s, std::span<const std::string> names);

}  // namespace wog
