#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace edgeideal {

// Subset of at most 64 vertices, bit i <=> vertex i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int i) { return VertexSet{1} << i; }
constexpr bool contains(VertexSet s, int i) { return (s >> i) & 1U; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline VertexSet from_members(const std::vector<int>& v) {
  VertexSet s = 0;
  for (int i : v) s |= bit(i);
  return s;
}

}  // namespace edgeideal
