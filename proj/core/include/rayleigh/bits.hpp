#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rayleigh {

// Ground sets hold at most 31 elements, so subsets fit in a machine word.
// Bit i corresponds to the element at position i of the ground ordering.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 31;

inline constexpr Subset bit(int i) { return Subset{1} << i; }
inline constexpr bool contains(Subset s, int i) { return (s >> i) & 1u; }
inline int popcount(Subset s) { return std::popcount(s); }
inline constexpr Subset full_set(int n) {
  return n == 0 ? 0u : (~Subset{0} >> (32 - n));
}

// Index of the lowest set bit. Undefined for 0.
inline int lowest_bit(Subset s) { return std::countr_zero(s); }

// Calls fn(i) for each element of s in increasing order.
template <typename Fn>
void for_each_bit(Subset s, Fn&& fn) {
  while (s != 0) {
    int i = std::countr_zero(s);
    fn(i);
    s &= s - 1;
  }
}

inline std::vector<int> to_indices(Subset s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

// Next k-subset in increasing numeric order (Gosper's hack).
// Returns 0 when s was the last k-subset within n bits.
inline Subset next_combination(Subset s, int n) {
  Subset c = s & (~s + 1);
  Subset r = s + c;
  Subset next = (((r ^ s) >> 2) / c) | r;
  return next < bit(n) ? next : 0;
}

// First k-subset of an n-element ground set, or 0 when impossible (k > n);
// note k = 0 also yields 0, the empty set, which is a valid subset.
inline Subset first_combination(int k) { return full_set(k); }

// Enumerates all k-subsets of [0, n) in increasing numeric order.
inline std::vector<Subset> combinations(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  for (Subset s = first_combination(k); s != 0; s = next_combination(s, n))
    out.push_back(s);
  return out;
}

// Calls fn(t) for every subset t of mask, including 0 and mask itself,
// in decreasing numeric order of t except that 0 comes last.
template <typename Fn>
void for_each_subset_of(Subset mask, Fn&& fn) {
  Subset t = mask;
  while (true) {
    fn(t);
    if (t == 0) break;
    t = (t - 1) & mask;
  }
}

// Same enumeration in increasing numeric order, 0 first and mask last.
template <typename Fn>
void for_each_subset_ascending(Subset mask, Fn&& fn) {
  Subset t = 0;
  while (true) {
    fn(t);
    if (t == mask) break;
    t = (t - mask) & mask;
  }
}

}  // namespace rayleigh
