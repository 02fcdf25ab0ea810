#pragma once

#include <bit>
#include <cstdint>

namespace ospq {

// Increasing subsets of anticommuting generators are encoded as bitmasks
// (bit k = generator k+1). These helpers track the signs produced when
// words of odd generators are merged, split or reordered.

// Lexicographic order on increasing subsets: compares the sorted element
// sequences, shorter prefixes first.
inline int subset_compare(std::uint64_t a, std::uint64_t b) {
  if (a == b) return 0;
  std::uint64_t x = a ^ b;
  int k = std::countr_zero(x);
  if (a & (std::uint64_t(1) << k)) return (b >> k) != 0 ? -1 : 1;
  return (a >> k) != 0 ? 1 : -1;
}

// Sign of sorting the concatenation of two increasing words a, b into one
// increasing word; 0 if they share an element.
inline int merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int inv = 0;
  std::uint64_t rest = b;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    inv += std::popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

// Sign of anticommuting the element at bit position `bitpos` to the front
// of the increasing word (crossings with the smaller elements).
inline int removal_sign(std::uint64_t word, int bitpos) {
  std::uint64_t below = (std::uint64_t(1) << bitpos) - 1;
  return (std::popcount(word & below) & 1) ? -1 : 1;
}

inline int subset_size(std::uint64_t a) { return std::popcount(a); }

inline bool subset_has(std::uint64_t a, int bitpos) {
  return (a >> bitpos) & 1;
}

}  // namespace ospq
