#pragma once

// Exhaustive brute-force reference, kept independent of the library's search
// kernels: walks all n! row-to-column assignments with std::next_permutation
// and filters by direct pairwise attack checks.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "qsl/board.hpp"

namespace oracle {

inline bool diagonal_clash(const std::vector<int>& cols) {
  const int n = static_cast<int>(cols.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(cols[i] - cols[j]) == j - i) return true;
    }
  }
  return false;
}

inline std::uint64_t count_by_permutation_scan(int n) {
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 1);
  std::uint64_t count = 0;
  do {
    if (!diagonal_clash(cols)) ++count;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return count;
}

// All solutions, ascending in the row-to-column sequence (the permutations
// are generated in lexicographic order).
inline std::vector<qsl::Configuration> solutions_by_permutation_scan(int n) {
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 1);
  std::vector<qsl::Configuration> out;
  const qsl::BoardSize board{n};
  do {
    if (diagonal_clash(cols)) continue;
    std::vector<qsl::Square> squares;
    squares.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) squares.push_back({i + 1, cols[static_cast<std::size_t>(i)]});
    out.emplace_back(board, std::move(squares));
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

}  // namespace oracle
