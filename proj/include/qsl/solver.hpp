#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsl/board.hpp"
#include "qsl/errors.hpp"
#include "qsl/symmetry.hpp"

namespace qsl {

// Hard ceiling for every search kernel. Caps below can lower the limit for a
// call but never raise it past this.
inline constexpr int kMaxSolverBoard = 16;

// Default cap for pure counting.
inline constexpr int kDefaultCountCap = 16;

// Default cap for operations that materialize or visit every solution.
inline constexpr int kDefaultEnumerateCap = 12;

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double> elapsed{0.0};
  std::string method;
};

// Solution counts of one board size, split by stabilizer class. f_* count
// solutions, c_* count D4 equivalence classes; each class of stabilizer
// order m contributes 8/m solutions, so
//   total = f_r + f_r2_only + f_e = 2 c_r + 4 c_r2_only + 8 c_e.
struct ClassCounts {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t f_r = 0;
  std::uint64_t f_r2_only = 0;
  std::uint64_t f_e = 0;
  std::uint64_t c_r = 0;
  std::uint64_t c_r2_only = 0;
  std::uint64_t c_e = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

inline bool counts_consistent(const ClassCounts& c) {
  return c.total == c.f_r + c.f_r2_only + c.f_e && c.f_r == 2 * c.c_r &&
         c.f_r2_only == 4 * c.c_r2_only && c.f_e == 8 * c.c_e;
}

struct EvennessCheck {
  bool ok = false;
  std::uint64_t pairs = 0;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline void check_cap(int n, int cap, const char* what) {
  const int limit = std::min(cap, kMaxSolverBoard);
  if (n > limit) {
    throw capacity_error(std::string(what) + ": n=" + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(limit));
  }
}

inline constexpr std::uint32_t row_mask(int n) { return (1u << n) - 1; }

// Row-by-row backtracking over bitmasks. `cols` has bit j set when column
// j+1 is taken; `dl` and `dr` carry diagonal and anti-diagonal exclusions
// shifted into the current row's frame. Columns are tried lowest bit first,
// which makes the visit order lexicographic in the column sequence.
inline std::uint64_t count_rows(std::uint32_t full, std::uint32_t cols, std::uint32_t dl,
                                std::uint32_t dr, std::uint64_t& nodes) {
  std::uint64_t found = 0;
  std::uint32_t open = full & ~(cols | dl | dr);
  while (open != 0) {
    const std::uint32_t bit = open & (0u - open);
    open ^= bit;
    ++nodes;
    const std::uint32_t next_cols = cols | bit;
    if (next_cols == full) {
      ++found;
    } else {
      found += count_rows(full, next_cols, ((dl | bit) << 1) & full, (dr | bit) >> 1, nodes);
    }
  }
  return found;
}

// Solutions and nodes of the subtree whose row-1 queen sits on column j0
// (0-based). Used both sequentially and as the unit of work for threads;
// per-subtree results are summed in column order either way.
inline std::pair<std::uint64_t, std::uint64_t> count_first_column(int n, int j0) {
  const std::uint32_t full = row_mask(n);
  const std::uint32_t bit = 1u << j0;
  std::uint64_t nodes = 1;
  std::uint64_t found;
  if (bit == full) {
    found = 1;  // n == 1
  } else {
    found = count_rows(full, bit, (bit << 1) & full, bit >> 1, nodes);
  }
  return {found, nodes};
}

template <typename Visitor>
inline void enumerate_rows(int n, int row, std::uint32_t cols, std::uint32_t dl, std::uint32_t dr,
                           std::array<int, kMaxSolverBoard>& col_of_row, BoardSize board,
                           Visitor& visit, std::uint64_t& nodes) {
  const std::uint32_t full = row_mask(n);
  std::uint32_t open = full & ~(cols | dl | dr);
  while (open != 0) {
    const std::uint32_t bit = open & (0u - open);
    open ^= bit;
    ++nodes;
    col_of_row[row] = std::countr_zero(bit) + 1;
    if (row + 1 == n) {
      std::vector<Square> squares(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) squares[static_cast<std::size_t>(i)] = Square{i + 1, col_of_row[i]};
      visit(Configuration(board, std::move(squares)));
    } else {
      enumerate_rows(n, row + 1, cols | bit, ((dl | bit) << 1) & full, (dr | bit) >> 1, col_of_row,
                     board, visit, nodes);
    }
  }
}

// Occupancy bookkeeping for searches that place squares one at a time in
// arbitrary row order (used by the symmetric-solution solvers).
struct OccupancyMasks {
  int n = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::uint64_t diag = 0;
  std::uint64_t anti = 0;

  bool open(Square sq) const {
    return ((rows >> (sq.row - 1)) & 1u) == 0 && ((cols >> (sq.col - 1)) & 1u) == 0 &&
           ((diag >> (sq.col - sq.row + n - 1)) & 1u) == 0 &&
           ((anti >> (sq.row + sq.col - 2)) & 1u) == 0;
  }

  void place(Square sq) {
    rows |= 1u << (sq.row - 1);
    cols |= 1u << (sq.col - 1);
    diag |= std::uint64_t{1} << (sq.col - sq.row + n - 1);
    anti |= std::uint64_t{1} << (sq.row + sq.col - 2);
  }

  void remove(Square sq) {
    rows &= ~(1u << (sq.row - 1));
    cols &= ~(1u << (sq.col - 1));
    diag &= ~(std::uint64_t{1} << (sq.col - sq.row + n - 1));
    anti &= ~(std::uint64_t{1} << (sq.row + sq.col - 2));
  }
};

// The four rotation images of a square, starting with the square itself.
inline std::array<Square, 4> rotation_orbit(Square sq, int n) {
  return {Square{sq.row, sq.col}, Square{n + 1 - sq.col, sq.row},
          Square{n + 1 - sq.row, n + 1 - sq.col}, Square{sq.col, n + 1 - sq.row}};
}

// Places whole rotation orbits, anchored on the lowest unoccupied row, and
// recurses until every row is covered. Each quarter-turn-symmetric
// completion of the seeded squares is reached exactly once: its orbits are
// forced in increasing order of their lowest rows.
template <typename OnSolution>
inline void quarter_turn_search(OccupancyMasks& masks, std::vector<Square>& placed,
                                OnSolution& on_solution, std::uint64_t& nodes) {
  if (masks.rows == row_mask(masks.n)) {
    on_solution(placed);
    return;
  }
  const int anchor_row = std::countr_one(masks.rows) + 1;
  for (int j = 1; j <= masks.n; ++j) {
    const std::array<Square, 4> orbit = rotation_orbit(Square{anchor_row, j}, masks.n);
    int done = 0;
    bool fits = true;
    for (Square sq : orbit) {
      if (!masks.open(sq)) {
        fits = false;
        break;
      }
      masks.place(sq);
      ++done;
    }
    if (fits) {
      ++nodes;
      placed.insert(placed.end(), orbit.begin(), orbit.end());
      quarter_turn_search(masks, placed, on_solution, nodes);
      placed.resize(placed.size() - orbit.size());
    }
    for (int k = done - 1; k >= 0; --k) masks.remove(orbit[k]);
  }
}

// Seeds fixed squares into the masks; returns false when they conflict.
inline bool seed_squares(OccupancyMasks& masks, const std::vector<Square>& seed,
                         std::vector<Square>& placed) {
  for (Square sq : seed) {
    if (!masks.open(sq)) return false;
    masks.place(sq);
    placed.push_back(sq);
  }
  return true;
}

// Runs the orbit-placement search on top of the given seed. For boards with
// n = 4k+1 the centre square is the unique fixed point of the rotation and
// belongs to every quarter-turn-symmetric solution, so it is seeded
// implicitly unless the caller already included it.
template <typename OnSolution>
inline void quarter_turn_solutions(BoardSize board, std::vector<Square> seed,
                                   OnSolution on_solution) {
  const int n = board.n();
  OccupancyMasks masks{n};
  if (n % 4 == 1) {
    const Square centre{(n + 1) / 2, (n + 1) / 2};
    if (std::find(seed.begin(), seed.end(), centre) == seed.end()) seed.push_back(centre);
  }
  std::vector<Square> placed;
  if (!seed_squares(masks, seed, placed)) return;
  std::uint64_t nodes = 0;
  quarter_turn_search(masks, placed, on_solution, nodes);
}

inline std::uint64_t half_turn_count(OccupancyMasks& masks, int row, int half) {
  if (row > half) return 1;
  std::uint64_t total = 0;
  for (int j = 1; j <= masks.n; ++j) {
    const Square a{row, j};
    const Square b{masks.n + 1 - row, masks.n + 1 - j};
    if (!masks.open(a)) continue;
    masks.place(a);
    if (masks.open(b)) {
      masks.place(b);
      total += half_turn_count(masks, row + 1, half);
      masks.remove(b);
    }
    masks.remove(a);
  }
  return total;
}

}  // namespace detail

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Q(n) by bitmask backtracking. Work splits across threads by the column of
// the row-1 queen; per-column subtotals are summed in column order, so the
// result does not depend on the thread count.
inline std::uint64_t count_solutions(BoardSize board, int threads = 1,
                                     int cap = kDefaultCountCap) {
  const int n = board.n();
  detail::check_cap(n, cap, "count_solutions");
  const int workers = std::min(resolve_threads(threads), n);
  std::vector<std::uint64_t> per_column(static_cast<std::size_t>(n), 0);
  if (workers <= 1) {
    for (int j = 0; j < n; ++j) per_column[static_cast<std::size_t>(j)] = detail::count_first_column(n, j).first;
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([n, &next, &per_column] {
        for (int j = next.fetch_add(1); j < n; j = next.fetch_add(1)) {
          per_column[static_cast<std::size_t>(j)] = detail::count_first_column(n, j).first;
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : per_column) total += c;
  return total;
}

// Visits every solution exactly once, in ascending configuration order
// (lexicographic in the row-to-column sequence). Single-threaded so the
// visit order is reproducible.
template <typename Visitor>
inline SearchStats enumerate_solutions(BoardSize board, Visitor&& visit,
                                       int cap = kDefaultEnumerateCap) {
  const int n = board.n();
  detail::check_cap(n, cap, "enumerate_solutions");
  SearchStats stats;
  stats.method = "row-backtracking";
  const auto started = std::chrono::steady_clock::now();
  std::array<int, kMaxSolverBoard> col_of_row{};
  detail::enumerate_rows(n, 0, 0u, 0u, 0u, col_of_row, board, visit, stats.nodes_visited);
  stats.elapsed = std::chrono::steady_clock::now() - started;
  return stats;
}

inline std::vector<Configuration> all_solutions(BoardSize board, int cap = kDefaultEnumerateCap) {
  std::vector<Configuration> out;
  enumerate_solutions(board, [&out](const Configuration& q) { out.push_back(q); }, cap);
  return out;
}

// Number of solutions fixed by the quarter-turn r. Such solutions split into
// size-4 rotation orbits (plus the centre on odd boards), so they exist only
// when n is 0 or 1 mod 4; for the other residues the count is 0 outright.
inline std::uint64_t count_r_fixed(BoardSize board, int cap = kDefaultCountCap) {
  const int n = board.n();
  detail::check_cap(n, cap, "count_r_fixed");
  if (n % 4 == 2 || n % 4 == 3) return 0;
  std::uint64_t count = 0;
  detail::quarter_turn_solutions(board, {},
                                 [&count](const std::vector<Square>&) { ++count; });
  return count;
}

// Number of solutions fixed by the half-turn r^2 (this includes every
// r-fixed solution). Rows i <= n/2 choose a column, forcing the
// point-reflected square in row n+1-i; odd boards pin the centre first.
inline std::uint64_t count_r2_fixed(BoardSize board, int cap = kDefaultCountCap) {
  const int n = board.n();
  detail::check_cap(n, cap, "count_r2_fixed");
  detail::OccupancyMasks masks{n};
  if (n % 2 == 1) masks.place(Square{(n + 1) / 2, (n + 1) / 2});
  return detail::half_turn_count(masks, 1, n / 2);
}

// Full stabilizer-class decomposition of Q(n), computed twice over:
// route (a) enumerates every solution and classifies it, route (b) combines
// the three specialized counters. Any disagreement, including a failed
// divisibility when deriving class counts, raises consistency_error.
inline ClassCounts decompose(BoardSize board, int threads = 1, int cap = kDefaultEnumerateCap,
                             SearchStats* stats_out = nullptr) {
  const int n = board.n();
  if (n < 2) throw std::domain_error("decompose: requires n >= 2");
  detail::check_cap(n, cap, "decompose");

  ClassCounts by_enum;
  by_enum.n = n;
  SearchStats stats = enumerate_solutions(
      board,
      [&by_enum](const Configuration& q) {
        ++by_enum.total;
        const bool canonical = canonical_rep(q) == q;
        switch (classify(q)) {
          case SymmetryClass::fixed_by_r:
            ++by_enum.f_r;
            if (canonical) ++by_enum.c_r;
            break;
          case SymmetryClass::fixed_by_r2_only:
            ++by_enum.f_r2_only;
            if (canonical) ++by_enum.c_r2_only;
            break;
          case SymmetryClass::identity_only:
            ++by_enum.f_e;
            if (canonical) ++by_enum.c_e;
            break;
        }
      },
      cap);
  stats.method = "dual-route";

  ClassCounts by_count;
  by_count.n = n;
  by_count.total = count_solutions(board, threads);
  by_count.f_r = count_r_fixed(board);
  const std::uint64_t r2_fixed = count_r2_fixed(board);
  if (r2_fixed < by_count.f_r || by_count.total < r2_fixed) {
    throw consistency_error("decompose: specialized counters are mutually inconsistent at n=" +
                            std::to_string(n));
  }
  by_count.f_r2_only = r2_fixed - by_count.f_r;
  by_count.f_e = by_count.total - r2_fixed;
  if (by_count.f_r % 2 != 0 || by_count.f_r2_only % 4 != 0 || by_count.f_e % 8 != 0) {
    throw consistency_error(
        "decompose: class sizes fail the orbit-size divisibility at n=" + std::to_string(n));
  }
  by_count.c_r = by_count.f_r / 2;
  by_count.c_r2_only = by_count.f_r2_only / 4;
  by_count.c_e = by_count.f_e / 8;

  if (!(by_enum == by_count)) {
    throw consistency_error("decompose: enumeration and counting routes disagree at n=" +
                            std::to_string(n));
  }
  if (!counts_consistent(by_enum)) {
    throw consistency_error("decompose: counting identities violated at n=" + std::to_string(n));
  }
  if (stats_out != nullptr) *stats_out = stats;
  return by_enum;
}

// Checks that the column mirror s pairs up all solutions of one board: it
// must map the solution set into itself and fix no solution. A successful
// check certifies that Q(n) is even.
inline EvennessCheck verify_evenness(BoardSize board, int cap = kDefaultEnumerateCap) {
  const int n = board.n();
  if (n < 2) throw std::domain_error("verify_evenness: requires n >= 2");
  const std::vector<Configuration> solutions = all_solutions(board, cap);
  for (const Configuration& q : solutions) {
    const Configuration mirrored = apply(Sym::s, q);
    if (mirrored == q) return {false, 0};
    if (!std::binary_search(solutions.begin(), solutions.end(), mirrored)) return {false, 0};
  }
  return {true, solutions.size() / 2};
}

// Solutions fixed by some reflection, with the reflection that fixes them.
// Expected to be empty for every n >= 2; a non-empty result is a witness
// against the mirror-pairing argument.
inline std::vector<std::pair<Configuration, Sym>> reflection_fixed_violations(
    BoardSize board, int cap = kDefaultEnumerateCap) {
  const int n = board.n();
  if (n < 2) throw std::domain_error("reflection_fixed_violations: requires n >= 2");
  std::vector<std::pair<Configuration, Sym>> hits;
  enumerate_solutions(
      board,
      [&hits](const Configuration& q) {
        for (Sym g : reflections()) {
          if (apply(g, q) == q) hits.emplace_back(q, g);
        }
      },
      cap);
  return hits;
}

}  // namespace qsl
