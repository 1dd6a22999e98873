#pragma once

// Deterministic pseudo-random inputs for property-style tests.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qsl/board.hpp"
#include "qsl/report.hpp"

namespace gen {

inline std::mt19937& rng() {
  static std::mt19937 engine{3571u};
  return engine;
}

inline int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline std::uint64_t pick_count(std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(0, hi)(rng());
}

inline qsl::Square square(qsl::BoardSize board) {
  return {pick(1, board.n()), pick(1, board.n())};
}

inline qsl::Configuration placement(qsl::BoardSize board, int count) {
  std::vector<qsl::Square> squares;
  squares.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) squares.push_back(square(board));
  return qsl::Configuration(board, std::move(squares));
}

// Arithmetic-consistent record with random nested payloads. Class counts are
// drawn first and the class sizes derived from them, so validation passes by
// construction.
inline qsl::ResultRecord record() {
  qsl::ResultRecord r;
  r.n = pick(1, 500);
  if (pick(0, 3) > 0) {
    qsl::ClassBreakdown c;
    c.c_r = pick_count(40);
    c.c_r2_only = pick_count(40);
    c.c_e = pick_count(1'000'000'000ULL);
    c.f_r = 2 * c.c_r;
    c.f_r2_only = 4 * c.c_r2_only;
    c.f_e = 8 * c.c_e;
    r.classes = c;
    r.total = c.f_r + c.f_r2_only + c.f_e;
  } else {
    r.total = pick_count(std::uint64_t{1} << 60);
  }
  r.mod2 = static_cast<int>(r.total % 2);
  r.mod4 = static_cast<int>(r.total % 4);
  const int buckets = pick(0, 4);
  for (int b = 0; b < buckets; ++b) {
    const std::uint64_t size = pick_count(12);
    r.per_ell.push_back({pick(1, r.n), size, size});
  }
  const int verdicts = pick(0, 2);
  for (int v = 0; v < verdicts; ++v) {
    r.verdicts.push_back({"check_" + std::to_string(pick(0, 9)), pick(0, 1) == 1,
                          pick(0, 1) == 1 ? "witness " + std::to_string(pick(0, 99)) : ""});
  }
  if (pick(0, 1) == 1) r.stats = qsl::RecordStats{pick_count(1u << 30), "row-backtracking"};
  r.reference_only = pick(0, 9) == 0;
  return r;
}

// Only the ten scalar columns survive CSV and the text table, so records
// meant to round-trip through those formats carry nothing else.
inline qsl::ResultRecord scalar_record() {
  qsl::ResultRecord r = record();
  r.per_ell.clear();
  r.verdicts.clear();
  r.stats.reset();
  r.reference_only = false;
  return r;
}

}  // namespace gen
