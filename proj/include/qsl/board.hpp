#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsl {

// Side length of the board. Coordinates are 1-based throughout: rows and
// columns run over [1, n], diagonals and anti-diagonals over [1, 2n-1].
class BoardSize {
 public:
  explicit BoardSize(int n) : n_(n) {
    if (n < 1) throw std::domain_error("BoardSize: n must be >= 1, got " + std::to_string(n));
  }

  int n() const { return n_; }

  friend bool operator==(BoardSize a, BoardSize b) { return a.n_ == b.n_; }

 private:
  int n_;
};

struct Square {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Square&, const Square&) = default;
};

inline bool on_board(Square sq, BoardSize board) {
  return sq.row >= 1 && sq.row <= board.n() && sq.col >= 1 && sq.col <= board.n();
}

namespace detail {

inline std::string square_text(Square sq) {
  return "(" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
}

inline void require_on_board(Square sq, BoardSize board) {
  if (!on_board(sq, board)) {
    throw std::domain_error("square " + square_text(sq) + " lies outside a board of size " +
                            std::to_string(board.n()));
  }
}

}  // namespace detail

// Diagonal index k = col - row + n; constant along "/"-to-"\" lines where
// col - row is constant. Ranges over [1, 2n-1].
inline int diag_index(Square sq, BoardSize board) {
  detail::require_on_board(sq, board);
  return sq.col - sq.row + board.n();
}

// Anti-diagonal index k = row + col - 1, constant where row + col is
// constant. Ranges over [1, 2n-1].
inline int anti_diag_index(Square sq, BoardSize board) {
  detail::require_on_board(sq, board);
  return sq.row + sq.col - 1;
}

struct LineId {
  enum class Kind { row, col, diag, anti_diag };

  Kind kind = Kind::row;
  int index = 0;

  friend auto operator<=>(const LineId&, const LineId&) = default;
};

// All squares of one line, in ascending (row, col) order. A diagonal or
// anti-diagonal with index k holds min(k, 2n-k) squares.
inline std::vector<Square> line_squares(LineId line, BoardSize board) {
  const int n = board.n();
  const bool is_rc = line.kind == LineId::Kind::row || line.kind == LineId::Kind::col;
  const int max_index = is_rc ? n : 2 * n - 1;
  if (line.index < 1 || line.index > max_index) {
    throw std::domain_error("line index " + std::to_string(line.index) + " out of range [1, " +
                            std::to_string(max_index) + "]");
  }
  std::vector<Square> out;
  switch (line.kind) {
    case LineId::Kind::row:
      for (int j = 1; j <= n; ++j) out.push_back({line.index, j});
      break;
    case LineId::Kind::col:
      for (int i = 1; i <= n; ++i) out.push_back({i, line.index});
      break;
    case LineId::Kind::diag:
      // col = k - n + row
      for (int i = std::max(1, n + 1 - line.index); i <= std::min(n, 2 * n - line.index); ++i)
        out.push_back({i, line.index - n + i});
      break;
    case LineId::Kind::anti_diag:
      // col = k + 1 - row
      for (int i = std::max(1, line.index + 1 - n); i <= std::min(n, line.index); ++i)
        out.push_back({i, line.index + 1 - i});
      break;
  }
  return out;
}

// Whether two distinct squares share a row, column, diagonal or
// anti-diagonal. The relation is symmetric and only defined for a != b.
inline bool attacks(Square a, Square b, BoardSize board) {
  detail::require_on_board(a, board);
  detail::require_on_board(b, board);
  if (a == b) throw std::domain_error("attacks: defined on distinct squares only");
  return a.row == b.row || a.col == b.col || a.col - a.row == b.col - b.row ||
         a.row + a.col == b.row + b.col;
}

// A set of squares on one board, stored sorted by (row, col) with duplicates
// removed. Covers both full n-queens placements and partial ones.
class Configuration {
 public:
  explicit Configuration(BoardSize board) : board_(board) {}

  Configuration(BoardSize board, std::vector<Square> squares)
      : board_(board), squares_(std::move(squares)) {
    for (Square sq : squares_) detail::require_on_board(sq, board_);
    std::sort(squares_.begin(), squares_.end());
    squares_.erase(std::unique(squares_.begin(), squares_.end()), squares_.end());
  }

  BoardSize board() const { return board_; }
  const std::vector<Square>& squares() const { return squares_; }
  int size() const { return static_cast<int>(squares_.size()); }
  bool empty() const { return squares_.empty(); }

  bool contains(Square sq) const {
    return std::binary_search(squares_.begin(), squares_.end(), sq);
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.board_ == b.board_ && a.squares_ == b.squares_;
  }

  // Orders by board size, then lexicographically by the sorted square list.
  friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
    if (auto c = a.board_.n() <=> b.board_.n(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.squares_.begin(), a.squares_.end(),
                                                  b.squares_.begin(), b.squares_.end());
  }

 private:
  BoardSize board_;
  std::vector<Square> squares_;
};

namespace detail {

inline void require_same_board(const Configuration& a, const Configuration& b, const char* what) {
  if (!(a.board() == b.board())) {
    throw std::domain_error(std::string(what) + ": configurations live on different boards (" +
                            std::to_string(a.board().n()) + " vs " +
                            std::to_string(b.board().n()) + ")");
  }
}

}  // namespace detail

inline bool disjoint(const Configuration& a, const Configuration& b) {
  detail::require_same_board(a, b, "disjoint");
  for (Square sq : a.squares())
    if (b.contains(sq)) return false;
  return true;
}

inline bool is_subset(const Configuration& a, const Configuration& b) {
  detail::require_same_board(a, b, "is_subset");
  return std::includes(b.squares().begin(), b.squares().end(), a.squares().begin(),
                       a.squares().end());
}

inline Configuration config_union(const Configuration& a, const Configuration& b) {
  detail::require_same_board(a, b, "config_union");
  std::vector<Square> merged;
  merged.reserve(a.squares().size() + b.squares().size());
  std::set_union(a.squares().begin(), a.squares().end(), b.squares().begin(), b.squares().end(),
                 std::back_inserter(merged));
  return Configuration(a.board(), std::move(merged));
}

inline Configuration config_difference(const Configuration& a, const Configuration& b) {
  detail::require_same_board(a, b, "config_difference");
  std::vector<Square> rest;
  std::set_difference(a.squares().begin(), a.squares().end(), b.squares().begin(),
                      b.squares().end(), std::back_inserter(rest));
  return Configuration(a.board(), std::move(rest));
}

// At most one square per row, column, diagonal and anti-diagonal. This is
// the validity notion for partial placements; a full configuration adds the
// cardinality requirement on top.
inline bool conflict_free(const Configuration& c) {
  const int n = c.board().n();
  std::vector<char> row(n + 1, 0), col(n + 1, 0), diag(2 * n, 0), anti(2 * n, 0);
  for (Square sq : c.squares()) {
    if (++row[sq.row] > 1) return false;
    if (++col[sq.col] > 1) return false;
    if (++diag[sq.col - sq.row + n - 1] > 1) return false;
    if (++anti[sq.row + sq.col - 2] > 1) return false;
  }
  return true;
}

// A full n-queens configuration: n squares, pairwise non-attacking.
inline bool is_configuration(const Configuration& c) {
  return c.size() == c.board().n() && conflict_free(c);
}

// Whether u completes the partial placement s to a full configuration.
inline bool is_completion(const Configuration& u, const Configuration& s) {
  detail::require_same_board(u, s, "is_completion");
  return disjoint(u, s) && is_configuration(config_union(s, u));
}

}  // namespace qsl
