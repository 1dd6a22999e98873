#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qsl/board.hpp"

namespace qsl {

// The dihedral group of the square, D4. Element r^a s^b is encoded as the
// index a + 4b, where r is the quarter-turn (i,j) -> (n+1-j, i) and s is the
// column mirror (i,j) -> (i, n+1-j). As a map, r^a s^b mirrors first and
// rotates afterwards.
enum class Sym : std::uint8_t { e = 0, r = 1, r2 = 2, r3 = 3, s = 4, rs = 5, r2s = 6, r3s = 7 };

constexpr int rotations(Sym g) { return static_cast<int>(g) & 3; }
constexpr bool mirrored(Sym g) { return (static_cast<int>(g) >> 2) != 0; }

constexpr Sym make_sym(int rot, bool mirror) {
  return static_cast<Sym>(((rot % 4 + 4) % 4) + (mirror ? 4 : 0));
}

constexpr std::array<Sym, 8> all_symmetries() {
  return {Sym::e, Sym::r, Sym::r2, Sym::r3, Sym::s, Sym::rs, Sym::r2s, Sym::r3s};
}

constexpr std::array<Sym, 4> rotations_only() { return {Sym::e, Sym::r, Sym::r2, Sym::r3}; }

constexpr std::array<Sym, 4> reflections() { return {Sym::s, Sym::rs, Sym::r2s, Sym::r3s}; }

// Group law, g after h. From sr = r^3 s: (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b xor d).
constexpr Sym compose(Sym g, Sym h) {
  const int a = rotations(g);
  const int c = rotations(h);
  const bool b = mirrored(g);
  return make_sym(b ? a - c : a + c, b != mirrored(h));
}

// Rotations invert to their complement; every reflection is an involution.
constexpr Sym inverse(Sym g) { return mirrored(g) ? g : make_sym(-rotations(g), false); }

inline std::string_view to_string(Sym g) {
  constexpr std::string_view names[] = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  return names[static_cast<int>(g)];
}

// Image of a square under g, computed from the two generators alone. The
// closed forms for the composite elements are consequences and live in the
// tests as an independent cross-check.
inline Square transform_square(Sym g, Square sq, BoardSize board) {
  detail::require_on_board(sq, board);
  const int n = board.n();
  int i = sq.row;
  int j = sq.col;
  if (mirrored(g)) j = n + 1 - j;
  for (int t = 0; t < rotations(g); ++t) {
    const int next_row = n + 1 - j;
    j = i;
    i = next_row;
  }
  return {i, j};
}

// Pointwise image of a configuration; works for partial placements too.
inline Configuration apply(Sym g, const Configuration& c) {
  std::vector<Square> image;
  image.reserve(c.squares().size());
  for (Square sq : c.squares()) image.push_back(transform_square(g, sq, c.board()));
  return Configuration(c.board(), std::move(image));
}

// Stabilizer classes a full configuration can fall into. A solution fixed by
// r is fixed by every rotation; a reflection never fixes a solution on
// boards with n >= 2, so subgroups of D4 other than {e}, {e, r2} and the
// rotation group do not occur.
enum class SymmetryClass { fixed_by_r, fixed_by_r2_only, identity_only };

inline std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::fixed_by_r: return "fixed_by_r";
    case SymmetryClass::fixed_by_r2_only: return "fixed_by_r2_only";
    case SymmetryClass::identity_only: return "identity_only";
  }
  return "unknown";
}

struct OrbitInfo {
  std::vector<Configuration> elements;  // distinct images, sorted ascending
  std::vector<Sym> stabilizer;          // group elements fixing the input
};

namespace detail {

inline void require_full_configuration(const Configuration& c, const char* what) {
  if (!is_configuration(c)) {
    throw std::domain_error(std::string(what) + ": requires a full non-attacking configuration");
  }
}

}  // namespace detail

// Orbit and stabilizer under the full D4 action. |elements| * |stabilizer|
// is always 8.
inline OrbitInfo orbit(const Configuration& c) {
  detail::require_full_configuration(c, "orbit");
  OrbitInfo info;
  for (Sym g : all_symmetries()) {
    Configuration image = apply(g, c);
    if (image == c) info.stabilizer.push_back(g);
    info.elements.push_back(std::move(image));
  }
  std::sort(info.elements.begin(), info.elements.end());
  info.elements.erase(std::unique(info.elements.begin(), info.elements.end()),
                      info.elements.end());
  return info;
}

inline SymmetryClass classify(const Configuration& c) {
  detail::require_full_configuration(c, "classify");
  if (apply(Sym::r, c) == c) return SymmetryClass::fixed_by_r;
  if (apply(Sym::r2, c) == c) return SymmetryClass::fixed_by_r2_only;
  return SymmetryClass::identity_only;
}

// Lexicographically least element of the orbit; constant on orbits, so it
// canonically names the equivalence class of c.
inline Configuration canonical_rep(const Configuration& c) {
  detail::require_full_configuration(c, "canonical_rep");
  Configuration best = c;
  for (Sym g : all_symmetries()) {
    Configuration image = apply(g, c);
    if (image < best) best = image;
  }
  return best;
}

}  // namespace qsl
