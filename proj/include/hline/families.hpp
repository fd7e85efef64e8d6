#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hline/graph.hpp"

namespace hline {

/// Named graph families with fixed vertex layouts.
///
/// Textual forms: "C6", "P4", "G(r=2,m=4)", "F7", "CL(3,3,2)".
struct FamilySpec {
  enum class Kind { Cycle, Path, Grm, Fm, Spider };

  Kind kind = Kind::Cycle;
  std::size_t m = 0;  // Cycle, Path, Fm, and the cycle size of Grm
  std::size_t r = 0;  // tail order of Grm
  std::size_t x = 0, y = 0, z = 0;  // Spider legs

  Graph build() const;
  std::string to_string() const;

  /// Throws ParseError on malformed text and InvalidArgument on
  /// out-of-range parameters.
  static FamilySpec parse(std::string_view text);
  /// True when `text` has the shape of a family spec (parameters unchecked).
  static bool looks_like(std::string_view text);
};

/// Cycle 0-1-...-(m-1)-0; m >= 3.
Graph make_cycle(std::size_t m);
/// Path 0-1-...-(m-1); m >= 1.
Graph make_path(std::size_t m);
/// m-cycle on 0..m-1 with the path m, m+1, ..., m+r-1 hanging off vertex 0.
Graph make_grm(std::size_t r, std::size_t m);
/// m-cycle on 0..m-1 plus the chord (0, 2); m >= 4.
Graph make_fm(std::size_t m);
/// Centre 0; legs of x, y, z vertices laid out consecutively from 1, each
/// joined to the centre through its first vertex.
Graph make_spider(std::size_t x, std::size_t y, std::size_t z);
/// Triangle 0-1-2 with pendant paths of a, b, c vertices at 0, 1, 2.
Graph make_triangle_with_tails(std::size_t a, std::size_t b, std::size_t c);

/// G^r_m for r = 1..n-3 with m = n - r.
std::vector<Graph> delta_members(std::size_t n);

}  // namespace hline
