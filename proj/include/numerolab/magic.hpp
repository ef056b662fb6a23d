#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::magic {

// Line laws. sum adds every cell; alternating evaluates
// a1 + a2 - a3 + a4 - a5 ... along the line. Lines run left to right,
// top to bottom, and diagonals from the top corners down.
enum class Law { sum, alternating };

std::optional<Law> law_from_name(std::string_view name);
std::string_view to_string(Law law);

struct SquareGrid {
  std::uint64_t order = 0;        // n >= 2
  std::vector<Int> cells;         // row-major, n*n entries
  Law law = Law::sum;
  bool diagonals = true;
  bool distinct = true;
};

// Common line value when every row, every column (and both diagonals
// when flagged) evaluate equally; absent otherwise. Structural defects
// (wrong cell count, duplicate cells under distinct) are rejected.
std::optional<Int> verify_square(const SquareGrid& grid);

// Up to `limit` magic squares with cells drawn from the pool, one
// lexicographically-least representative per symmetry orbit, sorted.
// Exhaustive when fewer than limit exist. Orders above 5 and pool
// values beyond the int64 search range are rejected.
std::vector<SquareGrid> search_squares(const std::vector<Int>& pool,
                                       std::uint64_t order, Law law,
                                       bool diagonals, bool distinct,
                                       std::uint64_t limit);

// Common value over all 3n^2 axis-parallel lines of an n^3 cube stored
// as cells[(z*n + y)*n + x]; lines evaluate in ascending coordinate.
std::optional<Int> verify_cube(std::uint64_t order,
                               const std::vector<Int>& cells, Law law);

}  // namespace numerolab::magic
