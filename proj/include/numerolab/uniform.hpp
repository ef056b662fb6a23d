#pragma once

#include <cstdint>
#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::uniform {

struct UniformQuery {
  Int n = 1;                     // modulus, n >= 1
  unsigned base = 10;            // 2..256
  std::vector<unsigned> digits;  // distinct values below base
  bool complete = true;          // every listed digit must appear
};

// Numerically smallest positive multiple of n whose base-B digits are drawn
// from the digit set (and cover it in complete mode). Leading digit nonzero.
std::optional<Int> smallest_member(const UniformQuery& q);

// First `count` members in increasing order, digit length capped at max_len.
std::vector<Int> members(const UniformQuery& q, std::size_t count,
                         std::uint64_t max_len);

// Exact emptiness by reachability over (remainder, digit-mask) states.
bool is_empty(const UniformQuery& q);

}  // namespace numerolab::uniform
