#pragma once

#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::remainder {

// Each step removes a 1/q share of the current amount plus a fixed extra.
struct ForwardResult {
  std::vector<Rat> remainders;
  bool went_negative = false;
};

ForwardResult forward(const Rat& start, unsigned long q, const Rat& extra,
                      unsigned long steps);

// Unique start whose forward run ends at `last` after `steps` removals.
Rat backward(const Rat& last, unsigned long q, const Rat& extra,
             unsigned long steps);

struct IntegralInstance {
  Int start;
  std::vector<Int> remainders;
};

// Smallest start whose removals are all positive integers and whose
// remainders stay >= 1 (>= 0 with allow_zero). Throws std::runtime_error
// ("exhausted") when no start at or below cap qualifies.
IntegralInstance minimal_integral(unsigned long q, unsigned long extra,
                                  unsigned long steps, bool allow_zero = false,
                                  unsigned long cap = 10'000'000);

}  // namespace numerolab::remainder
