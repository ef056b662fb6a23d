#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::conjectures {

// One way of writing an odd target as p + q - r over primes, with p <= q
// and r distinct from both.
struct RepTriple {
  Int p;
  Int q;
  Int r;

  bool operator==(const RepTriple&) const = default;
};

// All representations of odd k with every prime at most bound, sorted by
// (p, q); r is determined by the pair. k must be odd and positive.
std::vector<RepTriple> prime_reps(const Int& k, const Int& bound);

// Odd targets up to k_max that have no representation within bound.
std::vector<Int> sweep(const Int& k_max, const Int& bound);

// Smallest x (and its y) with x^3 - a or x^3 + a a positive square.
struct CubeSquareWitness {
  Int x;
  Int y;

  bool operator==(const CubeSquareWitness&) const = default;
};
std::optional<CubeSquareWitness> cube_square_witness(const Int& a,
                                                     const Int& x_max);

// Values a <= a_max never hit by |x^3 - y^2| for x <= x_max, y >= 1.
std::vector<Int> bad_scan(const Int& a_max, const Int& x_max);

}  // namespace numerolab::conjectures
