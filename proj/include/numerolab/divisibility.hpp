#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::divisibility {

// Named positive-integer functions the checkers range over.
enum class NamedFn { factorial, double_fn, fibonacci, smarandache, identity };

std::optional<NamedFn> fn_from_name(std::string_view name);
std::string_view to_string(NamedFn fn);

// Evaluates the function at n >= 1. Factorial arguments above 10^6 and
// fibonacci indices above 10^7 are rejected as out of supported range.
Int apply(NamedFn fn, const Int& n);

// Failure of the depth-d chain g^d(n) | g^d(m) for a divisor pair n | m.
struct ChainCounterexample {
  Int n;
  Int m;
  unsigned depth = 1;

  bool operator==(const ChainCounterexample&) const = default;
};

// Least (n, m) with n | m <= n_max whose chain breaks within k
// applications, along with the least failing depth; absent if none.
std::optional<ChainCounterexample> check_divisibility(NamedFn g,
                                                      const Int& n_max,
                                                      unsigned k = 1);

// Same check restricted to divisor pairs drawn from the given indices.
std::optional<ChainCounterexample> check_divisibility_on(
    NamedFn g, const std::vector<Int>& indices, unsigned k = 1);

// Least pair breaking gcd(g(n), g(m)) = g(gcd(n, m)); absent if none.
struct PairCounterexample {
  Int n;
  Int m;

  bool operator==(const PairCounterexample&) const = default;
};
std::optional<PairCounterexample> check_strong(NamedFn g, const Int& n_max);

// k-ary gcd identity over tuples with entries <= n_max. Small tuple
// spaces are swept exhaustively; larger ones are sampled with a fixed
// seed and flagged.
struct KStrongReport {
  bool sampled = false;
  std::optional<std::vector<Int>> counterexample;
};
KStrongReport check_k_strong(NamedFn g, unsigned k, const Int& n_max);

}  // namespace numerolab::divisibility
