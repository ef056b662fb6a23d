#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::kernel {

enum class StreamName {
  naturals,
  odds,
  evens,
  primes,
  fibonacci,
  lucas,
  triangular,
  lucky,
  smarandache,
  squares,
  cubes,
};

std::optional<StreamName> stream_from_name(std::string_view name);
std::string_view to_string(StreamName name);

// Named integer stream, 1-based. offset is the index of the first term
// produced.
struct SeqSpec {
  StreamName name = StreamName::naturals;
  std::uint64_t offset = 1;
};

struct PrimeVerdict {
  bool prime = false;
  // Deterministic witness set below 64 bits; above that a passing result is
  // only probable and proved stays false. Composite verdicts are always
  // certified by a witness.
  bool proved = true;
};

PrimeVerdict is_prime(const Int& n, int rounds = 64);

// Ascending prime factors with multiplicity. Trial division backed by a
// Brent-cycle rho for large cofactors; deterministic.
std::vector<Int> factorize(const Int& n);

// Smallest m >= 1 with n | m!. S(1) = 1.
Int smarandache(const Int& n);

// Smallest k >= 1 such that m*k is a factorial.
Int smarandache_quotient(const Int& m);

struct PowerForm {
  Int base;
  unsigned long exp = 0;  // maximal, >= 2
};

std::optional<PowerForm> perfect_power(const Int& n);

bool is_perfect_square(const Int& n);

// All lucky numbers <= limit from the positional striking sieve.
std::vector<Int> lucky_numbers(const Int& limit);

std::vector<Int> stream(const SeqSpec& spec, std::size_t count);
Int stream_term(StreamName name, std::uint64_t index);

// Membership in the base set, available for odds, evens, primes, fibonacci
// and lucas. Throws std::invalid_argument for the rest.
bool stream_has_membership(StreamName name);
bool stream_member(StreamName name, const Int& value);

}  // namespace numerolab::kernel
