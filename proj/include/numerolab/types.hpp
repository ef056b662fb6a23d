#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numerolab {

// Exact arithmetic used throughout. Int is a signed arbitrary-precision
// integer; nonnegative-only contexts validate at the operation boundary.
// Rat is always kept canonical (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

std::optional<Int> parse_int(std::string_view text);
std::optional<Int> parse_nat(std::string_view text);
// Accepts "p", "-p" and "p/q" with q > 0.
std::optional<Rat> parse_rat(std::string_view text);

std::string to_string(const Int& v);
// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& v);

// Checked narrowing for index-like parameters.
std::uint64_t checked_index(const Int& v, const char* what,
                            std::uint64_t max = UINT64_MAX);

}  // namespace numerolab
