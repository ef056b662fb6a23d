#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numerolab/kernel.hpp"
#include "numerolab/types.hpp"

namespace numerolab::relations {

enum class Fold { add, sub, mul };

std::optional<Fold> fold_from_name(std::string_view name);
std::string_view to_string(Fold fold);

// A window equation: fold of p consecutive terms starting at start_index
// equals the fold of the next q terms. Folds are left-associated.
struct RelationHit {
  std::uint64_t start_index = 0;  // 1-based position in the stream
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Fold fold = Fold::add;
  Int left_value;
  Int right_value;
};

// All hits whose two windows lie within the first n_max fetched terms;
// start indices are absolute (offset included), ascending.
std::vector<RelationHit> scan(const kernel::SeqSpec& spec, std::uint64_t n_max,
                              std::uint64_t p, std::uint64_t q, Fold fold);

struct PPATerm {
  std::uint64_t index = 0;  // 1-based
  Int value;
};

// Seed 1, 1; a(2p+1) = a(p+1) - 1 and a(2p+2) = a(p+1) + 1.
std::vector<PPATerm> ppa_terms(std::uint64_t count);

// Smallest p in 1..p_max whose leading p-block sum differs from the
// following p-block sum; absent when the identity holds throughout.
std::optional<std::uint64_t> ppa_verify(const std::vector<Int>& terms,
                                        std::uint64_t p_max);

}  // namespace numerolab::relations
