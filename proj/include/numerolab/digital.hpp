#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numerolab/kernel.hpp"
#include "numerolab/types.hpp"

namespace numerolab::digital {

// Decimal digit word, most-significant digit first.
struct DigitWord {
  std::vector<unsigned char> digits;
  unsigned base = 10;
};

DigitWord to_word(const Int& n);
Int word_value(const DigitWord& w);
std::string to_string(const DigitWord& w);

// Contiguous digit groups whose concatenation is the original word.
struct Partition {
  std::vector<DigitWord> groups;
};

enum class PartPredicate { square, cube, prime };

std::optional<PartPredicate> predicate_from_name(std::string_view name);
std::string_view to_string(PartPredicate predicate);

// Terms among the first k of the stream whose decimal digits all lie in
// `allowed`, in stream order.
std::vector<Int> full_digital_filter(const kernel::SeqSpec& spec,
                                     std::uint64_t k,
                                     const std::vector<unsigned>& allowed);

// Partition of n into >= 2 contiguous groups each satisfying the
// predicate. A group may not start with 0 unless it is exactly "0", and
// "0" counts only for square and cube. Fewest groups win; ties break
// toward the earliest cuts. Absent when no partition exists.
std::optional<Partition> partial_digital_check(const Int& n,
                                               PartPredicate predicate);

enum class SplitRelation { double_value, lucky_index };

std::optional<SplitRelation> relation_from_name(std::string_view name);
std::string_view to_string(SplitRelation relation);

struct Split {
  Int g1;
  Int g2;
};

// Leftmost two-group split with g2 = 2*g1 (double_value) or g2 equal to
// the g1-th lucky number (lucky_index). g2 may not lead with 0. The
// lucky relation only consults indices up to 40000 after the g2 >= 2*g1-1
// bound prunes; a split that would need a larger index is rejected.
std::optional<Split> split_check(const Int& n, SplitRelation relation);

struct Triad {
  Int x;
  Int y;
  Int z;
};

// Leftmost three-group split of n with x + y = z; no group may lead
// with 0 (so no group is "0").
std::optional<Triad> triad_sum_check(const Int& n);

}  // namespace numerolab::digital
