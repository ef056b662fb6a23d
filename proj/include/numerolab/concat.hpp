#pragma once

#include <cstdint>
#include <vector>

#include "numerolab/kernel.hpp"

namespace numerolab::concat {

struct ConcatTerm {
  std::uint64_t index = 0;
  Int value;
  std::uint64_t digit_length = 0;  // length of the concatenated word
};

enum class ScreenTest { prime, even_power, perfect_power };

std::optional<ScreenTest> screen_test_from_name(std::string_view name);
std::string_view to_string(ScreenTest test);

struct ScreenVerdict {
  std::uint64_t index = 0;
  Int value;
  bool hit = false;
  bool proved = true;  // false only for probable-prime verdicts
};

std::vector<ConcatTerm> concat_terms(const kernel::SeqSpec& spec,
                                     std::uint64_t k);

std::vector<ScreenVerdict> screen(const kernel::SeqSpec& spec, std::uint64_t k,
                                  ScreenTest test, int rounds = 64);

struct ClosureVerdict {
  std::uint64_t index = 0;
  Int value;
  bool member = false;
};

std::vector<ClosureVerdict> closure_check(const kernel::SeqSpec& spec,
                                          std::uint64_t k);

}  // namespace numerolab::concat
