#include "numerolab/digital.hpp"

#include <limits>
#include <stdexcept>

namespace numerolab::digital {
namespace {

constexpr std::uint64_t kLuckyIndexCap = 40000;
constexpr std::uint64_t kNoSplit = std::numeric_limits<std::uint64_t>::max();

bool is_cube(const Int& v) {
  Int root;
  return mpz_root(root.get_mpz_t(), v.get_mpz_t(), 3) != 0;
}

bool predicate_holds(const Int& v, PartPredicate predicate) {
  switch (predicate) {
    case PartPredicate::square: return kernel::is_perfect_square(v);
    case PartPredicate::cube: return is_cube(v);
    case PartPredicate::prime: return kernel::is_prime(v).prime;
  }
  throw std::logic_error("unreachable predicate");
}

bool admits_zero(PartPredicate predicate) {
  return predicate != PartPredicate::prime;
}

Int slice_value(const DigitWord& w, std::size_t first, std::size_t last) {
  Int value = 0;
  for (std::size_t i = first; i <= last; ++i)
    value = value * 10 + w.digits[i];
  return value;
}

}  // namespace

DigitWord to_word(const Int& n) {
  if (n < 0) throw std::invalid_argument("digit words are nonnegative");
  DigitWord word;
  for (char c : numerolab::to_string(n))
    word.digits.push_back(static_cast<unsigned char>(c - '0'));
  return word;
}

Int word_value(const DigitWord& w) {
  if (w.digits.empty()) throw std::invalid_argument("empty digit word");
  return slice_value(w, 0, w.digits.size() - 1);
}

std::string to_string(const DigitWord& w) {
  std::string text;
  text.reserve(w.digits.size());
  for (unsigned char d : w.digits)
    text.push_back(static_cast<char>('0' + d));
  return text;
}

std::optional<PartPredicate> predicate_from_name(std::string_view name) {
  if (name == "square") return PartPredicate::square;
  if (name == "cube") return PartPredicate::cube;
  if (name == "prime") return PartPredicate::prime;
  return std::nullopt;
}

std::string_view to_string(PartPredicate predicate) {
  switch (predicate) {
    case PartPredicate::square: return "square";
    case PartPredicate::cube: return "cube";
    case PartPredicate::prime: return "prime";
  }
  throw std::logic_error("unreachable predicate");
}

std::vector<Int> full_digital_filter(const kernel::SeqSpec& spec,
                                     std::uint64_t k,
                                     const std::vector<unsigned>& allowed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  bool table[10] = {};
  for (unsigned d : allowed) {
    if (d > 9) throw std::invalid_argument("allowed digits must be decimal");
    table[d] = true;
  }
  std::vector<Int> kept;
  for (const Int& term : kernel::stream(spec, k)) {
    if (term < 0) continue;
    bool all = true;
    for (char c : numerolab::to_string(term))
      if (!table[c - '0']) {
        all = false;
        break;
      }
    if (all) kept.push_back(term);
  }
  return kept;
}

std::optional<Partition> partial_digital_check(const Int& n,
                                               PartPredicate predicate) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  DigitWord word = to_word(n);
  const std::size_t d = word.digits.size();
  if (d < 2) return std::nullopt;

  auto group_ok = [&](std::size_t i, std::size_t j) {
    if (word.digits[i] == 0)
      return i == j && admits_zero(predicate);
    return predicate_holds(slice_value(word, i, j), predicate);
  };

  // best[i] = fewest groups covering digits i..d-1, kNoSplit if impossible.
  std::vector<std::uint64_t> best(d + 1, kNoSplit);
  best[d] = 0;
  for (std::size_t i = d; i-- > 0;) {
    for (std::size_t j = i; j < d; ++j) {
      if (best[j + 1] == kNoSplit || !group_ok(i, j)) continue;
      best[i] = std::min(best[i], best[j + 1] + 1);
    }
  }

  std::uint64_t total = kNoSplit;
  for (std::size_t j = 0; j + 2 <= d; ++j)
    if (group_ok(0, j) && best[j + 1] != kNoSplit)
      total = std::min(total, best[j + 1] + 1);
  if (total == kNoSplit) return std::nullopt;

  Partition partition;
  std::size_t pos = 0;
  std::uint64_t budget = total;
  while (pos < d) {
    std::size_t next = pos;
    for (std::size_t j = pos; j < d; ++j) {
      if (best[j + 1] != budget - 1 || !group_ok(pos, j)) continue;
      DigitWord group;
      group.digits.assign(word.digits.begin() + pos,
                          word.digits.begin() + j + 1);
      partition.groups.push_back(std::move(group));
      next = j + 1;
      --budget;
      break;
    }
    if (next == pos) throw std::logic_error("partition walk stalled");
    pos = next;
  }
  return partition;
}

std::optional<SplitRelation> relation_from_name(std::string_view name) {
  if (name == "double") return SplitRelation::double_value;
  if (name == "lucky") return SplitRelation::lucky_index;
  return std::nullopt;
}

std::string_view to_string(SplitRelation relation) {
  return relation == SplitRelation::double_value ? "double" : "lucky";
}

std::optional<Split> split_check(const Int& n, SplitRelation relation) {
  if (n < 10) throw std::invalid_argument("n needs at least two digits");
  DigitWord word = to_word(n);
  const std::size_t d = word.digits.size();
  for (std::size_t s = 1; s < d; ++s) {
    if (word.digits[s] == 0) continue;
    Int g1 = slice_value(word, 0, s - 1);
    Int g2 = slice_value(word, s, d - 1);
    if (relation == SplitRelation::double_value) {
      if (g2 == g1 * 2) return Split{g1, g2};
      continue;
    }
    // Lucky numbers are odd and the m-th is at least 2m-1, which prunes
    // almost every split before the index lookup.
    if (mpz_even_p(g2.get_mpz_t()) || g2 < g1 * 2 - 1) continue;
    if (g1 > kLuckyIndexCap)
      throw std::invalid_argument("lucky index beyond supported range");
    if (g2 == kernel::stream_term(kernel::StreamName::lucky,
                                  g1.get_ui()))
      return Split{g1, g2};
  }
  return std::nullopt;
}

std::optional<Triad> triad_sum_check(const Int& n) {
  if (n < 100) throw std::invalid_argument("n needs at least three digits");
  DigitWord word = to_word(n);
  const std::size_t d = word.digits.size();
  for (std::size_t s1 = 1; s1 + 1 < d; ++s1) {
    if (word.digits[s1] == 0) continue;
    Int x = slice_value(word, 0, s1 - 1);
    for (std::size_t s2 = s1 + 1; s2 < d; ++s2) {
      if (word.digits[s2] == 0) continue;
      Int y = slice_value(word, s1, s2 - 1);
      Int z = slice_value(word, s2, d - 1);
      if (x + y == z) return Triad{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace numerolab::digital
