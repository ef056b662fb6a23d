#include "numerolab/concat.hpp"

namespace numerolab::concat {

std::optional<ScreenTest> screen_test_from_name(std::string_view name) {
  if (name == "prime") return ScreenTest::prime;
  if (name == "even_power") return ScreenTest::even_power;
  if (name == "perfect_power") return ScreenTest::perfect_power;
  return std::nullopt;
}

std::string_view to_string(ScreenTest test) {
  switch (test) {
    case ScreenTest::prime: return "prime";
    case ScreenTest::even_power: return "even_power";
    case ScreenTest::perfect_power: return "perfect_power";
  }
  return "?";
}

std::vector<ConcatTerm> concat_terms(const kernel::SeqSpec& spec,
                                     std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("concat_terms: k must be >= 1");
  auto elements = kernel::stream(spec, k);
  std::vector<ConcatTerm> out;
  out.reserve(k);
  Int value = 0;
  std::uint64_t word_len = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::string digits = numerolab::to_string(elements[i]);
    Int shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 10, digits.size());
    value = value * shift + elements[i];
    word_len += digits.size();
    out.push_back(ConcatTerm{i + 1, value, word_len});
  }
  return out;
}

std::vector<ScreenVerdict> screen(const kernel::SeqSpec& spec, std::uint64_t k,
                                  ScreenTest test, int rounds) {
  auto terms = concat_terms(spec, k);
  std::vector<ScreenVerdict> out;
  out.reserve(terms.size());
  for (const auto& term : terms) {
    ScreenVerdict v{term.index, term.value, false, true};
    switch (test) {
      case ScreenTest::prime: {
        auto verdict = kernel::is_prime(term.value, rounds);
        v.hit = verdict.prime;
        v.proved = verdict.proved;
        break;
      }
      case ScreenTest::even_power:
        v.hit = kernel::is_perfect_square(term.value);
        break;
      case ScreenTest::perfect_power:
        v.hit = term.value >= 2 && kernel::perfect_power(term.value).has_value();
        break;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ClosureVerdict> closure_check(const kernel::SeqSpec& spec,
                                          std::uint64_t k) {
  if (!kernel::stream_has_membership(spec.name))
    throw std::invalid_argument("membership test unsupported for stream " +
                                std::string(kernel::to_string(spec.name)));
  auto terms = concat_terms(spec, k);
  std::vector<ClosureVerdict> out;
  out.reserve(terms.size());
  for (const auto& term : terms)
    out.push_back(ClosureVerdict{term.index, term.value,
                                 kernel::stream_member(spec.name, term.value)});
  return out;
}

}  // namespace numerolab::concat
