#include "numerolab/relations.hpp"

#include <stdexcept>

namespace numerolab::relations {
namespace {

Int fold_window(const std::vector<Int>& terms, std::size_t first,
                std::uint64_t width, Fold fold) {
  Int acc = terms[first];
  for (std::uint64_t i = 1; i < width; ++i) {
    const Int& t = terms[first + i];
    switch (fold) {
      case Fold::add: acc += t; break;
      case Fold::sub: acc -= t; break;
      case Fold::mul: acc *= t; break;
    }
  }
  return acc;
}

}  // namespace

std::optional<Fold> fold_from_name(std::string_view name) {
  if (name == "add") return Fold::add;
  if (name == "sub") return Fold::sub;
  if (name == "mul") return Fold::mul;
  return std::nullopt;
}

std::string_view to_string(Fold fold) {
  switch (fold) {
    case Fold::add: return "add";
    case Fold::sub: return "sub";
    case Fold::mul: return "mul";
  }
  throw std::logic_error("unreachable fold");
}

std::vector<RelationHit> scan(const kernel::SeqSpec& spec, std::uint64_t n_max,
                              std::uint64_t p, std::uint64_t q, Fold fold) {
  if (p < 1 || q < 1) throw std::invalid_argument("window sizes must be >= 1");
  if (n_max < p + q)
    throw std::invalid_argument("n_max must cover one full window pair");
  std::vector<Int> terms = kernel::stream(spec, n_max);
  std::vector<RelationHit> hits;
  for (std::uint64_t i = 0; i + p + q <= n_max; ++i) {
    Int left = fold_window(terms, i, p, fold);
    Int right = fold_window(terms, i + p, q, fold);
    if (left == right)
      hits.push_back(RelationHit{spec.offset + i, p, q, fold, left, right});
  }
  return hits;
}

std::vector<PPATerm> ppa_terms(std::uint64_t count) {
  if (count < 2) throw std::invalid_argument("count must be at least 2");
  std::vector<PPATerm> terms;
  terms.reserve(count);
  terms.push_back(PPATerm{1, Int(1)});
  terms.push_back(PPATerm{2, Int(1)});
  for (std::uint64_t i = 3; i <= count; ++i) {
    std::uint64_t p = (i % 2 == 1) ? (i - 1) / 2 : (i - 2) / 2;
    Int value = terms[p].value;  // a(p+1), index p+1 sits at slot p
    value += (i % 2 == 1) ? -1 : 1;
    terms.push_back(PPATerm{i, value});
  }
  return terms;
}

std::optional<std::uint64_t> ppa_verify(const std::vector<Int>& terms,
                                        std::uint64_t p_max) {
  if (terms.size() < 2 * p_max)
    throw std::invalid_argument("need at least 2*p_max terms");
  Int left = 0;
  Int right = 0;
  for (std::uint64_t p = 1; p <= p_max; ++p) {
    // left(p) = a1..ap; right(p) = a(p+1)..a(2p) gains the tail pair and
    // cedes a(p) to the left block.
    left += terms[p - 1];
    right += terms[2 * p - 2] + terms[2 * p - 1] - terms[p - 1];
    if (left != right) return p;
  }
  return std::nullopt;
}

}  // namespace numerolab::relations
