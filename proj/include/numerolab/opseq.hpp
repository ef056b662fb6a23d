#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numerolab/types.hpp"

namespace numerolab::opseq {

enum class Op { add, sub, mul, div, pow, root };

std::optional<Op> op_from_name(std::string_view name);
std::string_view to_string(Op op);

// Chains evaluate strictly left to right; there is no precedence.
// pow: current ** operand. root: current-th root of the operand, so
// "v root e" is e^(1/v), exact or undefined.
enum class EvalStatus { ok, undefined, capped };

struct EvalResult {
  EvalStatus status = EvalStatus::undefined;
  Rat value;  // meaningful only when status == ok
};

EvalResult eval_chain_ex(const std::vector<Int>& operands,
                         const std::vector<Op>& ops,
                         std::uint64_t digit_cap = 1000);

std::optional<Rat> eval_chain(const std::vector<Int>& operands,
                              const std::vector<Op>& ops);

struct OpChain {
  std::vector<Int> operands;
  std::vector<Op> ops;
  Rat value;
};

std::string render_chain(const OpChain& chain);

enum class Domain { rational, integer };

std::optional<Domain> domain_from_name(std::string_view name);
std::string_view to_string(Domain domain);

struct NextTerm {
  bool exhausted = false;
  bool cap_limited = false;  // some chains hit the magnitude cap
  Rat value;
  OpChain witness;
};

// Minimum chain value strictly above threshold over operands 1..upto.
NextTerm next_term(std::uint64_t upto, const std::vector<Op>& opset,
                   const Rat& threshold, Domain domain,
                   std::uint64_t digit_cap = 1000);

struct SequenceResult {
  std::vector<Rat> terms;
  bool exhausted = false;    // stopped early, no qualifying successor
  bool cap_limited = false;
};

SequenceResult sequence(const std::vector<Op>& opset, std::size_t count,
                        Domain domain, const Rat& start = Rat(1));

struct RandomTerm {
  Rat value;
  OpChain witness;
};

struct RandomSequenceResult {
  std::vector<RandomTerm> terms;
  bool exhausted = false;
};

// Successor chosen uniformly among qualifying chain values, seeded.
RandomSequenceResult random_sequence(const std::vector<Op>& opset,
                                     std::size_t count, std::uint64_t seed);

}  // namespace numerolab::opseq
