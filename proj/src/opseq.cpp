#include "numerolab/opseq.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace numerolab::opseq {
namespace {

constexpr std::uint64_t kEnumerationCap = 1u << 26;

std::uint64_t digits10(const Int& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 10);
}

std::uint64_t digits10(const Rat& v) {
  return std::max(digits10(Int(v.get_num())), digits10(Int(v.get_den())));
}

bool fits_ulong(const Int& v) {
  return mpz_fits_ulong_p(v.get_mpz_t()) != 0;
}

// Exact k-th root of e; rational roots of integers are integers or absent.
std::optional<Int> exact_root(const Int& e, unsigned long k) {
  Int mag = abs(e);
  if (e < 0 && k % 2 == 0) return std::nullopt;
  Int root;
  int exact = mpz_root(root.get_mpz_t(), mag.get_mpz_t(), k);
  if (exact == 0) return std::nullopt;
  if (e < 0) root = -root;
  return root;
}

// acc ** e with the magnitude cap applied to the result size estimate.
EvalStatus apply_pow(Rat& acc, const Int& e, std::uint64_t digit_cap) {
  Int num(acc.get_num());
  Int den(acc.get_den());
  if (num == 0) {
    if (e < 0) return EvalStatus::undefined;
    acc = e == 0 ? Rat(1) : Rat(0);
    return EvalStatus::ok;
  }
  if (num == 1 && den == 1) return EvalStatus::ok;
  if (num == -1 && den == 1) {
    if (mpz_even_p(e.get_mpz_t())) acc = Rat(1);
    return EvalStatus::ok;
  }
  Int mag = abs(e);
  if (!fits_ulong(mag)) return EvalStatus::capped;
  unsigned long exp = mag.get_ui();
  if (exp * digits10(acc) > digit_cap) return EvalStatus::capped;
  Int pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), exp);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), exp);
  acc = e < 0 ? Rat(pd, pn) : Rat(pn, pd);
  acc.canonicalize();
  return EvalStatus::ok;
}

// acc-th root of e, i.e. e ** (1/acc); exact or undefined.
EvalStatus apply_root(Rat& acc, const Int& e, std::uint64_t digit_cap) {
  Int p(acc.get_num());
  Int q(acc.get_den());
  if (p == 0) return EvalStatus::undefined;
  if (e == 0) {
    if (p < 0) return EvalStatus::undefined;
    acc = Rat(0);
    return EvalStatus::ok;
  }
  if (e == 1) {
    acc = Rat(1);
    return EvalStatus::ok;
  }
  if (e == -1) {
    // (-1)^(q/p): -1 when the root index is odd, undefined when even.
    Int idx = abs(p);
    if (mpz_even_p(idx.get_mpz_t())) return EvalStatus::undefined;
    acc = Rat(-1);
    return EvalStatus::ok;
  }
  if (!fits_ulong(q)) return EvalStatus::capped;
  unsigned long qe = q.get_ui();
  if (qe * digits10(e) > digit_cap) return EvalStatus::capped;
  Int radicand;
  mpz_pow_ui(radicand.get_mpz_t(), e.get_mpz_t(), qe);
  Int idx = abs(p);
  if (!fits_ulong(idx)) return EvalStatus::undefined;  // |e| >= 2 here
  auto root = exact_root(radicand, idx.get_ui());
  if (!root) return EvalStatus::undefined;
  acc = p < 0 ? Rat(1, *root) : Rat(*root);
  acc.canonicalize();
  return EvalStatus::ok;
}

EvalStatus apply_op(Rat& acc, Op op, const Int& operand,
                    std::uint64_t digit_cap) {
  switch (op) {
    case Op::add:
      acc += operand;
      return EvalStatus::ok;
    case Op::sub:
      acc -= operand;
      return EvalStatus::ok;
    case Op::mul:
      acc *= operand;
      return EvalStatus::ok;
    case Op::div:
      if (operand == 0) return EvalStatus::undefined;
      acc /= operand;
      return EvalStatus::ok;
    case Op::pow:
      return apply_pow(acc, operand, digit_cap);
    case Op::root:
      return apply_root(acc, operand, digit_cap);
  }
  throw std::logic_error("unreachable operator");
}

void validate_opset(const std::vector<Op>& opset) {
  if (opset.empty()) throw std::invalid_argument("opset must be nonempty");
  for (std::size_t i = 0; i < opset.size(); ++i)
    for (std::size_t j = i + 1; j < opset.size(); ++j)
      if (opset[i] == opset[j])
        throw std::invalid_argument("opset must not repeat operators");
}

std::vector<Int> ascending_operands(std::uint64_t upto) {
  std::vector<Int> operands;
  operands.reserve(upto);
  for (std::uint64_t k = 1; k <= upto; ++k) operands.emplace_back(k);
  return operands;
}

// Odometer over operator assignments, ops[0] most significant.
bool advance(std::vector<std::size_t>& idx, std::size_t radix) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < radix) return true;
    idx[i] = 0;
  }
  return false;
}

void check_enumeration_size(std::uint64_t upto, std::size_t radix) {
  if (upto < 2) throw std::invalid_argument("upto must be at least 2");
  std::uint64_t total = 1;
  for (std::uint64_t i = 1; i < upto; ++i) {
    total *= radix;
    if (total > kEnumerationCap)
      throw std::invalid_argument("operator enumeration too large");
  }
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection below 2^64 mod n keeps the draw unbiased and byte-stable.
  const std::uint64_t reject_below = (~n + 1) % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= reject_below) return r % n;
  }
}

}  // namespace

std::optional<Op> op_from_name(std::string_view name) {
  if (name == "add") return Op::add;
  if (name == "sub") return Op::sub;
  if (name == "mul") return Op::mul;
  if (name == "div") return Op::div;
  if (name == "pow") return Op::pow;
  if (name == "root") return Op::root;
  return std::nullopt;
}

std::string_view to_string(Op op) {
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
    case Op::pow: return "pow";
    case Op::root: return "root";
  }
  throw std::logic_error("unreachable operator");
}

EvalResult eval_chain_ex(const std::vector<Int>& operands,
                         const std::vector<Op>& ops,
                         std::uint64_t digit_cap) {
  if (operands.empty())
    throw std::invalid_argument("chain needs at least one operand");
  if (ops.size() + 1 != operands.size())
    throw std::invalid_argument("chain needs exactly one fewer operator");
  EvalResult result;
  Rat acc(operands.front());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    EvalStatus status = apply_op(acc, ops[i], operands[i + 1], digit_cap);
    if (status != EvalStatus::ok) {
      result.status = status;
      return result;
    }
  }
  result.status = EvalStatus::ok;
  result.value = acc;
  return result;
}

std::optional<Rat> eval_chain(const std::vector<Int>& operands,
                              const std::vector<Op>& ops) {
  EvalResult result = eval_chain_ex(operands, ops);
  if (result.status != EvalStatus::ok) return std::nullopt;
  return result.value;
}

std::string render_chain(const OpChain& chain) {
  static constexpr std::string_view symbols[] = {"+", "-", "*",
                                                 "/", "^", "rt"};
  std::string text = numerolab::to_string(chain.operands.at(0));
  for (std::size_t i = 0; i < chain.ops.size(); ++i) {
    text += ' ';
    text += symbols[static_cast<std::size_t>(chain.ops[i])];
    text += ' ';
    text += numerolab::to_string(chain.operands[i + 1]);
  }
  return text;
}

std::optional<Domain> domain_from_name(std::string_view name) {
  if (name == "rational") return Domain::rational;
  if (name == "integer") return Domain::integer;
  return std::nullopt;
}

std::string_view to_string(Domain domain) {
  return domain == Domain::rational ? "rational" : "integer";
}

NextTerm next_term(std::uint64_t upto, const std::vector<Op>& opset,
                   const Rat& threshold, Domain domain,
                   std::uint64_t digit_cap) {
  validate_opset(opset);
  check_enumeration_size(upto, opset.size());
  std::vector<Int> operands = ascending_operands(upto);
  std::vector<std::size_t> idx(upto - 1, 0);
  std::vector<Op> ops(upto - 1, opset[0]);

  NextTerm best;
  best.exhausted = true;
  do {
    for (std::size_t i = 0; i < idx.size(); ++i) ops[i] = opset[idx[i]];
    EvalResult result = eval_chain_ex(operands, ops, digit_cap);
    if (result.status == EvalStatus::capped) {
      best.cap_limited = true;
      continue;
    }
    if (result.status != EvalStatus::ok) continue;
    if (result.value <= threshold) continue;
    if (domain == Domain::integer && result.value.get_den() != 1) continue;
    if (!best.exhausted && result.value >= best.value) continue;
    best.exhausted = false;
    best.value = result.value;
    best.witness = OpChain{operands, ops, result.value};
  } while (advance(idx, opset.size()));
  return best;
}

SequenceResult sequence(const std::vector<Op>& opset, std::size_t count,
                        Domain domain, const Rat& start) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  validate_opset(opset);
  SequenceResult result;
  result.terms.push_back(start);
  for (std::size_t n = 2; n <= count; ++n) {
    NextTerm next = next_term(n, opset, result.terms.back(), domain);
    result.cap_limited = result.cap_limited || next.cap_limited;
    if (next.exhausted) {
      result.exhausted = true;
      break;
    }
    result.terms.push_back(next.value);
  }
  return result;
}

RandomSequenceResult random_sequence(const std::vector<Op>& opset,
                                     std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  validate_opset(opset);
  std::mt19937_64 rng(seed);
  RandomSequenceResult result;
  result.terms.push_back(RandomTerm{Rat(1), OpChain{{Int(1)}, {}, Rat(1)}});
  for (std::size_t n = 2; n <= count; ++n) {
    check_enumeration_size(n, opset.size());
    const Rat& floor = result.terms.back().value;
    std::vector<Int> operands = ascending_operands(n);
    std::vector<std::size_t> idx(n - 1, 0);
    std::vector<Op> ops(n - 1, opset[0]);
    std::map<Rat, OpChain> candidates;
    do {
      for (std::size_t i = 0; i < idx.size(); ++i) ops[i] = opset[idx[i]];
      EvalResult eval = eval_chain_ex(operands, ops);
      if (eval.status != EvalStatus::ok || eval.value <= floor) continue;
      candidates.try_emplace(eval.value,
                             OpChain{operands, ops, eval.value});
    } while (advance(idx, opset.size()));
    if (candidates.empty()) {
      result.exhausted = true;
      break;
    }
    auto pick = candidates.begin();
    std::advance(pick, uniform_index(rng, candidates.size()));
    result.terms.push_back(RandomTerm{pick->first, pick->second});
  }
  return result;
}

}  // namespace numerolab::opseq
