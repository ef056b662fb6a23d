#include "numerolab/divisibility.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "numerolab/kernel.hpp"

namespace numerolab::divisibility {
namespace {

constexpr unsigned long kFactorialArgCap = 1'000'000;
constexpr unsigned long kFibonacciArgCap = 10'000'000;
constexpr unsigned long kChainScanCap = 100'000;
constexpr unsigned long kPairScanCap = 10'000;
constexpr unsigned kTupleArityCap = 8;
constexpr unsigned long long kExhaustiveTupleCap = 2'000'000;
constexpr std::size_t kSampleCount = 200'000;

unsigned long scan_limit(const Int& n_max, unsigned long cap) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (!n_max.fits_ulong_p() || n_max.get_ui() > cap)
    throw std::invalid_argument("n_max exceeds the scan cap");
  return n_max.get_ui();
}

// Number of nondecreasing k-tuples from {1..n}, saturating at the cap.
unsigned long long tuple_count(unsigned long n, unsigned k) {
  unsigned long long count = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (count > 2 * kExhaustiveTupleCap) return count;
    count = count * (n + i) / (i + 1);
  }
  return count;
}

std::vector<Int> values_through(NamedFn fn, unsigned long n_max) {
  std::vector<Int> values;
  values.reserve(n_max);
  for (unsigned long i = 1; i <= n_max; ++i) values.push_back(apply(fn, Int(i)));
  return values;
}

// g^d(n) | g^d(m) for d = 1..k; returns the least failing depth, or 0.
unsigned chain_failure(NamedFn g, const Int& n, const Int& m, unsigned k) {
  Int left = apply(g, n);
  Int right = apply(g, m);
  for (unsigned depth = 1; depth <= k; ++depth) {
    if (depth > 1) {
      left = apply(g, left);
      right = apply(g, right);
    }
    if (!mpz_divisible_p(right.get_mpz_t(), left.get_mpz_t())) return depth;
  }
  return 0;
}

std::optional<ChainCounterexample> check_pairs(
    NamedFn g, const std::vector<Int>& indices, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  // a <= b always gives a! | b!, so factorial chains never break.
  if (g == NamedFn::factorial || g == NamedFn::identity) return std::nullopt;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (!mpz_divisible_p(indices[j].get_mpz_t(), indices[i].get_mpz_t()))
        continue;
      unsigned depth = chain_failure(g, indices[i], indices[j], k);
      if (depth > 0) return ChainCounterexample{indices[i], indices[j], depth};
    }
  return std::nullopt;
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  // Modulo rejection keeps the draw exactly uniform.
  std::uint64_t limit = (~n + 1) % n;
  for (;;) {
    std::uint64_t raw = rng();
    if (raw >= limit) return raw % n;
  }
}

}  // namespace

std::optional<NamedFn> fn_from_name(std::string_view name) {
  if (name == "factorial") return NamedFn::factorial;
  if (name == "double") return NamedFn::double_fn;
  if (name == "fibonacci") return NamedFn::fibonacci;
  if (name == "smarandache") return NamedFn::smarandache;
  if (name == "identity") return NamedFn::identity;
  return std::nullopt;
}

std::string_view to_string(NamedFn fn) {
  switch (fn) {
    case NamedFn::factorial: return "factorial";
    case NamedFn::double_fn: return "double";
    case NamedFn::fibonacci: return "fibonacci";
    case NamedFn::smarandache: return "smarandache";
    case NamedFn::identity: return "identity";
  }
  return "?";
}

Int apply(NamedFn fn, const Int& n) {
  if (n < 1) throw std::invalid_argument("argument must be positive");
  Int out;
  switch (fn) {
    case NamedFn::factorial:
      if (!n.fits_ulong_p() || n.get_ui() > kFactorialArgCap)
        throw std::runtime_error("factorial argument beyond supported range");
      mpz_fac_ui(out.get_mpz_t(), n.get_ui());
      return out;
    case NamedFn::double_fn:
      return 2 * n;
    case NamedFn::fibonacci:
      if (!n.fits_ulong_p() || n.get_ui() > kFibonacciArgCap)
        throw std::runtime_error("fibonacci index beyond supported range");
      mpz_fib_ui(out.get_mpz_t(), n.get_ui());
      return out;
    case NamedFn::smarandache:
      return kernel::smarandache(n);
    case NamedFn::identity:
      return n;
  }
  throw std::invalid_argument("unknown function");
}

std::optional<ChainCounterexample> check_divisibility(NamedFn g,
                                                      const Int& n_max,
                                                      unsigned k) {
  unsigned long limit = scan_limit(n_max, kChainScanCap);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g == NamedFn::factorial || g == NamedFn::identity) return std::nullopt;
  for (unsigned long n = 1; n <= limit; ++n)
    for (unsigned long m = 2 * n; m <= limit; m += n) {
      unsigned depth = chain_failure(g, Int(n), Int(m), k);
      if (depth > 0) return ChainCounterexample{Int(n), Int(m), depth};
    }
  return std::nullopt;
}

std::optional<ChainCounterexample> check_divisibility_on(
    NamedFn g, const std::vector<Int>& indices, unsigned k) {
  if (indices.empty()) throw std::invalid_argument("index list is empty");
  std::vector<Int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 1)
    throw std::invalid_argument("indices must be positive");
  return check_pairs(g, sorted, k);
}

std::optional<PairCounterexample> check_strong(NamedFn g, const Int& n_max) {
  unsigned long limit = scan_limit(n_max, kPairScanCap);
  if (limit < 2) throw std::invalid_argument("n_max must be at least 2");
  std::vector<Int> values = values_through(g, limit);
  Int gcd_values;
  for (unsigned long n = 1; n <= limit; ++n)
    for (unsigned long m = n + 1; m <= limit; ++m) {
      mpz_gcd(gcd_values.get_mpz_t(), values[n - 1].get_mpz_t(),
              values[m - 1].get_mpz_t());
      if (gcd_values != values[std::gcd(n, m) - 1])
        return PairCounterexample{Int(n), Int(m)};
    }
  return std::nullopt;
}

KStrongReport check_k_strong(NamedFn g, unsigned k, const Int& n_max) {
  if (k < 2 || k > kTupleArityCap)
    throw std::invalid_argument("k must be between 2 and 8");
  unsigned long limit = scan_limit(n_max, kPairScanCap);
  std::vector<Int> values = values_through(g, limit);
  auto holds = [&](const std::vector<unsigned long>& tuple) {
    Int gcd_values = values[tuple[0] - 1];
    unsigned long gcd_indices = tuple[0];
    for (std::size_t i = 1; i < tuple.size(); ++i) {
      mpz_gcd(gcd_values.get_mpz_t(), gcd_values.get_mpz_t(),
              values[tuple[i] - 1].get_mpz_t());
      gcd_indices = std::gcd(gcd_indices, tuple[i]);
    }
    return gcd_values == values[gcd_indices - 1];
  };
  auto to_counterexample = [](const std::vector<unsigned long>& tuple) {
    std::vector<Int> out;
    for (unsigned long v : tuple) out.emplace_back(v);
    return out;
  };

  KStrongReport report;
  if (tuple_count(limit, k) <= kExhaustiveTupleCap) {
    std::vector<unsigned long> tuple(k, 1);
    for (;;) {
      if (!holds(tuple)) {
        report.counterexample = to_counterexample(tuple);
        return report;
      }
      // Advance the nondecreasing odometer.
      std::size_t pos = k;
      while (pos-- > 0) {
        if (tuple[pos] < limit) {
          ++tuple[pos];
          for (std::size_t i = pos + 1; i < k; ++i) tuple[i] = tuple[pos];
          break;
        }
        if (pos == 0) return report;
      }
    }
  }

  report.sampled = true;
  std::mt19937_64 rng(0x6b737472u);
  std::vector<unsigned long> tuple(k);
  for (std::size_t draw = 0; draw < kSampleCount; ++draw) {
    for (unsigned i = 0; i < k; ++i)
      tuple[i] = 1 + static_cast<unsigned long>(uniform_index(rng, limit));
    std::sort(tuple.begin(), tuple.end());
    if (!holds(tuple)) {
      report.counterexample = to_counterexample(tuple);
      return report;
    }
  }
  return report;
}

}  // namespace numerolab::divisibility
