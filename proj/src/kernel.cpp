#include "numerolab/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stack>

namespace numerolab::kernel {

namespace {

// Primes below 10^5, shared by trial division, witness bases and the prime
// stream's small segment.
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t bound = 100000;
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound;
           j += i)
        composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

// True when base certifies n composite. n odd, n-1 = d * 2^s with d odd.
bool composite_witness(const Int& n, const Int& base, const Int& d,
                       unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Int n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return false;
  }
  return true;
}

Int abs_diff(const Int& a, const Int& b) { return a >= b ? a - b : b - a; }

// Brent-cycle rho; n odd composite with no factor below 10^5. Deterministic:
// the polynomial offset starts at 1 and increments on failure.
Int brent_rho(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, q = 1, g = 1, x, ys;
    unsigned long r = 1;
    const unsigned long block = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs_diff(x, y)) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs_diff(x, ys), n);
      }
    }
    if (g != n) return g;
  }
}

// Exponent of p in m! (Legendre count).
Int legendre_count(const Int& m, const Int& p) {
  Int total = 0, pk = p;
  while (pk <= m) {
    total += m / pk;
    if (m / pk < p) break;
    pk *= p;
  }
  return total;
}

// Smallest m with v_p(m!) >= a; minimal m is a multiple of p, searched as k*p.
Int smarandache_prime_power(const Int& p, unsigned long a) {
  if (a == 1) return p;
  unsigned long lo = 1, hi = a;
  while (lo < hi) {
    unsigned long mid = lo + (hi - lo) / 2;
    if (legendre_count(Int(mid) * p, p) >= static_cast<long>(a))
      hi = mid;
    else
      lo = mid + 1;
  }
  return Int(lo) * p;
}

std::vector<std::uint64_t> lucky_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> survivors;
  for (std::uint64_t x = 1; x <= limit; x += 2) survivors.push_back(x);
  std::size_t stage = 1;
  while (stage < survivors.size()) {
    std::uint64_t step = survivors[stage];
    if (step > survivors.size()) break;
    std::vector<std::uint64_t> next;
    next.reserve(survivors.size());
    for (std::size_t i = 0; i < survivors.size(); ++i)
      if ((i + 1) % step != 0) next.push_back(survivors[i]);
    survivors.swap(next);
    ++stage;
  }
  return survivors;
}

// Lucky numbers by index (1-based), growing the sieve until `count` terms
// exist.
std::vector<std::uint64_t> lucky_by_index(std::uint64_t count) {
  std::uint64_t limit = std::max<std::uint64_t>(100, count * 16);
  for (;;) {
    auto v = lucky_sieve(limit);
    if (v.size() >= count) return v;
    limit *= 2;
  }
}

std::uint64_t prime_upper_bound(std::uint64_t k) {
  if (k < 6) return 15;
  double kd = static_cast<double>(k);
  return static_cast<std::uint64_t>(kd * (std::log(kd) + std::log(std::log(kd))) + 8);
}

std::vector<std::uint64_t> primes_by_index(std::uint64_t count) {
  std::uint64_t bound = prime_upper_bound(count);
  for (;;) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= bound && out.size() < count; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    if (out.size() >= count) return out;
    bound *= 2;
  }
}

constexpr std::uint64_t kLuckyLimitCap = 100000000;  // sieve guard

}  // namespace

std::optional<StreamName> stream_from_name(std::string_view name) {
  if (name == "naturals") return StreamName::naturals;
  if (name == "odds") return StreamName::odds;
  if (name == "evens") return StreamName::evens;
  if (name == "primes") return StreamName::primes;
  if (name == "fibonacci") return StreamName::fibonacci;
  if (name == "lucas") return StreamName::lucas;
  if (name == "triangular") return StreamName::triangular;
  if (name == "lucky") return StreamName::lucky;
  if (name == "smarandache") return StreamName::smarandache;
  if (name == "squares") return StreamName::squares;
  if (name == "cubes") return StreamName::cubes;
  return std::nullopt;
}

std::string_view to_string(StreamName name) {
  switch (name) {
    case StreamName::naturals: return "naturals";
    case StreamName::odds: return "odds";
    case StreamName::evens: return "evens";
    case StreamName::primes: return "primes";
    case StreamName::fibonacci: return "fibonacci";
    case StreamName::lucas: return "lucas";
    case StreamName::triangular: return "triangular";
    case StreamName::lucky: return "lucky";
    case StreamName::smarandache: return "smarandache";
    case StreamName::squares: return "squares";
    case StreamName::cubes: return "cubes";
  }
  return "?";
}

PrimeVerdict is_prime(const Int& n, int rounds) {
  if (rounds < 1) throw std::invalid_argument("is_prime: rounds must be >= 1");
  if (n < 2) return {false, true};
  for (std::uint32_t p : small_primes()) {
    if (p > 257) break;
    if (n == p) return {true, true};
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, true};
  }
  if (n < 257 * 257) return {true, true};

  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    if (n < 4759123141ul) {
      // Deterministic below 4759123141.
      for (unsigned b : {2u, 7u, 61u})
        if (composite_witness(n, Int(b), d, s)) return {false, true};
      return {true, true};
    }
    // Deterministic for every 64-bit input.
    static constexpr std::array<unsigned, 12> bases = {2,  3,  5,  7,  11, 13,
                                                       17, 19, 23, 29, 31, 37};
    for (unsigned b : bases)
      if (composite_witness(n, Int(b), d, s)) return {false, true};
    return {true, true};
  }

  const auto& primes = small_primes();
  std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(rounds),
                                        primes.size());
  for (std::size_t i = 0; i < k; ++i)
    if (composite_witness(n, Int(primes[i]), d, s)) return {false, true};
  return {true, false};
}

std::vector<Int> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<Int> factors;
  Int m = n;
  for (std::uint32_t p : small_primes()) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      factors.emplace_back(p);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) {
    if (m < Int(100001) * 100001) {
      factors.push_back(m);  // no factor below 10^5 and below its square
    } else {
      std::stack<Int> pending;
      pending.push(m);
      while (!pending.empty()) {
        Int c = pending.top();
        pending.pop();
        if (is_prime(c).prime) {
          factors.push_back(c);
          continue;
        }
        Int f = brent_rho(c);
        pending.push(f);
        pending.push(c / f);
      }
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

Int smarandache(const Int& n) {
  if (n < 1) throw std::invalid_argument("smarandache: argument must be >= 1");
  if (n == 1) return 1;
  auto factors = factorize(n);
  Int best = 0;
  std::size_t i = 0;
  while (i < factors.size()) {
    const Int& p = factors[i];
    unsigned long a = 0;
    while (i < factors.size() && factors[i] == p) {
      ++a;
      ++i;
    }
    Int candidate = smarandache_prime_power(p, a);
    if (candidate > best) best = candidate;
  }
  return best;
}

Int smarandache_quotient(const Int& m) {
  if (m < 1)
    throw std::invalid_argument("smarandache_quotient: argument must be >= 1");
  Int s = smarandache(m);
  if (s > 1000000)
    throw std::runtime_error(
        "smarandache_quotient: factorial too large to materialize");
  Int fac;
  mpz_fac_ui(fac.get_mpz_t(), s.get_ui());
  return fac / m;
}

std::optional<PowerForm> perfect_power(const Int& n) {
  if (n < 2)
    throw std::invalid_argument("perfect_power: argument must be >= 2");
  unsigned long max_exp = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = max_exp; e >= 2; --e) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0)
      return PowerForm{root, e};
  }
  return std::nullopt;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<Int> lucky_numbers(const Int& limit) {
  if (limit < 1)
    throw std::invalid_argument("lucky_numbers: limit must be >= 1");
  std::uint64_t lim = checked_index(limit, "lucky limit", kLuckyLimitCap);
  std::vector<Int> out;
  for (std::uint64_t v : lucky_sieve(lim)) out.emplace_back(v);
  return out;
}

Int stream_term(StreamName name, std::uint64_t index) {
  SeqSpec spec{name, index};
  return stream(spec, 1).at(0);
}

std::vector<Int> stream(const SeqSpec& spec, std::size_t count) {
  if (spec.offset < 1)
    throw std::invalid_argument("stream: offset must be >= 1");
  std::vector<Int> out;
  out.reserve(count);
  if (count == 0) return out;
  std::uint64_t last = spec.offset + count - 1;
  switch (spec.name) {
    case StreamName::naturals:
      for (std::uint64_t k = spec.offset; k <= last; ++k) out.emplace_back(k);
      break;
    case StreamName::odds:
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.push_back(Int(2) * k - 1);
      break;
    case StreamName::evens:
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.push_back(Int(2) * k);
      break;
    case StreamName::primes: {
      auto primes = primes_by_index(last);
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.emplace_back(primes[k - 1]);
      break;
    }
    case StreamName::fibonacci: {
      Int a = 1, b = 1;  // F(1), F(2)
      for (std::uint64_t k = 1; k <= last; ++k) {
        if (k >= spec.offset) out.push_back(a);
        Int next = a + b;
        a = b;
        b = next;
      }
      break;
    }
    case StreamName::lucas: {
      Int a = 2, b = 1;  // L(1), L(2)
      for (std::uint64_t k = 1; k <= last; ++k) {
        if (k >= spec.offset) out.push_back(a);
        Int next = a + b;
        a = b;
        b = next;
      }
      break;
    }
    case StreamName::triangular:
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.push_back(Int(k) * (Int(k) + 1) / 2);
      break;
    case StreamName::lucky: {
      auto lucky = lucky_by_index(last);
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.emplace_back(lucky[k - 1]);
      break;
    }
    case StreamName::smarandache:
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.push_back(smarandache(Int(k)));
      break;
    case StreamName::squares:
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.push_back(Int(k - 1) * (k - 1));
      break;
    case StreamName::cubes:
      for (std::uint64_t k = spec.offset; k <= last; ++k)
        out.push_back(Int(k - 1) * (k - 1) * (k - 1));
      break;
  }
  return out;
}

bool stream_has_membership(StreamName name) {
  switch (name) {
    case StreamName::odds:
    case StreamName::evens:
    case StreamName::primes:
    case StreamName::fibonacci:
    case StreamName::lucas:
      return true;
    default:
      return false;
  }
}

bool stream_member(StreamName name, const Int& value) {
  switch (name) {
    case StreamName::odds:
      return value >= 1 && mpz_odd_p(value.get_mpz_t());
    case StreamName::evens:
      return value >= 2 && mpz_even_p(value.get_mpz_t());
    case StreamName::primes:
      return is_prime(value).prime;
    case StreamName::fibonacci: {
      if (value < 1) return false;
      Int a = 1, b = 1;
      while (a < value) {
        Int next = a + b;
        a = b;
        b = next;
      }
      return a == value;
    }
    case StreamName::lucas: {
      if (value == 2 || value == 1) return true;
      Int a = 3, b = 4;  // L(3), L(4); monotone from here
      while (a < value) {
        Int next = a + b;
        a = b;
        b = next;
      }
      return a == value;
    }
    default:
      throw std::invalid_argument(
          "membership test unsupported for stream " +
          std::string(to_string(name)));
  }
}

}  // namespace numerolab::kernel
