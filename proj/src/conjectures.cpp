#include "numerolab/conjectures.hpp"

#include <stdexcept>

namespace numerolab::conjectures {
namespace {

// Keeps sieve and mark arrays to a sane footprint.
constexpr unsigned long kRangeCap = 100'000'000;

unsigned long bounded_ulong(const Int& v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) +
                                         " must be nonnegative");
  if (!v.fits_ulong_p() || v.get_ui() > kRangeCap)
    throw std::invalid_argument(std::string(what) + " exceeds the range cap");
  return v.get_ui();
}

struct Sieve {
  std::vector<unsigned long> primes;
  std::vector<bool> is_prime;
};

Sieve sieve_up_to(unsigned long limit) {
  Sieve s;
  s.is_prime.assign(limit + 1, true);
  if (limit >= 0) s.is_prime[0] = false;
  if (limit >= 1) s.is_prime[1] = false;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (!s.is_prime[i]) continue;
    s.primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) s.is_prime[j] = false;
  }
  return s;
}

void check_odd_target(const Int& k) {
  if (k < 1 || mpz_even_p(k.get_mpz_t()))
    throw std::invalid_argument("target must be odd and positive");
}

// r = p + q - k solved for the pair; emits at most one triple per (p, q).
bool pair_rep(unsigned long p, unsigned long q, long long k,
              unsigned long bound, const Sieve& sieve, unsigned long& r_out) {
  long long r = static_cast<long long>(p) + static_cast<long long>(q) - k;
  if (r < 2 || r > static_cast<long long>(bound)) return false;
  unsigned long r_ul = static_cast<unsigned long>(r);
  if (!sieve.is_prime[r_ul] || r_ul == p || r_ul == q) return false;
  r_out = r_ul;
  return true;
}

bool has_rep(long long k, unsigned long bound, const Sieve& sieve) {
  unsigned long r;
  if (bound >= 2 && pair_rep(2, 2, k, bound, sieve, r)) return true;
  // p = 2 with odd q forces r even, so only odd pairs remain.
  for (std::size_t i = 1; i < sieve.primes.size(); ++i)
    for (std::size_t j = i; j < sieve.primes.size(); ++j)
      if (pair_rep(sieve.primes[i], sieve.primes[j], k, bound, sieve, r))
        return true;
  return false;
}

}  // namespace

std::vector<RepTriple> prime_reps(const Int& k, const Int& bound) {
  check_odd_target(k);
  unsigned long b = bounded_ulong(bound, "bound");
  std::vector<RepTriple> out;
  if (b < 2 || k > 2 * Int(b)) return out;
  long long k_ll = static_cast<long long>(k.get_ui());
  Sieve sieve = sieve_up_to(b);
  for (std::size_t i = 0; i < sieve.primes.size(); ++i)
    for (std::size_t j = i; j < sieve.primes.size(); ++j) {
      unsigned long r;
      if (pair_rep(sieve.primes[i], sieve.primes[j], k_ll, b, sieve, r))
        out.push_back({Int(sieve.primes[i]), Int(sieve.primes[j]), Int(r)});
    }
  return out;
}

std::vector<Int> sweep(const Int& k_max, const Int& bound) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  unsigned long k_hi = bounded_ulong(k_max, "k_max");
  unsigned long b = bounded_ulong(bound, "bound");
  Sieve sieve = b >= 2 ? sieve_up_to(b) : Sieve{};
  std::vector<Int> out;
  for (unsigned long k = 1; k <= k_hi; k += 2)
    if (b < 2 || !has_rep(static_cast<long long>(k), b, sieve))
      out.emplace_back(k);
  return out;
}

std::optional<CubeSquareWitness> cube_square_witness(const Int& a,
                                                     const Int& x_max) {
  if (a < 1) throw std::invalid_argument("a must be positive");
  if (x_max < 1) throw std::invalid_argument("x_max must be positive");
  Int y;
  for (Int x = 1; x <= x_max; ++x) {
    Int cube = x * x * x;
    Int below = cube - a;
    if (below >= 1 && mpz_perfect_square_p(below.get_mpz_t())) {
      mpz_sqrt(y.get_mpz_t(), below.get_mpz_t());
      return CubeSquareWitness{x, y};
    }
    Int above = cube + a;
    if (mpz_perfect_square_p(above.get_mpz_t())) {
      mpz_sqrt(y.get_mpz_t(), above.get_mpz_t());
      return CubeSquareWitness{x, y};
    }
  }
  return std::nullopt;
}

std::vector<Int> bad_scan(const Int& a_max, const Int& x_max) {
  unsigned long a_hi = bounded_ulong(a_max, "a_max");
  if (a_hi < 1) throw std::invalid_argument("a_max must be positive");
  if (x_max < 1) throw std::invalid_argument("x_max must be positive");
  std::vector<bool> hit(a_hi + 1, false);
  for (Int x = 1; x <= x_max; ++x) {
    Int cube = x * x * x;
    // Squares within a_max of the cube sit in a narrow y window.
    Int low = cube - static_cast<long>(a_hi);
    Int y = 1;
    if (low > 1) mpz_sqrt(y.get_mpz_t(), low.get_mpz_t());
    for (Int sq = y * y; sq <= cube + static_cast<long>(a_hi);
         sq += 2 * y + 1, ++y) {
      Int gap = sq >= cube ? Int(sq - cube) : Int(cube - sq);
      if (gap >= 1 && gap <= static_cast<long>(a_hi))
        hit[gap.get_ui()] = true;
    }
  }
  std::vector<Int> out;
  for (unsigned long a = 1; a <= a_hi; ++a)
    if (!hit[a]) out.emplace_back(a);
  return out;
}

}  // namespace numerolab::conjectures
