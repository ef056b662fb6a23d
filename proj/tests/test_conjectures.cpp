#include "doctest.h"
#include "numerolab/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace {

using numerolab::Int;
using namespace numerolab::conjectures;

bool slow_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_to(long bound) {
  std::vector<long> out;
  for (long n = 2; n <= bound; ++n)
    if (slow_prime(n)) out.push_back(n);
  return out;
}

// Naive three-loop enumeration, no solving for r.
std::vector<RepTriple> oracle_reps(long k, long bound) {
  std::vector<RepTriple> out;
  auto primes = primes_to(bound);
  for (long p : primes)
    for (long q : primes) {
      if (q < p) continue;
      for (long r : primes)
        if (p + q - r == k && r != p && r != q)
          out.push_back({Int(p), Int(q), Int(r)});
    }
  return out;
}

}  // namespace

TEST_SUITE("conjectures") {

TEST_CASE("representations of nine and one") {
  auto nine = prime_reps(Int(9), Int(10));
  REQUIRE(nine.size() == 2);
  CHECK(nine[0] == RepTriple{Int(5), Int(7), Int(3)});
  CHECK(nine[1] == RepTriple{Int(7), Int(7), Int(5)});

  auto one = prime_reps(Int(1), Int(25));
  auto has = [&](long p, long q, long r) {
    return std::find(one.begin(), one.end(),
                     RepTriple{Int(p), Int(q), Int(r)}) != one.end();
  };
  CHECK(has(3, 5, 7));
  CHECK(has(5, 7, 11));
  CHECK(has(7, 11, 17));
  CHECK(has(11, 13, 23));
}

TEST_CASE("every returned triple re-verifies") {
  for (long k : {1, 3, 7, 15, 33}) {
    auto reps = prime_reps(Int(k), Int(60));
    for (const auto& t : reps) {
      CHECK(slow_prime(t.p.get_si()));
      CHECK(slow_prime(t.q.get_si()));
      CHECK(slow_prime(t.r.get_si()));
      CHECK(t.p <= t.q);
      CHECK(t.r != t.p);
      CHECK(t.r != t.q);
      CHECK(t.p + t.q - t.r == Int(k));
      CHECK(t.q <= Int(60));
      CHECK(t.r <= Int(60));
    }
    CHECK(std::is_sorted(reps.begin(), reps.end(),
                         [](const RepTriple& a, const RepTriple& b) {
                           return a.p != b.p ? a.p < b.p : a.q < b.q;
                         }));
  }
}

TEST_CASE("representation lists match the naive oracle") {
  for (long k = 1; k <= 99; k += 2)
    CHECK(prime_reps(Int(k), Int(200)) == oracle_reps(k, 200));
}

TEST_CASE("targets must be odd and positive") {
  CHECK_THROWS_AS(prime_reps(Int(2), Int(10)), std::invalid_argument);
  CHECK_THROWS_AS(prime_reps(Int(0), Int(10)), std::invalid_argument);
  CHECK_THROWS_AS(prime_reps(Int(-3), Int(10)), std::invalid_argument);
  CHECK_THROWS_AS(prime_reps(Int(1), Int(-1)), std::invalid_argument);
  CHECK_THROWS_AS(sweep(Int(0), Int(10)), std::invalid_argument);
  CHECK_THROWS_AS(prime_reps(Int(1), Int("200000000")), std::invalid_argument);
}

TEST_CASE("sweep reports targets with no representation") {
  CHECK(sweep(Int(11), Int(25)).empty());
  CHECK(sweep(Int(1), Int(25)).empty());
  CHECK(sweep(Int(11), Int(5)) ==
        std::vector<Int>{Int(3), Int(5), Int(9), Int(11)});
  CHECK(sweep(Int(11), Int(1)) ==
        std::vector<Int>{Int(1), Int(3), Int(5), Int(7), Int(9), Int(11)});

  // A target sits in the sweep exactly when its list is empty.
  auto gaps = sweep(Int(99), Int(200));
  for (long k = 1; k <= 99; k += 2) {
    bool listed = std::find(gaps.begin(), gaps.end(), Int(k)) != gaps.end();
    CHECK(listed == prime_reps(Int(k), Int(200)).empty());
  }
}

TEST_CASE("cube-square witnesses on worked values") {
  CHECK(cube_square_witness(Int(12), Int(50)) ==
        CubeSquareWitness{Int(13), Int(47)});
  CHECK(cube_square_witness(Int(7), Int(10)) ==
        CubeSquareWitness{Int(2), Int(1)});
  CHECK(cube_square_witness(Int(1), Int(10)) ==
        CubeSquareWitness{Int(2), Int(3)});
  CHECK(cube_square_witness(Int(8), Int(10)) ==
        CubeSquareWitness{Int(1), Int(3)});
  CHECK_FALSE(cube_square_witness(Int(6), Int(10000)).has_value());

  CHECK_THROWS_AS(cube_square_witness(Int(0), Int(10)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cube_square_witness(Int(5), Int(0)), std::invalid_argument);
}

TEST_CASE("witnesses are minimal and sound") {
  auto square_gap = [](long x, long a, long sign) {
    long long v = static_cast<long long>(x) * x * x + sign * a;
    if (v < 1) return -1ll;
    long long y = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    for (long long c = y - 2; c <= y + 2; ++c)
      if (c >= 1 && c * c == v) return c;
    return -1ll;
  };
  for (long a = 1; a <= 30; ++a) {
    auto got = cube_square_witness(Int(a), Int(100));
    long first = 0;
    long long first_y = -1;
    for (long x = 1; x <= 100 && first == 0; ++x)
      for (long sign : {-1l, 1l}) {
        long long y = square_gap(x, a, sign);
        if (y > 0) {
          first = x;
          first_y = y;
          break;
        }
      }
    if (first == 0) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(got->x == Int(first));
      CHECK(got->y == Int(static_cast<long>(first_y)));
    }
  }
}

TEST_CASE("bad scan isolates the conjectured gaps") {
  auto bad = bad_scan(Int(15), Int(1000));
  CHECK(bad == std::vector<Int>{Int(5), Int(6), Int(10), Int(14)});

  // The scan and the witness search describe the same relation.
  for (long a = 1; a <= 15; ++a) {
    bool listed = std::find(bad.begin(), bad.end(), Int(a)) != bad.end();
    CHECK(listed == !cube_square_witness(Int(a), Int(1000)).has_value());
  }

  // Shrinking the x range can only add entries.
  CHECK(bad_scan(Int(15), Int(10)) ==
        std::vector<Int>{Int(5), Int(6), Int(10), Int(12), Int(13), Int(14)});
}

TEST_CASE("bad scan matches a brute-force marking") {
  auto got = bad_scan(Int(50), Int(60));
  std::vector<bool> hit(51, false);
  for (long long x = 1; x <= 60; ++x) {
    long long cube = x * x * x;
    for (long long y = 1; y * y <= cube + 50; ++y) {
      long long gap = cube >= y * y ? cube - y * y : y * y - cube;
      if (gap >= 1 && gap <= 50) hit[gap] = true;
    }
  }
  std::vector<Int> want;
  for (long a = 1; a <= 50; ++a)
    if (!hit[a]) want.emplace_back(a);
  CHECK(got == want);
}

TEST_CASE("bad scan rejects malformed ranges") {
  CHECK_THROWS_AS(bad_scan(Int(0), Int(10)), std::invalid_argument);
  CHECK_THROWS_AS(bad_scan(Int(10), Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(bad_scan(Int("200000000"), Int(10)),
                  std::invalid_argument);
}

}  // TEST_SUITE
