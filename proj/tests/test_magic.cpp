#include "doctest.h"
#include "numerolab/magic.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace {

using numerolab::Int;
using namespace numerolab::magic;

SquareGrid make_grid(std::uint64_t order, std::vector<long> cells, Law law,
                     bool diagonals, bool distinct) {
  SquareGrid g{order, {}, law, diagonals, distinct};
  for (long v : cells) g.cells.emplace_back(v);
  return g;
}

const std::vector<long> kDurer{16, 3, 2,  13, 5,  10, 11, 8,
                               9,  6, 7,  12, 4,  15, 14, 1};

// Independent line check used by the oracle.
long oracle_line(const std::vector<long>& g, std::size_t start,
                 std::size_t stride, std::size_t n, Law law) {
  long acc = g[start];
  for (std::size_t i = 1; i < n; ++i) {
    long v = g[start + i * stride];
    if (law == Law::sum || i == 1)
      acc += v;
    else if (i % 2 == 0)
      acc -= v;
    else
      acc += v;
  }
  return acc;
}

bool oracle_magic(const std::vector<long>& g, std::size_t n, Law law,
                  bool diagonals) {
  long c0 = oracle_line(g, 0, 1, n, law);
  for (std::size_t r = 1; r < n; ++r)
    if (oracle_line(g, r * n, 1, n, law) != c0) return false;
  for (std::size_t c = 0; c < n; ++c)
    if (oracle_line(g, c, n, n, law) != c0) return false;
  if (diagonals) {
    if (oracle_line(g, 0, n + 1, n, law) != c0) return false;
    if (oracle_line(g, n - 1, n - 1, n, law) != c0) return false;
  }
  return true;
}

std::vector<long> oracle_transform(const std::vector<long>& g, std::size_t n,
                                   int which) {
  std::vector<long> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t sr = r, sc = c;
      switch (which) {
        case 1: sr = n - 1 - c; sc = r; break;
        case 2: sr = n - 1 - r; sc = n - 1 - c; break;
        case 3: sr = c; sc = n - 1 - r; break;
        case 4: sr = c; sc = r; break;
        case 5: sr = n - 1 - c; sc = n - 1 - r; break;
        case 6: sr = r; sc = n - 1 - c; break;
        case 7: sr = n - 1 - r; sc = c; break;
        default: break;
      }
      out[r * n + c] = g[sr * n + sc];
    }
  return out;
}

struct OracleOrbits {
  std::set<std::vector<long>> keys;
  std::set<std::vector<long>> reps;

  void add(const std::vector<long>& g, std::size_t n, Law law,
           bool diagonals) {
    std::vector<long> key = g;
    std::vector<long> rep = g;
    for (int t = 1; t < 8; ++t) {
      auto image = oracle_transform(g, n, t);
      if (image < key) key = image;
      if (image < rep && oracle_magic(image, n, law, diagonals)) rep = image;
    }
    if (keys.insert(key).second) reps.insert(rep);
  }
};

// Naive enumeration: every arrangement of pool values (with or without
// reuse), full verification, orbit bucketing.
OracleOrbits oracle_search(const std::vector<long>& pool, std::size_t n,
                           Law law, bool diagonals, bool distinct) {
  OracleOrbits orbits;
  std::vector<long> grid(n * n, 0);
  std::vector<char> used(pool.size(), false);
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      if (oracle_magic(grid, n, law, diagonals)) orbits.add(grid, n, law,
                                                            diagonals);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (distinct && used[i]) continue;
      used[i] = true;
      grid[cell] = pool[i];
      self(self, cell + 1);
      used[i] = false;
    }
  };
  rec(rec, 0);
  return orbits;
}

std::set<std::vector<long>> rep_set(const std::vector<SquareGrid>& grids) {
  std::set<std::vector<long>> out;
  for (const auto& g : grids) {
    std::vector<long> cells;
    for (const Int& v : g.cells) cells.push_back(v.get_si());
    out.insert(cells);
  }
  return out;
}

}  // namespace

TEST_SUITE("magic") {

TEST_CASE("the classic order-4 engraving grid verifies at 34") {
  auto with_diag = make_grid(4, kDurer, Law::sum, true, true);
  CHECK(verify_square(with_diag) == Int(34));
  auto without = make_grid(4, kDurer, Law::sum, false, true);
  CHECK(verify_square(without) == Int(34));

  auto perturbed = kDurer;
  perturbed[5] = 99;
  CHECK_FALSE(
      verify_square(make_grid(4, perturbed, Law::sum, true, true)).has_value());
}

TEST_CASE("alternating law evaluates plus plus minus") {
  auto ones = make_grid(3, {1, 1, 1, 1, 1, 1, 1, 1, 1}, Law::alternating,
                        true, false);
  CHECK(verify_square(ones) == Int(1));

  // Symmetric cells keep rows and columns at 1, but only left to right.
  auto skew = make_grid(3, {1, 2, 2, 2, 2, 3, 2, 3, 4}, Law::alternating,
                        false, false);
  CHECK(verify_square(skew) == Int(1));
  auto mirrored = make_grid(3, {2, 2, 1, 3, 2, 2, 4, 3, 2}, Law::alternating,
                            false, false);
  CHECK_FALSE(verify_square(mirrored).has_value());
}

TEST_CASE("tiny sum grids and malformed grids") {
  auto two = make_grid(2, {1, 2, 2, 1}, Law::sum, false, false);
  CHECK(verify_square(two) == Int(3));

  CHECK_THROWS_AS(verify_square(make_grid(2, {1, 2, 2, 1}, Law::sum, false,
                                          true)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_square(make_grid(1, {1}, Law::sum, false, false)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_square(make_grid(3, {1, 2, 3}, Law::sum, false,
                                          false)),
                  std::invalid_argument);
}

TEST_CASE("law names round trip") {
  for (Law law : {Law::sum, Law::alternating})
    CHECK(law_from_name(to_string(law)) == law);
  CHECK_FALSE(law_from_name("product").has_value());
}

TEST_CASE("order-2 distinct search is empty") {
  std::vector<Int> pool;
  for (long v = 1; v <= 8; ++v) pool.emplace_back(v);
  CHECK(search_squares(pool, 2, Law::sum, false, true, 10).empty());
  CHECK(search_squares(pool, 2, Law::sum, true, true, 10).empty());
}

TEST_CASE("order-2 reuse search matches the oracle") {
  std::vector<long> pool{1, 2, 3, 4};
  std::vector<Int> ipool(pool.begin(), pool.end());
  auto got = search_squares(ipool, 2, Law::sum, false, false, 1000);
  auto want = oracle_search(pool, 2, Law::sum, false, false);
  CHECK(rep_set(got) == want.reps);
  for (const auto& g : got) CHECK(verify_square(g).has_value());
}

TEST_CASE("order-3 search over 1..9 finds the single classic orbit") {
  std::vector<Int> pool;
  for (long v = 1; v <= 9; ++v) pool.emplace_back(v);
  auto got = search_squares(pool, 3, Law::sum, true, true, 10);
  REQUIRE(got.size() == 1);
  CHECK(verify_square(got[0]) == Int(15));

  std::vector<long> lpool{1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto want = oracle_search(lpool, 3, Law::sum, true, true);
  CHECK(rep_set(got) == want.reps);
}

TEST_CASE("order-3 search matches the oracle on a ten-value pool") {
  std::vector<long> pool{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<Int> ipool(pool.begin(), pool.end());
  for (Law law : {Law::sum, Law::alternating}) {
    auto got = search_squares(ipool, 3, law, true, true, 100000);
    auto want = oracle_search(pool, 3, law, true, true);
    CHECK(rep_set(got) == want.reps);
    for (const auto& g : got) CHECK(verify_square(g).has_value());
  }
}

TEST_CASE("pool duplicates are collapsed before the search") {
  std::vector<Int> pool;
  for (long v : {2, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29})
    pool.emplace_back(v);
  std::vector<Int> dedup;
  for (long v : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) dedup.emplace_back(v);
  auto a = search_squares(pool, 3, Law::sum, true, true, 1000);
  auto b = search_squares(dedup, 3, Law::sum, true, true, 1000);
  CHECK(rep_set(a) == rep_set(b));
}

TEST_CASE("nondistinct order-3 search matches the oracle") {
  std::vector<long> pool{1, 2, 3};
  // Raw entries may repeat; the search collapses them to three values.
  auto got = search_squares({Int(1), Int(2), Int(3), Int(1), Int(2), Int(3),
                             Int(1), Int(2), Int(3)},
                            3, Law::sum, true, false, 100000);
  auto want = oracle_search(pool, 3, Law::sum, true, false);
  CHECK(rep_set(got) == want.reps);
}

TEST_CASE("order-4 search rediscovers the engraving orbit") {
  std::vector<Int> pool;
  for (long v = 1; v <= 16; ++v) pool.emplace_back(v);
  auto got = search_squares(pool, 4, Law::sum, true, true, 100000);
  // 880 orbits of distinct 1..16 squares under the eight symmetries.
  CHECK(got.size() == 880);
  std::vector<long> durer_rep = kDurer;
  for (int t = 1; t < 8; ++t)
    durer_rep = std::min(durer_rep, oracle_transform(kDurer, 4, t));
  CHECK(rep_set(got).count(durer_rep) == 1);
  for (const auto& g : got) {
    CHECK(verify_square(g).has_value());
    auto cells = g.cells;
    std::sort(cells.begin(), cells.end());
    CHECK(cells.front() == Int(1));
    CHECK(cells.back() == Int(16));
  }

  auto first_five = search_squares(pool, 4, Law::sum, true, true, 5);
  REQUIRE(first_five.size() == 5);
  auto all_reps = rep_set(got);
  auto it = all_reps.begin();
  for (const auto& g : first_five) {
    std::vector<long> cells;
    for (const Int& v : g.cells) cells.push_back(v.get_si());
    CHECK(cells == *it++);
  }
}

TEST_CASE("order-5 reuse smoke search") {
  std::vector<Int> pool(25, Int(1));
  auto got = search_squares(pool, 5, Law::sum, true, false, 10);
  REQUIRE(got.size() == 1);
  CHECK(verify_square(got[0]) == Int(5));
}

TEST_CASE("search rejects malformed requests") {
  std::vector<Int> pool;
  for (long v = 1; v <= 25; ++v) pool.emplace_back(v);
  CHECK_THROWS_AS(search_squares(pool, 1, Law::sum, true, true, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_squares(pool, 6, Law::sum, true, true, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_squares(pool, 3, Law::sum, true, true, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_squares({Int(1), Int(2)}, 2, Law::sum, true, true, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_squares({Int(-1), Int(2), Int(3), Int(4)}, 2,
                                 Law::sum, true, true, 1),
                  std::invalid_argument);
  std::vector<Int> huge(pool.begin(), pool.end());
  huge[0] = Int("9000000000000000000");
  CHECK_THROWS_AS(search_squares(huge, 3, Law::sum, true, true, 1),
                  std::invalid_argument);
}

TEST_CASE("cube verification walks all axis lines") {
  std::vector<Int> fives(27, Int(5));
  CHECK(verify_cube(3, fives, Law::sum) == Int(15));
  CHECK(verify_cube(3, fives, Law::alternating) == Int(5));

  std::vector<Int> eight(8, Int(4));
  CHECK(verify_cube(2, eight, Law::sum) == Int(8));
  eight[3] = Int(5);
  CHECK_FALSE(verify_cube(2, eight, Law::sum).has_value());

  // Stacking a magic square keeps rows and columns but breaks pillars.
  std::vector<Int> stacked;
  for (int z = 0; z < 4; ++z)
    for (long v : kDurer) stacked.emplace_back(v);
  CHECK_FALSE(verify_cube(4, stacked, Law::sum).has_value());

  CHECK_THROWS_AS(verify_cube(1, {Int(1)}, Law::sum), std::invalid_argument);
  CHECK_THROWS_AS(verify_cube(2, fives, Law::sum), std::invalid_argument);
}

}  // TEST_SUITE
