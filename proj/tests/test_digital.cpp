#include "doctest.h"
#include "numerolab/digital.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace {

using numerolab::Int;
using namespace numerolab::digital;
using numerolab::kernel::SeqSpec;
using numerolab::kernel::StreamName;

std::vector<Int> group_values(const Partition& p) {
  std::vector<Int> out;
  for (const auto& g : p.groups) out.push_back(word_value(g));
  return out;
}

std::string joined(const Partition& p) {
  std::string text;
  for (const auto& g : p.groups) text += to_string(g);
  return text;
}

// Oracle predicates recompute roots and retest by multiplication, and
// certify primes by trial division only.
bool oracle_square(const Int& v) {
  Int s;
  mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
  return s * s == v;
}

bool oracle_cube(const Int& v) {
  Int r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
  return r * r * r == v;
}

bool oracle_prime(const Int& v) {
  if (v < 2) return false;
  for (Int f = 2; f * f <= v; ++f)
    if (v % f == 0) return false;
  return true;
}

bool oracle_group_ok(const std::string& digits, PartPredicate pred) {
  if (digits[0] == '0')
    return digits.size() == 1 && pred != PartPredicate::prime;
  Int v(digits);
  switch (pred) {
    case PartPredicate::square: return oracle_square(v);
    case PartPredicate::cube: return oracle_cube(v);
    case PartPredicate::prime: return oracle_prime(v);
  }
  return false;
}

struct OracleBest {
  bool exists = false;
  std::vector<std::string> groups;
};

// Exhaustive scan over all 2^(d-1) cut masks; keeps the fewest-group
// partition with lexicographically earliest cut positions.
OracleBest oracle_partition(const Int& n, PartPredicate pred) {
  std::string digits = numerolab::to_string(n);
  std::size_t d = digits.size();
  OracleBest best;
  if (d < 2) return best;
  for (unsigned long mask = 1; mask < (1ul << (d - 1)); ++mask) {
    std::vector<std::string> groups;
    std::size_t start = 0;
    for (std::size_t i = 0; i < d; ++i) {
      bool cut = i + 1 == d || (mask >> i) & 1;
      if (!cut) continue;
      groups.push_back(digits.substr(start, i + 1 - start));
      start = i + 1;
    }
    bool ok = true;
    for (const auto& g : groups)
      if (!oracle_group_ok(g, pred)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (!best.exists || groups.size() < best.groups.size()) {
      best.exists = true;
      best.groups = groups;
    }
    // Ascending masks visit earlier first cuts last, so strictly fewer
    // groups is the only replacement rule; ties need an explicit check.
    else if (groups.size() == best.groups.size()) {
      std::vector<std::size_t> a, b;
      std::size_t pos = 0;
      for (const auto& g : groups) a.push_back(pos += g.size());
      pos = 0;
      for (const auto& g : best.groups) b.push_back(pos += g.size());
      if (a < b) best.groups = groups;
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("digital") {

TEST_CASE("digit words round trip") {
  DigitWord w = to_word(Int(10648));
  CHECK(w.digits == std::vector<unsigned char>{1, 0, 6, 4, 8});
  CHECK(word_value(w) == Int(10648));
  CHECK(to_string(w) == "10648");
  CHECK(to_word(Int(0)).digits == std::vector<unsigned char>{0});
  CHECK(word_value(to_word(Int(0))) == Int(0));
  CHECK_THROWS_AS(to_word(Int(-1)), std::invalid_argument);
  CHECK_THROWS_AS(word_value(DigitWord{}), std::invalid_argument);
}

TEST_CASE("predicate and relation names round trip") {
  for (auto p : {PartPredicate::square, PartPredicate::cube,
                 PartPredicate::prime})
    CHECK(predicate_from_name(to_string(p)) == p);
  CHECK_FALSE(predicate_from_name("odd").has_value());
  for (auto r : {SplitRelation::double_value, SplitRelation::lucky_index})
    CHECK(relation_from_name(to_string(r)) == r);
  CHECK_FALSE(relation_from_name("triple").has_value());
}

TEST_CASE("all-digit filters reproduce the classic lists") {
  auto sq = full_digital_filter(SeqSpec{StreamName::squares, 1}, 22,
                                {0, 1, 4, 9});
  CHECK(sq == std::vector<Int>{Int(0), Int(1), Int(4), Int(9), Int(49),
                               Int(100), Int(144), Int(400), Int(441)});

  auto cu = full_digital_filter(SeqSpec{StreamName::cubes, 1}, 21, {0, 1, 8});
  CHECK(cu == std::vector<Int>{Int(0), Int(1), Int(8), Int(1000), Int(8000)});

  auto pr = full_digital_filter(SeqSpec{StreamName::primes, 1}, 21,
                                {2, 3, 5, 7});
  CHECK(pr == std::vector<Int>{Int(2), Int(3), Int(5), Int(7), Int(23),
                               Int(37), Int(53), Int(73)});
  CHECK(std::find(pr.begin(), pr.end(), Int(29)) == pr.end());
}

TEST_CASE("filter output is an ordered stream subset") {
  auto out = full_digital_filter(SeqSpec{StreamName::naturals, 1}, 200,
                                 {1, 2, 3});
  auto all = numerolab::kernel::stream(SeqSpec{StreamName::naturals, 1}, 200);
  CHECK(std::is_sorted(out.begin(), out.end()));
  for (const Int& v : out)
    CHECK(std::find(all.begin(), all.end(), v) != all.end());
  CHECK(out.front() == Int(1));
  CHECK(std::find(out.begin(), out.end(), Int(123)) != out.end());
  CHECK(std::find(out.begin(), out.end(), Int(4)) == out.end());
}

TEST_CASE("filter rejects malformed requests") {
  CHECK_THROWS_AS(
      full_digital_filter(SeqSpec{StreamName::naturals, 1}, 0, {1}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      full_digital_filter(SeqSpec{StreamName::naturals, 1}, 5, {10}),
      std::invalid_argument);
}

TEST_CASE("partition checker matches the worked examples") {
  auto sq = partial_digital_check(Int(169), PartPredicate::square);
  REQUIRE(sq.has_value());
  CHECK(group_values(*sq) == std::vector<Int>{Int(16), Int(9)});

  auto cu = partial_digital_check(Int(10648), PartPredicate::cube);
  REQUIRE(cu.has_value());
  CHECK(group_values(*cu) ==
        std::vector<Int>{Int(1), Int(0), Int(64), Int(8)});

  auto pr = partial_digital_check(Int(113), PartPredicate::prime);
  REQUIRE(pr.has_value());
  CHECK(group_values(*pr) == std::vector<Int>{Int(11), Int(3)});

  CHECK_FALSE(partial_digital_check(Int(10), PartPredicate::prime).has_value());
  CHECK_FALSE(partial_digital_check(Int(7), PartPredicate::prime).has_value());
  CHECK_THROWS_AS(partial_digital_check(Int(0), PartPredicate::prime),
                  std::invalid_argument);
}

TEST_CASE("classic partial-digital members partition") {
  for (long v : {49, 100, 144, 169, 361, 400, 441}) {
    auto p = partial_digital_check(Int(v), PartPredicate::square);
    REQUIRE_MESSAGE(p.has_value(), "square-partial member " << v);
    CHECK(joined(*p) == numerolab::to_string(Int(v)));
  }
  for (long v : {1000, 8000, 10648, 27000}) {
    auto p = partial_digital_check(Int(v), PartPredicate::cube);
    REQUIRE_MESSAGE(p.has_value(), "cube-partial member " << v);
    CHECK(joined(*p) == numerolab::to_string(Int(v)));
  }
  for (long v : {23, 37, 53, 73, 113, 137, 173, 193, 197}) {
    auto p = partial_digital_check(Int(v), PartPredicate::prime);
    REQUIRE_MESSAGE(p.has_value(), "prime-partial member " << v);
    CHECK(joined(*p) == numerolab::to_string(Int(v)));
  }
}

TEST_CASE("partition checker agrees with the mask oracle") {
  for (auto pred : {PartPredicate::square, PartPredicate::cube,
                    PartPredicate::prime}) {
    for (long n = 1; n <= 20000; ++n) {
      auto got = partial_digital_check(Int(n), pred);
      OracleBest want = oracle_partition(Int(n), pred);
      REQUIRE_MESSAGE(got.has_value() == want.exists,
                      "n=" << n << " pred=" << to_string(pred));
      if (!want.exists) continue;
      std::vector<std::string> groups;
      for (const auto& g : got->groups) groups.push_back(to_string(g));
      CHECK_MESSAGE(groups == want.groups,
                    "n=" << n << " pred=" << to_string(pred));
    }
  }
}

TEST_CASE("partition checker matches the oracle on wide inputs") {
  // Fixed LCG keeps the corpus identical run to run.
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  for (int i = 0; i < 60; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    Int n = Int(state >> 16) % Int("900000000000") + Int("100000000000");
    for (auto pred : {PartPredicate::square, PartPredicate::cube}) {
      auto got = partial_digital_check(n, pred);
      OracleBest want = oracle_partition(n, pred);
      REQUIRE(got.has_value() == want.exists);
      if (!want.exists) continue;
      std::vector<std::string> groups;
      for (const auto& g : got->groups) groups.push_back(to_string(g));
      CHECK(groups == want.groups);
    }
  }
}

TEST_CASE("two-group splits follow the declared relation") {
  auto d = split_check(Int(714), SplitRelation::double_value);
  REQUIRE(d.has_value());
  CHECK(d->g1 == Int(7));
  CHECK(d->g2 == Int(14));

  CHECK(split_check(Int(12), SplitRelation::double_value)->g2 == Int(2));
  CHECK(split_check(Int(510), SplitRelation::double_value)->g1 == Int(5));
  CHECK(split_check(Int(1020), SplitRelation::double_value)->g1 == Int(10));
  CHECK_FALSE(split_check(Int(11), SplitRelation::double_value).has_value());
  CHECK_FALSE(split_check(Int(100), SplitRelation::double_value).has_value());
  CHECK_FALSE(split_check(Int(120), SplitRelation::double_value).has_value());

  auto l = split_check(Int(37), SplitRelation::lucky_index);
  REQUIRE(l.has_value());
  CHECK(l->g1 == Int(3));
  CHECK(l->g2 == Int(7));
  CHECK(split_check(Int(49), SplitRelation::lucky_index)->g2 == Int(9));

  CHECK_THROWS_AS(split_check(Int(9), SplitRelation::double_value),
                  std::invalid_argument);
}

TEST_CASE("even-digital subsequence falls out of the double split") {
  std::vector<Int> hits;
  for (const Int& n :
       numerolab::kernel::stream(SeqSpec{StreamName::evens, 1}, 600)) {
    if (n < 10) continue;
    if (split_check(n, SplitRelation::double_value).has_value())
      hits.push_back(n);
    if (hits.size() == 10) break;
  }
  CHECK(hits == std::vector<Int>{Int(12), Int(24), Int(36), Int(48), Int(510),
                                 Int(612), Int(714), Int(816), Int(918),
                                 Int(1020)});
}

TEST_CASE("lucky-digital hits below 1000 are exactly the indexed pairs") {
  std::vector<Int> hits;
  for (long n = 10; n < 1000; ++n)
    if (split_check(Int(n), SplitRelation::lucky_index).has_value())
      hits.push_back(Int(n));
  CHECK(hits == std::vector<Int>{Int(11), Int(23), Int(37), Int(49), Int(513),
                                 Int(615), Int(721), Int(825), Int(931)});
}

TEST_CASE("lucky splits beyond the index cap are rejected loudly") {
  CHECK_THROWS_AS(split_check(Int("50001100001"), SplitRelation::lucky_index),
                  std::invalid_argument);
}

TEST_CASE("three-group sums pick the earliest cuts") {
  auto t = triad_sum_check(Int(123));
  REQUIRE(t.has_value());
  CHECK(t->x == Int(1));
  CHECK(t->y == Int(2));
  CHECK(t->z == Int(3));

  auto u = triad_sum_check(Int(178));
  REQUIRE(u.has_value());
  CHECK(u->x + u->y == u->z);

  auto v = triad_sum_check(Int(11213));
  REQUIRE(v.has_value());
  CHECK(v->x == Int(1));
  CHECK(v->y == Int(12));
  CHECK(v->z == Int(13));

  CHECK_FALSE(triad_sum_check(Int(10648)).has_value());
  CHECK_FALSE(triad_sum_check(Int(101)).has_value());
  CHECK_FALSE(triad_sum_check(Int(1023)).has_value());
  CHECK_THROWS_AS(triad_sum_check(Int(29)), std::invalid_argument);
}

TEST_CASE("three-group-sum members of the lucas stream below 10^12") {
  // 123 = 1|2|3 is the classic member; 20633239 = 206|33|239 also passes.
  std::vector<Int> hits;
  Int bound("1000000000000");
  for (const Int& n :
       numerolab::kernel::stream(SeqSpec{StreamName::lucas, 1}, 60)) {
    if (n > bound) break;
    if (n < 100) continue;
    if (triad_sum_check(n).has_value()) hits.push_back(n);
  }
  CHECK(hits == std::vector<Int>{Int(123), Int(20633239)});
}

}  // TEST_SUITE
