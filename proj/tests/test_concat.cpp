#include "doctest.h"
#include "numerolab/concat.hpp"

#include <string>
#include <vector>

namespace {

using numerolab::Int;
using namespace numerolab::concat;
using numerolab::kernel::SeqSpec;
using numerolab::kernel::StreamName;

std::vector<Int> term_values(StreamName name, std::uint64_t k) {
  std::vector<Int> out;
  for (const auto& t : concat_terms(SeqSpec{name, 1}, k)) out.push_back(t.value);
  return out;
}

}  // namespace

TEST_SUITE("concat") {

TEST_CASE("frozen prefixes for the classic streams") {
  CHECK(term_values(StreamName::odds, 4) ==
        std::vector<Int>{Int(1), Int(13), Int(135), Int(1357)});
  CHECK(term_values(StreamName::evens, 8) ==
        std::vector<Int>{Int(2), Int(24), Int(246), Int(2468), Int(246810),
                         Int(24681012), Int("2468101214"),
                         Int("246810121416")});
  CHECK(term_values(StreamName::primes, 8) ==
        std::vector<Int>{Int(2), Int(23), Int(235), Int(2357), Int(235711),
                         Int(23571113), Int("2357111317"),
                         Int("235711131719")});
  CHECK(term_values(StreamName::fibonacci, 7) ==
        std::vector<Int>{Int(1), Int(11), Int(112), Int(1123), Int(11235),
                         Int(112358), Int(11235813)});
  CHECK(term_values(StreamName::odds, 9).back() == Int("1357911131517"));
}

TEST_CASE("terms follow the shift-and-add recurrence") {
  for (auto name : {StreamName::odds, StreamName::primes, StreamName::lucky,
                    StreamName::smarandache}) {
    auto elements = numerolab::kernel::stream(SeqSpec{name, 1}, 50);
    auto terms = concat_terms(SeqSpec{name, 1}, 50);
    for (std::size_t i = 1; i < terms.size(); ++i) {
      std::string digits = numerolab::to_string(elements[i]);
      Int shift;
      mpz_ui_pow_ui(shift.get_mpz_t(), 10, digits.size());
      CHECK(terms[i].value == terms[i - 1].value * shift + elements[i]);
      CHECK(terms[i].digit_length ==
            terms[i - 1].digit_length + digits.size());
    }
  }
}

TEST_CASE("decimal rendering reconstructs the element list") {
  for (auto name :
       {StreamName::naturals, StreamName::odds, StreamName::evens,
        StreamName::primes, StreamName::fibonacci, StreamName::lucas,
        StreamName::triangular, StreamName::lucky, StreamName::smarandache}) {
    auto elements = numerolab::kernel::stream(SeqSpec{name, 1}, 200);
    auto terms = concat_terms(SeqSpec{name, 1}, 200);
    std::string expected;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      expected += numerolab::to_string(elements[i]);
      CHECK(numerolab::to_string(terms[i].value) == expected);
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
      CHECK(terms[i].value > terms[i - 1].value);
      CHECK(terms[i].digit_length > terms[i - 1].digit_length);
    }
  }
}

TEST_CASE("prime screening of the odd and prime streams") {
  auto odd = screen(SeqSpec{StreamName::odds, 1}, 6, ScreenTest::prime);
  REQUIRE(odd.size() == 6);
  for (const auto& v : odd) {
    CHECK(v.hit == (v.index == 2));
    CHECK(v.proved);
  }

  auto pr = screen(SeqSpec{StreamName::primes, 1}, 5, ScreenTest::prime);
  REQUIRE(pr.size() == 5);
  for (const auto& v : pr)
    CHECK(v.hit == (v.index == 1 || v.index == 2 || v.index == 4));

  // Composite witnesses behind the expected misses.
  CHECK(Int(1357) == Int(23) * 59);
  CHECK(Int(13579) == Int(37) * 367);
  CHECK(Int(1357911) % 3 == 0);
  CHECK(Int(235) == Int(5) * 47);
  CHECK(Int(235711) == Int(7) * 33673);
}

TEST_CASE("even-power screening of the even stream finds nothing") {
  auto verdicts =
      screen(SeqSpec{StreamName::evens, 1}, 8, ScreenTest::even_power);
  for (const auto& v : verdicts) CHECK_FALSE(v.hit);
}

TEST_CASE("screen verdicts agree with the kernel predicates") {
  for (auto test :
       {ScreenTest::prime, ScreenTest::even_power, ScreenTest::perfect_power}) {
    auto verdicts = screen(SeqSpec{StreamName::triangular, 1}, 12, test);
    for (const auto& v : verdicts) {
      bool expected = false;
      switch (test) {
        case ScreenTest::prime:
          expected = numerolab::kernel::is_prime(v.value).prime;
          break;
        case ScreenTest::even_power:
          expected = numerolab::kernel::is_perfect_square(v.value);
          break;
        case ScreenTest::perfect_power:
          expected = v.value >= 2 &&
                     numerolab::kernel::perfect_power(v.value).has_value();
          break;
      }
      CHECK(v.hit == expected);
    }
  }
}

TEST_CASE("closure of odd and even streams is total") {
  for (auto name : {StreamName::odds, StreamName::evens}) {
    auto verdicts = closure_check(SeqSpec{name, 1}, 10);
    for (const auto& v : verdicts) CHECK(v.member);
  }
}

TEST_CASE("fibonacci closure fails from the second term") {
  auto verdicts = closure_check(SeqSpec{StreamName::fibonacci, 1}, 3);
  REQUIRE(verdicts.size() == 3);
  CHECK(verdicts[0].member);
  CHECK_FALSE(verdicts[1].member);  // 11
  CHECK_FALSE(verdicts[2].member);  // 112
}

TEST_CASE("prime closure matches per-term primality") {
  auto verdicts = closure_check(SeqSpec{StreamName::primes, 1}, 6);
  std::vector<bool> expected = {true, true, false, true, false, false};
  REQUIRE(verdicts.size() == expected.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i)
    CHECK(verdicts[i].member == expected[i]);
}

TEST_CASE("closure rejects streams without membership") {
  CHECK_THROWS_AS(closure_check(SeqSpec{StreamName::smarandache, 1}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(closure_check(SeqSpec{StreamName::lucky, 1}, 3),
                  std::invalid_argument);
}

TEST_CASE("screen test names round trip") {
  for (auto test :
       {ScreenTest::prime, ScreenTest::even_power, ScreenTest::perfect_power}) {
    auto parsed = screen_test_from_name(to_string(test));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == test);
  }
  CHECK_FALSE(screen_test_from_name("other").has_value());
}

}  // TEST_SUITE
