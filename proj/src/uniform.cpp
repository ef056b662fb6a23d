#include "numerolab/uniform.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>

namespace numerolab::uniform {

namespace {

constexpr std::uint64_t kTrackedStateCap = 1ull << 25;  // BFS with parents
constexpr std::uint64_t kReachStateCap = 1ull << 26;    // visited bits only
constexpr std::uint64_t kLayerBitCap = 1ull << 28;      // per-length tables

struct StateSpace {
  std::uint64_t n = 1;
  unsigned base = 10;
  std::vector<unsigned> digits;  // ascending
  bool complete = true;
  std::uint64_t mask_count = 1;
  std::uint64_t full_mask = 0;
  std::uint64_t state_count = 1;

  std::uint64_t index(std::uint64_t rem, std::uint64_t mask) const {
    return rem * mask_count + mask;
  }
  std::uint64_t step_rem(std::uint64_t rem, unsigned d) const {
    return (rem * base + d) % n;
  }
  std::uint64_t step_mask(std::uint64_t mask, std::size_t digit_pos) const {
    return complete ? (mask | (1ull << digit_pos)) : 0;
  }
  bool accepting(std::uint64_t rem, std::uint64_t mask) const {
    return rem == 0 && mask == full_mask;
  }
};

StateSpace make_space(const UniformQuery& q, std::uint64_t state_cap) {
  if (q.base < 2 || q.base > 256)
    throw std::invalid_argument("uniform: base must be in 2..256");
  if (q.digits.empty())
    throw std::invalid_argument("uniform: digit set must be nonempty");
  StateSpace sp;
  sp.n = checked_index(q.n, "uniform modulus", 1ull << 55);
  if (sp.n < 1) throw std::invalid_argument("uniform: n must be >= 1");
  sp.base = q.base;
  sp.digits = q.digits;
  std::sort(sp.digits.begin(), sp.digits.end());
  if (std::adjacent_find(sp.digits.begin(), sp.digits.end()) !=
      sp.digits.end())
    throw std::invalid_argument("uniform: digits must be distinct");
  if (sp.digits.back() >= sp.base)
    throw std::invalid_argument("uniform: digits must be below the base");
  sp.complete = q.complete;
  if (sp.complete) {
    if (sp.digits.size() > 20)
      throw std::invalid_argument("uniform: too many digits for complete mode");
    sp.mask_count = 1ull << sp.digits.size();
    sp.full_mask = sp.mask_count - 1;
  }
  sp.state_count = sp.n * sp.mask_count;
  if (sp.state_count > state_cap)
    throw std::invalid_argument("uniform: state space too large");
  return sp;
}

Int digits_to_value(const std::vector<unsigned>& word, unsigned base) {
  Int v = 0;
  for (unsigned d : word) v = v * base + d;
  return v;
}

constexpr std::uint32_t kNoParent = 0xffffffffu;

}  // namespace

std::optional<Int> smallest_member(const UniformQuery& q) {
  StateSpace sp = make_space(q, kTrackedStateCap);
  std::vector<std::uint32_t> parent(sp.state_count, kNoParent);
  std::vector<std::uint8_t> parent_digit(sp.state_count, 0);
  std::vector<bool> visited(sp.state_count, false);
  std::deque<std::uint64_t> queue;

  auto claim = [&](std::uint64_t state, std::uint32_t from, unsigned digit) {
    if (visited[state]) return;
    visited[state] = true;
    parent[state] = from;
    parent_digit[state] = static_cast<std::uint8_t>(digit);
    queue.push_back(state);
  };

  for (std::size_t i = 0; i < sp.digits.size(); ++i) {
    unsigned d = sp.digits[i];
    if (d == 0) continue;  // leading digit must be nonzero
    claim(sp.index(d % sp.n, sp.step_mask(0, i)), kNoParent, d);
  }

  std::uint64_t accept = sp.index(0, sp.full_mask);
  while (!queue.empty() && !visited[accept]) {
    std::uint64_t state = queue.front();
    queue.pop_front();
    std::uint64_t rem = state / sp.mask_count;
    std::uint64_t mask = state % sp.mask_count;
    for (std::size_t i = 0; i < sp.digits.size(); ++i) {
      unsigned d = sp.digits[i];
      claim(sp.index(sp.step_rem(rem, d), sp.step_mask(mask, i)),
            static_cast<std::uint32_t>(state), d);
    }
  }
  if (!visited[accept]) return std::nullopt;

  std::vector<unsigned> word;
  std::uint64_t state = accept;
  for (;;) {
    word.push_back(parent_digit[state]);
    if (parent[state] == kNoParent) break;
    state = parent[state];
  }
  std::reverse(word.begin(), word.end());
  return digits_to_value(word, sp.base);
}

bool is_empty(const UniformQuery& q) {
  StateSpace sp = make_space(q, kReachStateCap);
  std::vector<bool> visited(sp.state_count, false);
  std::vector<std::uint64_t> stack;

  auto claim = [&](std::uint64_t state) {
    if (visited[state]) return;
    visited[state] = true;
    stack.push_back(state);
  };

  for (std::size_t i = 0; i < sp.digits.size(); ++i) {
    unsigned d = sp.digits[i];
    if (d == 0) continue;
    claim(sp.index(d % sp.n, sp.step_mask(0, i)));
  }

  std::uint64_t accept = sp.index(0, sp.full_mask);
  while (!stack.empty()) {
    if (visited[accept]) return false;
    std::uint64_t state = stack.back();
    stack.pop_back();
    std::uint64_t rem = state / sp.mask_count;
    std::uint64_t mask = state % sp.mask_count;
    for (std::size_t i = 0; i < sp.digits.size(); ++i)
      claim(sp.index(sp.step_rem(rem, sp.digits[i]),
                     sp.step_mask(mask, i)));
  }
  return !visited[accept];
}

std::vector<Int> members(const UniformQuery& q, std::size_t count,
                         std::uint64_t max_len) {
  StateSpace sp = make_space(q, kTrackedStateCap);
  std::vector<Int> out;
  if (count == 0 || max_len == 0) return out;
  if ((max_len + 1) * sp.state_count > kLayerBitCap)
    throw std::invalid_argument("uniform: members request too large");

  // reach[j][s]: an accepting state lies exactly j digits ahead of s.
  std::vector<std::vector<bool>> reach(max_len + 1,
                                       std::vector<bool>(sp.state_count));
  reach[0][sp.index(0, sp.full_mask)] = true;
  for (std::uint64_t j = 1; j <= max_len; ++j) {
    for (std::uint64_t rem = 0; rem < sp.n; ++rem)
      for (std::uint64_t mask = 0; mask < sp.mask_count; ++mask) {
        bool ok = false;
        for (std::size_t i = 0; i < sp.digits.size() && !ok; ++i)
          ok = reach[j - 1][sp.index(sp.step_rem(rem, sp.digits[i]),
                                     sp.step_mask(mask, i))];
        reach[j][sp.index(rem, mask)] = ok;
      }
  }

  std::vector<unsigned> word;
  for (std::uint64_t len = 1; len <= max_len && out.size() < count; ++len) {
    // Walk length-len members in lexicographic (= numeric) order.
    struct Frame {
      std::uint64_t rem;
      std::uint64_t mask;
      std::size_t next_digit;
    };
    std::vector<Frame> stack;
    word.clear();
    stack.push_back(Frame{0, 0, 0});
    while (!stack.empty() && out.size() < count) {
      Frame& f = stack.back();
      if (word.size() == len) {
        out.push_back(digits_to_value(word, sp.base));
        word.pop_back();
        stack.pop_back();
        continue;
      }
      bool descended = false;
      while (f.next_digit < sp.digits.size()) {
        std::size_t i = f.next_digit++;
        unsigned d = sp.digits[i];
        if (word.empty() && d == 0) continue;
        std::uint64_t rem = sp.step_rem(f.rem, d);
        std::uint64_t mask = sp.step_mask(f.mask, i);
        if (!reach[len - word.size() - 1][sp.index(rem, mask)]) continue;
        word.push_back(d);
        stack.push_back(Frame{rem, mask, 0});
        descended = true;
        break;
      }
      if (!descended && word.size() < len) {
        if (!word.empty()) word.pop_back();
        stack.pop_back();
      }
    }
  }
  return out;
}

}  // namespace numerolab::uniform
