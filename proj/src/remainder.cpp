#include "numerolab/remainder.hpp"

#include <stdexcept>

namespace numerolab::remainder {

namespace {

// Remainder values carry ~log2(q) bits per step, so cap the chain length.
constexpr unsigned long kStepCap = 10'000;
constexpr unsigned long kScanCap = 1'000'000'000;

void check_params(unsigned long q, unsigned long steps) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (steps > kStepCap) throw std::invalid_argument("too many steps");
}

}  // namespace

ForwardResult forward(const Rat& start, unsigned long q, const Rat& extra,
                      unsigned long steps) {
  check_params(q, steps);
  Rat shrink(q - 1);
  shrink /= q;
  ForwardResult out;
  out.remainders.reserve(steps);
  Rat r = start;
  for (unsigned long k = 0; k < steps; ++k) {
    r = r * shrink - extra;
    if (sgn(r) < 0) out.went_negative = true;
    out.remainders.push_back(r);
  }
  return out;
}

Rat backward(const Rat& last, unsigned long q, const Rat& extra,
             unsigned long steps) {
  check_params(q, steps);
  Rat grow(q);
  grow /= (q - 1);
  Rat r = last;
  for (unsigned long k = 0; k < steps; ++k) r = (r + extra) * grow;
  return r;
}

IntegralInstance minimal_integral(unsigned long q, unsigned long extra,
                                  unsigned long steps, bool allow_zero,
                                  unsigned long cap) {
  check_params(q, steps);
  if (steps < 1) throw std::invalid_argument("need at least one step");
  if (cap < 1 || cap > kScanCap)
    throw std::invalid_argument("cap out of range");
  // The first remainder is below start, so an oversized extra exhausts.
  unsigned long min_rem = allow_zero ? 0 : 1;
  std::vector<unsigned long> chain(steps);
  for (unsigned long n = 1; extra <= cap && n <= cap; ++n) {
    unsigned long r = n;
    bool ok = true;
    for (unsigned long k = 0; k < steps; ++k) {
      // Integral removal needs q | r; the removal itself must be >= 1.
      if (r % q != 0) {
        ok = false;
        break;
      }
      unsigned long removal = r / q + extra;
      if (removal < 1 || r < removal + min_rem) {
        ok = false;
        break;
      }
      r -= removal;
      chain[k] = r;
    }
    if (ok) {
      IntegralInstance found;
      found.start = static_cast<long>(n);
      for (unsigned long v : chain)
        found.remainders.emplace_back(static_cast<long>(v));
      return found;
    }
  }
  throw std::runtime_error("exhausted: no start at or below cap qualifies");
}

}  // namespace numerolab::remainder
