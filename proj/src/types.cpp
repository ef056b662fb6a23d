#include "numerolab/types.hpp"

namespace numerolab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

std::optional<Int> parse_nat(std::string_view text) {
  if (!all_digits(text)) return std::nullopt;
  return Int(std::string(text), 10);
}

std::optional<Int> parse_int(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    auto mag = parse_nat(text.substr(1));
    if (!mag) return std::nullopt;
    return Int(-*mag);
  }
  return parse_nat(text);
}

std::optional<Rat> parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_nat(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::uint64_t checked_index(const Int& v, const char* what, std::uint64_t max) {
  if (v < 0 || !v.fits_ulong_p() || v.get_ui() > max)
    throw std::invalid_argument(std::string(what) + " out of supported range");
  return v.get_ui();
}

}  // namespace numerolab
