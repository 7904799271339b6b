#include "tribasis/rational.hpp"

namespace tribasis {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

} // namespace

std::optional<Rat> parse_rat(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int p{std::string(num)}, q{std::string(den)};
  if (q == 0) return std::nullopt;
  Rat r{p, q};
  if (neg) r = -r;
  return r;
}

std::string rat_str(const Rat& q) { return q.str(); }

Int rat_ceil(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d; // truncates toward zero
  if (quot * d < n) ++quot;
  return quot;
}

double rat_double(const Rat& q) { return q.convert_to<double>(); }

} // namespace tribasis
