#include "lagnet/rational.hpp"

namespace lagnet {

namespace {

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = (s[0] == '-');
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("sign without digits in rational literal");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad character in rational literal: '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Int(-v) : v;
}

}  // namespace

Rat rat_parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  return Rat(num, den);
}

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

}  // namespace lagnet
