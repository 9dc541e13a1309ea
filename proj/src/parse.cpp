#include "mks/parse.hpp"

#include <cctype>

namespace mks {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

mpz_class parse_integer(const std::string& s, const std::string& full) {
  if (s.empty()) throw std::invalid_argument("malformed fraction '" + full + "'");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed fraction '" + full + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed fraction '" + full + "'");
  mpz_class v(s[0] == '+' ? s.substr(1) : s);  // mpz_set_str takes no leading '+'
  return v;
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("malformed fraction ''");
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Fraction(parse_integer(s, text));
  mpz_class num = parse_integer(strip(s.substr(0, slash)), text);
  mpz_class den = parse_integer(strip(s.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Fraction(num, den);
}

TangleList parse_knot(const std::string& text) {
  std::string s = strip(text);
  if (s.size() >= 2 && (s[0] == 'K' || s[0] == 'k')) {
    std::string rest = strip(s.substr(1));
    if (rest.empty() || rest.front() != '(' || rest.back() != ')')
      throw std::invalid_argument("malformed knot '" + text + "': expected K(...)");
    s = rest.substr(1, rest.size() - 2);
  }
  if (strip(s).empty()) throw std::invalid_argument("empty knot specification");
  std::vector<Fraction> tangles;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string piece = comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    tangles.push_back(parse_fraction(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return validated_tangle_list(std::move(tangles));
}

std::string format_knot(const TangleList& t) { return t.str(); }

}  // namespace mks
