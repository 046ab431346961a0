#include "ter/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "ter/error.hpp"

namespace ter {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational make_rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + raw + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, int exponent) {
  Rational b = base;
  if (exponent < 0) {
    b = 1 / b;
    exponent = -exponent;
  }
  Rational r = 1;
  while (exponent > 0) {
    if (exponent & 1) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

}  // namespace ter
