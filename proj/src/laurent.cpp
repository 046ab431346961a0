#include "ter/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ter {

LaurentPoly::LaurentPoly(long value) : LaurentPoly(Rational(value)) {}

LaurentPoly::LaurentPoly(const Rational& value) {
  if (!ter::is_zero(value)) coeffs_[0] = value;
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int e, const Rational& c) {
  if (ter::is_zero(c)) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (ter::is_zero(it->second)) coeffs_.erase(it);
  }
}

int LaurentPoly::valuation() const {
  if (coeffs_.empty()) throw std::logic_error("valuation of zero");
  return coeffs_.begin()->first;
}

int LaurentPoly::top_degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of zero");
  return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + k] = c;
  return p;
}

Rational LaurentPoly::evaluate(const Rational& a) const {
  Rational sum = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e == 0) sum += c;
    else if (ter::is_zero(a) && e < 0) throw std::domain_error("negative power at zero");
    else sum += c * ter::pow(a, e);
  }
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.coeffs_) c = -c;
  return p;
}

std::string LaurentPoly::to_string(const std::string& parameter) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    const int e = it->first;
    std::string mono = e == 0 ? "" : (e == 1 ? parameter : parameter + "^" + std::to_string(e));
    if (mono.empty()) os << ter::to_string(c);
    else if (c == 1) os << mono;
    else os << ter::to_string(c) << "*" << mono;
    first = false;
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly p;
  for (const auto& [e1, c1] : x.coeffs())
    for (const auto& [e2, c2] : y.coeffs()) p += LaurentPoly::monomial(e1 + e2, c1 * c2);
  return p;
}

}  // namespace ter
