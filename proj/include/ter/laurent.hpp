#pragma once

#include <map>
#include <string>

#include "ter/rational.hpp"

namespace ter {

// Laurent polynomial in the single parameter a.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT
  LaurentPoly(const Rational& value);  // NOLINT
  static LaurentPoly monomial(int exponent, const Rational& coeff);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int valuation() const;  // requires nonzero
  int top_degree() const;  // requires nonzero
  Rational coefficient(int exponent) const;

  LaurentPoly shifted(int k) const;  // multiply by a^k
  Rational evaluate(const Rational& a) const;  // a must be nonzero if negative powers occur

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  std::string to_string(const std::string& parameter = "a") const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Rational> coeffs_;
  void add_term(int e, const Rational& c);
};

LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y);
LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y);
LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace ter
