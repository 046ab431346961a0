#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ter/rational.hpp"

namespace ter {

using Exponent = std::vector<int>;
using VarContext = std::shared_ptr<const std::vector<std::string>>;

VarContext make_context(std::vector<std::string> names);
bool same_context(const VarContext& a, const VarContext& b);

// Graded reverse lexicographic comparison: negative, zero or positive.
int grevlex_compare(const Exponent& a, const Exponent& b);
int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);

struct Term {
  Exponent exp;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over Q. Terms are kept sorted by decreasing grevlex order.
// A polynomial without a context is a constant and combines with any context.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long value);  // NOLINT: constants convert implicitly
  MultiPoly(const Rational& value);  // NOLINT
  static MultiPoly constant(const Rational& value, VarContext ctx = nullptr);
  static MultiPoly variable(const VarContext& ctx, std::size_t index);
  static MultiPoly variable(const VarContext& ctx, const std::string& name);
  static MultiPoly monomial(const VarContext& ctx, Exponent exp, const Rational& coeff);
  static MultiPoly from_terms(const VarContext& ctx, std::vector<Term> terms);

  const VarContext& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading() const { return terms_.front(); }
  Rational constant_term() const;

  MultiPoly with_context(const VarContext& ctx) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_term(const Exponent& e, const Rational& c) const;
  // this - c * x^e * g
  MultiPoly minus_term_times(const Exponent& e, const Rational& c, const MultiPoly& g) const;
  MultiPoly monic() const;
  // Sign-normalized with the leading coefficient positive.
  MultiPoly sign_normalized() const;
  MultiPoly pow(unsigned n) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  MultiPoly substitute(const std::vector<MultiPoly>& images, const VarContext& target) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  VarContext ctx_;
  std::vector<Term> terms_;
  void normalize();
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

// Parses the canonical text form. Every identifier must be a variable of ctx.
MultiPoly parse_poly(const std::string& text, const VarContext& ctx);

// Determinant of a square matrix of polynomials (subset-memoized Laplace expansion).
MultiPoly det(const std::vector<std::vector<MultiPoly>>& m);

}  // namespace ter
