#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ter/error.hpp"
#include "ter/laurent.hpp"
#include "ter/multipoly.hpp"
#include "ter/rational.hpp"

namespace ter {

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

// Basis monomial t_i^j of the maximal ideal, or the constant 1 (branch 0).
struct Monomial {
  int branch = 0;
  int exponent = 0;

  static Monomial constant() { return {}; }
  bool is_constant() const { return branch == 0; }
  std::string name() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Accepts "1", "t<i>^<j>", "t<i>" and, for one branch, "t^<j>" / "t".
Monomial parse_monomial(const std::string& text);

class ConductanceVector {
 public:
  explicit ConductanceVector(std::vector<int> c);

  const std::vector<int>& values() const { return c_; }
  std::size_t branches() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }  // 0-based
  int conductance(int branch) const { return c_[static_cast<std::size_t>(branch - 1)]; }  // 1-based
  int total() const;
  std::size_t ideal_rank() const { return offsets_.back(); }
  std::size_t ambient_rank() const { return ideal_rank() + 1; }

  bool valid(const Monomial& mono) const;
  // Position of a non-constant monomial in the canonical ideal basis.
  std::size_t index(const Monomial& mono) const;
  Monomial monomial(std::size_t index) const;
  std::vector<Monomial> ideal_basis() const;

  // Conductances of the listed 0-based branches, in the given order.
  ConductanceVector restrict_to(const std::vector<std::size_t>& branches) const;
  bool componentwise_leq(const ConductanceVector& other) const;

  std::string to_string() const;

  friend bool operator==(const ConductanceVector& a, const ConductanceVector& b) { return a.c_ == b.c_; }

 private:
  std::vector<int> c_;
  std::vector<std::size_t> offsets_;  // offsets_[i] = index of t_{i+1}^1
};

ConductanceVector parse_conductances(const std::string& text);

struct Grading {
  std::vector<int> weights;

  static Grading standard(std::size_t m);
  static Grading coordinate(std::size_t m, std::size_t branch);  // 0-based branch
  static Grading subset(std::size_t m, const std::vector<std::size_t>& branches);
  int degree(const Monomial& mono) const;

  friend bool operator==(const Grading&, const Grading&) = default;
};

// Element of the truncated algebra with coefficients in a ring Coef.
// Slot 0 holds the constant, slot k + 1 the k-th ideal basis monomial.
template <class Coef>
class BasicElement {
 public:
  explicit BasicElement(ConductanceVector c) : c_(std::move(c)), coeffs_(c_.ambient_rank()) {}

  static BasicElement monomial(const ConductanceVector& c, const Monomial& mono, Coef coeff = Coef(1)) {
    BasicElement x(c);
    x.at(mono) = std::move(coeff);
    return x;
  }
  static BasicElement constant(const ConductanceVector& c, Coef coeff) {
    return monomial(c, Monomial::constant(), std::move(coeff));
  }

  const ConductanceVector& ambient() const { return c_; }
  std::size_t size() const { return coeffs_.size(); }
  Coef& slot(std::size_t k) { return coeffs_[k]; }
  const Coef& slot(std::size_t k) const { return coeffs_[k]; }
  Coef& at(const Monomial& mono) { return coeffs_[slot_of(mono)]; }
  const Coef& at(const Monomial& mono) const { return coeffs_[slot_of(mono)]; }
  const Coef& constant_part() const { return coeffs_[0]; }
  Monomial monomial_at_slot(std::size_t k) const { return k == 0 ? Monomial::constant() : c_.monomial(k - 1); }

  // Coordinates over the ideal basis (slots 1..n).
  std::vector<Coef> ideal_coordinates() const { return {coeffs_.begin() + 1, coeffs_.end()}; }
  static BasicElement from_ideal_coordinates(const ConductanceVector& c, const std::vector<Coef>& v) {
    BasicElement x(c);
    if (v.size() != c.ideal_rank()) throw std::invalid_argument("coordinate length mismatch");
    for (std::size_t k = 0; k < v.size(); ++k) x.coeffs_[k + 1] = v[k];
    return x;
  }

  bool is_zero() const {
    for (const auto& a : coeffs_)
      if (!ter::is_zero(a)) return false;
    return true;
  }

  BasicElement& operator+=(const BasicElement& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  BasicElement scaled(const Coef& s) const {
    BasicElement x = *this;
    for (auto& a : x.coeffs_) a = s * a;
    return x;
  }

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator*(const BasicElement& a, const BasicElement& b) {
    a.check(b);
    BasicElement p(a.c_);
    const Coef& a0 = a.coeffs_[0];
    const Coef& b0 = b.coeffs_[0];
    if (!ter::is_zero(a0))
      for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
        if (!ter::is_zero(b.coeffs_[k])) p.coeffs_[k] += a0 * b.coeffs_[k];
    if (!ter::is_zero(b0))
      for (std::size_t k = 1; k < p.coeffs_.size(); ++k)
        if (!ter::is_zero(a.coeffs_[k])) p.coeffs_[k] += b0 * a.coeffs_[k];
    for (std::size_t i = 1; i < a.coeffs_.size(); ++i) {
      if (ter::is_zero(a.coeffs_[i])) continue;
      Monomial mi = a.c_.monomial(i - 1);
      for (std::size_t j = 1; j < b.coeffs_.size(); ++j) {
        if (ter::is_zero(b.coeffs_[j])) continue;
        Monomial mj = a.c_.monomial(j - 1);
        if (mi.branch != mj.branch) continue;
        int e = mi.exponent + mj.exponent;
        if (e >= a.c_.conductance(mi.branch)) continue;
        p.at({mi.branch, e}) += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return p;
  }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.c_ == b.c_ && a.coeffs_ == b.coeffs_;
  }

 private:
  ConductanceVector c_;
  std::vector<Coef> coeffs_;

  std::size_t slot_of(const Monomial& mono) const { return mono.is_constant() ? 0 : c_.index(mono) + 1; }
  void check(const BasicElement& o) const {
    if (!(c_ == o.c_)) throw DomainError("ambient-mismatch", c_.to_string() + " vs " + o.c_.to_string());
  }
};

using AlgebraElement = BasicElement<Rational>;
using LaurentElement = BasicElement<LaurentPoly>;
using PolyElement = BasicElement<MultiPoly>;

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

template <class Coef>
BasicElement<Coef> power(const BasicElement<Coef>& x, int n) {
  BasicElement<Coef> r = BasicElement<Coef>::constant(x.ambient(), Coef(1));
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

// Algebra endomorphism sending t_i to images[i - 1]. The images must lie in
// the maximal ideal and satisfy x_i x_j = 0 (i != j) and x_i^{c_i} = 0.
template <class Coef>
BasicElement<Coef> substitute(const BasicElement<Coef>& x, const std::vector<BasicElement<Coef>>& images) {
  const ConductanceVector& c = x.ambient();
  if (images.size() != c.branches()) throw std::invalid_argument("one image per branch required");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i].ambient() == c)) throw DomainError("ambient-mismatch", "substitution image");
    if (!ter::is_zero(images[i].constant_part()))
      throw DomainError("invalid-substitution", "image of t" + std::to_string(i + 1) + " has a constant term");
    if (!power(images[i], c[i]).is_zero())
      throw DomainError("invalid-substitution", "image of t" + std::to_string(i + 1) + " violates truncation");
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (!(images[i] * images[j]).is_zero())
        throw DomainError("invalid-substitution", "images of distinct branches do not multiply to zero");
  }
  BasicElement<Coef> out = BasicElement<Coef>::constant(c, x.constant_part());
  for (std::size_t i = 0; i < c.branches(); ++i) {
    BasicElement<Coef> pw = images[i];
    for (int j = 1; j < c[i]; ++j) {
      const Coef& a = x.at({static_cast<int>(i + 1), j});
      if (!ter::is_zero(a)) out += pw.scaled(a);
      pw = pw * images[i];
    }
  }
  return out;
}

std::vector<Monomial> filtration_basis(const ConductanceVector& c, const Grading& gamma, int d);

AlgebraElement apply_torus(const std::vector<Rational>& lambda, const AlgebraElement& x);

// t_i -> t_i + a^{-1} t_i^2 on every branch.
LaurentElement apply_phi_a_symbolic(const AlgebraElement& x);

LaurentElement to_laurent(const AlgebraElement& x);
AlgebraElement specialize(const LaurentElement& x, const Rational& a);

// Embedding of the algebra on a subset of branches, and the projection onto it.
AlgebraElement embed(const AlgebraElement& x, const ConductanceVector& full, const std::vector<std::size_t>& branches);
AlgebraElement project(const AlgebraElement& x, const std::vector<std::size_t>& branches);

std::string to_string(const AlgebraElement& x);

}  // namespace ter
