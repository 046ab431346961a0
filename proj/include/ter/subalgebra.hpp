#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ter/algebra.hpp"
#include "ter/matrix.hpp"

namespace ter {

// A point B = k.1 + m_B of a territory. The basis of m_B is kept in RREF over
// the canonical ideal basis, so equal subalgebras compare equal.
class SubalgebraPoint {
 public:
  // Throws DomainError "rows-contain-constant" or "not-closed".
  static SubalgebraPoint make(const ConductanceVector& c, const std::vector<AlgebraElement>& rows);
  // Rows are coordinate vectors over the ideal basis.
  static SubalgebraPoint from_matrix(const ConductanceVector& c, const RationalMatrix& rows);

  const ConductanceVector& ambient() const { return c_; }
  const RationalMatrix& basis() const { return echelon_.matrix; }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }
  const RrefResult& echelon() const { return echelon_; }
  std::size_t dimension() const { return echelon_.pivots.size(); }
  int genus() const { return genus_; }

  std::vector<AlgebraElement> rows() const;
  bool contains(const AlgebraElement& x) const;
  bool contains_ideal_vector(const std::vector<Rational>& v) const;

  friend bool operator==(const SubalgebraPoint& a, const SubalgebraPoint& b) {
    return a.c_ == b.c_ && a.echelon_.matrix == b.echelon_.matrix;
  }

 private:
  SubalgebraPoint(ConductanceVector c, RrefResult e);
  ConductanceVector c_;
  RrefResult echelon_;
  int genus_ = 0;
};

SubalgebraPoint make_point(const ConductanceVector& c, const std::vector<AlgebraElement>& rows);
int genus(const SubalgebraPoint& b);
int delta(const SubalgebraPoint& b);

// Element-wise torus action on a point.
SubalgebraPoint apply_torus(const std::vector<Rational>& lambda, const SubalgebraPoint& b);

struct ExactnessReport {
  std::vector<bool> per_branch;
  bool exact = true;
};
ExactnessReport exact_conductances(const SubalgebraPoint& b);

struct GorensteinProfile {
  bool gorenstein = false;
  bool in_window = false;  // g + m - 1 < sum c <= 2(g + m - 1)
  int total = 0;
  int window_lower = 0;  // exclusive
  int window_upper = 0;  // inclusive
};
// Throws DomainError "precondition-violated" when conductances are not exact.
GorensteinProfile is_gorenstein_profile(const SubalgebraPoint& b);

struct VanishingData {
  Grading grading;
  std::map<int, int> k;     // nonzero ranks of graded pieces only
  std::map<int, int> gaps;  // corank of B cap I_d in I_d over the relevant range
  int degree = 0;

  friend bool operator==(const VanishingData&, const VanishingData&) = default;
};
VanishingData vanishing_data(const SubalgebraPoint& b, const Grading& gamma);

struct NormalBasis {
  Grading grading;
  std::vector<std::pair<int, AlgebraElement>> entries;
};
NormalBasis normal_basis(const SubalgebraPoint& b, const Grading& gamma);

// Exponent sets per branch when the RREF rows are single monomials.
std::optional<std::vector<std::vector<int>>> is_monomial(const SubalgebraPoint& b);
// (d_1,...,d_m) when every branch's exponent set is the tail [d_i, c_i - 1]; d_i = c_i if empty.
std::optional<std::vector<int>> is_partition(const SubalgebraPoint& b);

// Monomial point spanned by the given exponents on each branch.
SubalgebraPoint monomial_point(const ConductanceVector& c, const std::vector<std::vector<int>>& exponents);

std::optional<SubalgebraPoint> truncate(const SubalgebraPoint& b, const ConductanceVector& smaller);
SubalgebraPoint lift(const SubalgebraPoint& b, const ConductanceVector& larger);

// Smallest d with the entire monomial filtration I_d empty, largest with I_d everything.
std::pair<int, int> degree_range(const ConductanceVector& c, const Grading& gamma);

}  // namespace ter
