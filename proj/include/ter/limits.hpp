#pragma once

#include <string>
#include <vector>

#include "ter/subalgebra.hpp"

namespace ter {

// Span of rows with Laurent coefficients in the parameter a, viewed for a != 0.
struct ParametricSubspace {
  ConductanceVector c;
  std::vector<LaurentElement> rows;
};

// Flat limit as a -> 0 by valuation saturation. Throws DomainError
// "precondition-violated" if the rows are dependent or carry constants.
SubalgebraPoint limit_at_zero(const ParametricSubspace& family);

// The family lambda(a) . B with lambda_i(a) = a^{gamma_i}.
ParametricSubspace torus_family(const SubalgebraPoint& b, const Grading& gamma);

// Span of the minimal-degree parts of a gamma-normal basis.
SubalgebraPoint gamma_limit(const SubalgebraPoint& b, const Grading& gamma);

bool is_homogeneous(const SubalgebraPoint& b, const Grading& gamma);

// Standard-grading limit, then the coordinate limits for branches 1..m in order.
SubalgebraPoint t_fix(const SubalgebraPoint& b);

// Throws DomainError "not-monomial".
SubalgebraPoint phi_a_limit(const SubalgebraPoint& b);

struct DegenerationStep {
  SubalgebraPoint point;
  std::string step;  // "input", "t-fix" or "phi-limit"
};

std::vector<DegenerationStep> degenerate_to_partition(const SubalgebraPoint& b);

// Graphviz rendering of a chain.
std::string chain_to_dot(const std::vector<DegenerationStep>& chain);

// gamma_limit for gamma_I = sum of coordinate gradings over I (0-based); the result is
// checked to be the join of its contraction and restriction.
SubalgebraPoint decomposable_limit(const SubalgebraPoint& b, const std::vector<std::size_t>& I);

}  // namespace ter
