#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ter/algebra.hpp"
#include "ter/multipoly.hpp"
#include "ter/subalgebra.hpp"

namespace ter {

struct ChartIndex {
  ConductanceVector c;
  std::vector<std::size_t> pivots;  // ascending positions in the ideal basis
};

// Throws DomainError "invalid-pivot-set" unless the monomials are distinct,
// valid and number c - m - g.
ChartIndex make_chart_index(const ConductanceVector& c, int g, const std::vector<Monomial>& pivots);

enum class IdealKind { Chart, Based };

struct ChartIdeal {
  IdealKind kind = IdealKind::Chart;
  ConductanceVector c;
  int g = 0;
  std::optional<ChartIndex> chart;
  VarContext variables;
  std::vector<MultiPoly> generators;
  std::vector<MultiPoly> cover_minors;  // based territories only
  int homogeneous_degree = -1;          // based territories only
};

// "x_t1_2_t3_1" for the coefficient of t3^1 in the row with pivot t1^2.
std::string chart_variable_name(const Monomial& pivot, const Monomial& nonpivot);

ChartIdeal chart_equations(const ConductanceVector& c, int g, const ChartIndex& chart);

// Variables a<i>, b<i>, ... name the entries of column 1, 2, ... at ideal basis position i.
ChartIdeal based_equations(const ConductanceVector& c, int g);

// Values of the chart variables at a point whose basis block at the pivot set is invertible.
std::vector<Rational> chart_coordinates(const SubalgebraPoint& b, const ChartIndex& chart);
// Basis rows f_i = e_i + sum x_ij e_j for given variable values (not necessarily closed).
RationalMatrix chart_rows(const ChartIndex& chart, const std::vector<Rational>& values);

struct GrassmannianParams {
  int k = 0;
  int n = 0;
  int dimension = 0;
  bool empty = false;
};

struct SpineDescriptor {
  ConductanceVector c;
  int g = 0;
  GrassmannianParams grassmannian;
  int odd_count = 0;
};

SpineDescriptor spine(const ConductanceVector& c, int g);
GrassmannianParams spine_intersection(const std::vector<ConductanceVector>& members, const ConductanceVector& c, int g);

// Monomials t_i^j with j >= ceil(c_i / 2).
std::vector<Monomial> square_zero_monomials(const ConductanceVector& c);
bool in_spine(const SubalgebraPoint& b);

// Throws DomainError "empty-spine".
SubalgebraPoint random_spine_point(const ConductanceVector& c, int g, std::uint64_t seed);

}  // namespace ter
