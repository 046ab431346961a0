#pragma once

#include <string>
#include <vector>

#include "ter/subalgebra.hpp"

namespace ter {

// Complementary nonempty branch sets, stored 0-based and ascending.
struct BranchSplit {
  ConductanceVector c;
  std::vector<std::size_t> I;
  std::vector<std::size_t> Iprime;
};

// Throws DomainError "invalid-split". Branch numbers are 1-based.
BranchSplit make_split(const ConductanceVector& c, const std::vector<int>& I);
// "1,3/2" -> I = {1,3}, I' = {2}. Throws ParseError or DomainError "invalid-split".
BranchSplit parse_split(const ConductanceVector& c, const std::string& text);

// parts[k] lists the (0-based) branches of the join that carry points[k]'s branches, in order.
// Throws DomainError "partition-mismatch".
SubalgebraPoint join(const std::vector<SubalgebraPoint>& points, const std::vector<std::vector<std::size_t>>& parts);
SubalgebraPoint join(const SubalgebraPoint& b_I, const SubalgebraPoint& b_Iprime, const BranchSplit& split);

struct StratumLabel {
  int g_I = 0;
  int g_Iprime = 0;
  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};
StratumLabel stratum_label(const SubalgebraPoint& b, const BranchSplit& split);

// Image of m_B under projection to the listed branches.
SubalgebraPoint restrict(const SubalgebraPoint& b, const std::vector<std::size_t>& branches);
// m_B intersected with the ideal supported on the listed branches.
SubalgebraPoint contract(const SubalgebraPoint& b, const std::vector<std::size_t>& branches);

// Linear map from m_{B_I'} to m_{c|I}; images[k] is the image of domain[k], reduced modulo m_{B_I}.
struct GluingHom {
  BranchSplit split;
  std::vector<AlgebraElement> domain;
  std::vector<AlgebraElement> images;
};

struct GluingData {
  SubalgebraPoint contracted;  // B_I
  SubalgebraPoint restricted;  // B_I'
  GluingHom phi;
  // Whether the reduced representative annihilates m_{B_I} and is multiplicative on the nose.
  bool strictly_annihilating = false;
  bool strictly_multiplicative = false;
};

GluingData extract_gluing(const SubalgebraPoint& b, const BranchSplit& split);

// m_B = m_{B_I} + {b' + phi(b')}. Throws DomainError "phi-not-annihilating" when some
// b * phi(b') leaves m_{B_I}, "phi-not-multiplicative" when phi(x)phi(y) - phi(xy) does.
SubalgebraPoint assemble_from_gluing(const SubalgebraPoint& b_I, const SubalgebraPoint& b_Iprime, const GluingHom& phi);

// Finite-dimensional local algebra 1, r_1, ..., r_gamma given by coset representatives
// of m_{B_j} modulo Z_j, with products expressed in those representatives.
struct QuotientAlgebra {
  SubalgebraPoint algebra;  // B_j
  SubalgebraPoint ideal;    // Z_j, as a subspace of m_{B_j}
  std::vector<AlgebraElement> representatives;
  // structure[a][b][k]: coefficient of r_k in r_a r_b
  std::vector<std::vector<std::vector<Rational>>> structure;
  std::size_t rank() const { return representatives.size() + 1; }
};

struct IsomHilbData {
  BranchSplit split;  // I_1 = split.I, I_2 = split.Iprime
  int g1 = 0;
  int g2 = 0;
  int gamma = 0;
  QuotientAlgebra q1;
  QuotientAlgebra q2;
  // Matrix of phi: Q1 -> Q2 in the bases (1, r_1, ...); column j is the image of basis vector j.
  RationalMatrix phi;
};

IsomHilbData isom_hilb_data(const SubalgebraPoint& b, const BranchSplit& split);
QuotientAlgebra make_quotient(const SubalgebraPoint& algebra, const SubalgebraPoint& ideal);
bool is_unital_isomorphism(const QuotientAlgebra& q1, const QuotientAlgebra& q2, const RationalMatrix& phi);

// B = {(b1, b2) : phi([b1]) = [b2]}. Throws DomainError "precondition-violated" on invalid
// gluing data and "corank-mismatch" when the result does not have genus g1 + g2 + gamma.
SubalgebraPoint isom_hilb_assemble(const BranchSplit& split, const QuotientAlgebra& q1, const QuotientAlgebra& q2,
                                   const RationalMatrix& phi);

struct GorensteinContractionReport {
  int c_Iprime = 0;
  int g_Iprime = 0;
  int bound = 0;  // 2 g_I' + 2 |I'|
  bool equality = false;
  bool contraction_gorenstein = false;
  // Restriction genus for each branch with c_i in {2, 3} (1-based branch, genus).
  std::vector<std::pair<int, int>> small_branch_genera;
};
// Throws DomainError "precondition-violated" unless B has exact conductances and is Gorenstein.
GorensteinContractionReport gorenstein_contraction_check(const SubalgebraPoint& b, const BranchSplit& split);

}  // namespace ter
