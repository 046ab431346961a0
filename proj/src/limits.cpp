#include "ter/limits.hpp"

#include <algorithm>
#include <sstream>

#include "ter/branch_ops.hpp"

namespace ter {

namespace {

int row_valuation(const LaurentElement& x) {
  bool any = false;
  int v = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.slot(k).is_zero()) continue;
    v = any ? std::min(v, x.slot(k).valuation()) : x.slot(k).valuation();
    any = true;
  }
  return v;
}

LaurentElement shifted(const LaurentElement& x, int s) {
  LaurentElement y(x.ambient());
  for (std::size_t k = 0; k < x.size(); ++k) y.slot(k) = x.slot(k).shifted(s);
  return y;
}

}  // namespace

SubalgebraPoint limit_at_zero(const ParametricSubspace& family) {
  const ConductanceVector& c = family.c;
  std::vector<LaurentElement> rows = family.rows;
  for (const auto& r : rows) {
    if (!(r.ambient() == c)) throw DomainError("ambient-mismatch", "family row");
    if (!r.constant_part().is_zero()) throw DomainError("precondition-violated", "family rows must lie in the maximal ideal");
  }
  // Each pass lowers the valuation of the Pluecker vector of the normalized rows, which stays >= 0.
  for (;;) {
    for (auto& r : rows) {
      if (r.is_zero()) throw DomainError("precondition-violated", "family rows are linearly dependent");
      r = shifted(r, -row_valuation(r));
    }
    RationalMatrix lead(rows.size(), c.ideal_rank());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < c.ideal_rank(); ++k) lead(i, k) = rows[i].slot(k + 1).coefficient(0);
    auto deps = nullspace(lead.transpose());
    if (deps.empty()) return SubalgebraPoint::from_matrix(c, lead);
    const auto& mu = deps.front();
    std::size_t j = mu.size();
    while (j > 0 && is_zero(mu[j - 1])) --j;
    --j;
    LaurentElement combo(c);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!is_zero(mu[i])) combo += rows[i].scaled(LaurentPoly(mu[i]));
    rows[j] = combo;
  }
}

ParametricSubspace torus_family(const SubalgebraPoint& b, const Grading& gamma) {
  const ConductanceVector& c = b.ambient();
  ParametricSubspace f{c, {}};
  for (const auto& r : b.rows()) {
    LaurentElement x(c);
    for (std::size_t k = 1; k < r.size(); ++k)
      if (!is_zero(r.slot(k))) x.slot(k) = LaurentPoly::monomial(gamma.degree(r.monomial_at_slot(k)), r.slot(k));
    f.rows.push_back(x);
  }
  return f;
}

SubalgebraPoint gamma_limit(const SubalgebraPoint& b, const Grading& gamma) {
  const ConductanceVector& c = b.ambient();
  NormalBasis nb = normal_basis(b, gamma);
  RationalMatrix m(0, c.ideal_rank());
  for (const auto& [d, x] : nb.entries) {
    std::vector<Rational> part(c.ideal_rank());
    for (std::size_t k = 1; k < x.size(); ++k)
      if (gamma.degree(x.monomial_at_slot(k)) == d) part[k - 1] = x.slot(k);
    if (!is_zero_vector(part)) m.append_row(part);
  }
  SubalgebraPoint lim = SubalgebraPoint::from_matrix(c, m);
  if (lim.genus() != b.genus()) throw std::logic_error("gamma limit changed the genus");
  return lim;
}

bool is_homogeneous(const SubalgebraPoint& b, const Grading& gamma) { return gamma_limit(b, gamma) == b; }

SubalgebraPoint t_fix(const SubalgebraPoint& b) {
  const ConductanceVector& c = b.ambient();
  SubalgebraPoint cur = gamma_limit(b, Grading::standard(c.branches()));
  for (std::size_t i = 0; i < c.branches(); ++i) cur = gamma_limit(cur, Grading::coordinate(c.branches(), i));
  if (!is_monomial(cur)) throw std::logic_error("iterated limit is not monomial");
  return cur;
}

SubalgebraPoint phi_a_limit(const SubalgebraPoint& b) {
  if (!is_monomial(b)) throw DomainError("not-monomial", "phi_a limits are taken of monomial points only");
  ParametricSubspace f{b.ambient(), {}};
  for (const auto& r : b.rows()) f.rows.push_back(apply_phi_a_symbolic(r));
  return limit_at_zero(f);
}

std::vector<DegenerationStep> degenerate_to_partition(const SubalgebraPoint& b) {
  std::vector<DegenerationStep> chain{{b, "input"}};
  SubalgebraPoint cur = t_fix(b);
  if (!(cur == b)) chain.push_back({cur, "t-fix"});
  std::size_t bound = 1;
  for (std::size_t i = 0; i < b.ambient().branches(); ++i)
    bound += static_cast<std::size_t>((b.ambient()[i] - 1) * (b.ambient()[i] - 1));
  while (!is_partition(cur)) {
    cur = phi_a_limit(cur);
    chain.push_back({cur, "phi-limit"});
    if (chain.size() > bound) throw std::logic_error("degeneration chain exceeded its length bound");
  }
  return chain;
}

std::string chain_to_dot(const std::vector<DegenerationStep>& chain) {
  std::ostringstream os;
  os << "digraph degeneration {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    os << "  n" << i << " [label=\"";
    auto rows = chain[i].point.rows();
    if (rows.empty()) os << "k";
    for (std::size_t r = 0; r < rows.size(); ++r) os << (r ? ", " : "") << to_string(rows[r]);
    os << "\\ng=" << chain[i].point.genus() << "\"];\n";
  }
  for (std::size_t i = 1; i < chain.size(); ++i)
    os << "  n" << (i - 1) << " -> n" << i << " [label=\"" << chain[i].step << "\"];\n";
  os << "}\n";
  return os.str();
}

SubalgebraPoint decomposable_limit(const SubalgebraPoint& b, const std::vector<std::size_t>& I) {
  const ConductanceVector& c = b.ambient();
  std::vector<int> one_based;
  for (auto i : I) one_based.push_back(static_cast<int>(i + 1));
  BranchSplit split = make_split(c, one_based);
  SubalgebraPoint lim = gamma_limit(b, Grading::subset(c.branches(), split.I));
  if (!(join(contract(lim, split.I), restrict(lim, split.Iprime), split) == lim))
    throw std::logic_error("limit is not decomposable");
  return lim;
}

}  // namespace ter
