#include "ter/subalgebra.hpp"

#include <algorithm>
#include <numeric>

namespace ter {

SubalgebraPoint::SubalgebraPoint(ConductanceVector c, RrefResult e) : c_(std::move(c)), echelon_(std::move(e)) {
  genus_ = static_cast<int>(c_.ideal_rank()) - static_cast<int>(echelon_.pivots.size());
}

SubalgebraPoint SubalgebraPoint::from_matrix(const ConductanceVector& c, const RationalMatrix& m) {
  if (m.cols() != c.ideal_rank()) throw std::invalid_argument("basis matrix width mismatch");
  RrefResult e = rref(m);
  std::vector<AlgebraElement> rows;
  for (std::size_t i = 0; i < e.matrix.rows(); ++i)
    rows.push_back(AlgebraElement::from_ideal_coordinates(c, e.matrix.row(i)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      AlgebraElement p = rows[i] * rows[j];
      if (!in_row_space(e, p.ideal_coordinates()))
        throw DomainError("not-closed", "(" + to_string(rows[i]) + ") * (" + to_string(rows[j]) + ") = " +
                                            to_string(p) + " is not in the span");
    }
  return SubalgebraPoint(c, std::move(e));
}

SubalgebraPoint SubalgebraPoint::make(const ConductanceVector& c, const std::vector<AlgebraElement>& rows) {
  RationalMatrix m(0, c.ideal_rank());
  for (const auto& r : rows) {
    if (!(r.ambient() == c)) throw DomainError("ambient-mismatch", r.ambient().to_string() + " vs " + c.to_string());
    if (!is_zero(r.constant_part()))
      throw DomainError("rows-contain-constant", "row " + to_string(r) + " has a constant component");
    m.append_row(r.ideal_coordinates());
  }
  return from_matrix(c, m);
}

std::vector<AlgebraElement> SubalgebraPoint::rows() const {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < echelon_.matrix.rows(); ++i)
    out.push_back(AlgebraElement::from_ideal_coordinates(c_, echelon_.matrix.row(i)));
  return out;
}

bool SubalgebraPoint::contains_ideal_vector(const std::vector<Rational>& v) const { return in_row_space(echelon_, v); }

bool SubalgebraPoint::contains(const AlgebraElement& x) const {
  if (!(x.ambient() == c_)) return false;
  return contains_ideal_vector(x.ideal_coordinates());
}

SubalgebraPoint make_point(const ConductanceVector& c, const std::vector<AlgebraElement>& rows) {
  return SubalgebraPoint::make(c, rows);
}

int genus(const SubalgebraPoint& b) { return b.genus(); }

int delta(const SubalgebraPoint& b) { return b.genus() + static_cast<int>(b.ambient().branches()) - 1; }

SubalgebraPoint apply_torus(const std::vector<Rational>& lambda, const SubalgebraPoint& b) {
  std::vector<AlgebraElement> rows;
  for (const auto& r : b.rows()) rows.push_back(apply_torus(lambda, r));
  return SubalgebraPoint::make(b.ambient(), rows);
}

ExactnessReport exact_conductances(const SubalgebraPoint& b) {
  ExactnessReport r;
  const ConductanceVector& c = b.ambient();
  for (std::size_t i = 0; i < c.branches(); ++i) {
    bool exact = true;
    if (c[i] > 1) {
      AlgebraElement socle = AlgebraElement::monomial(c, {static_cast<int>(i + 1), c[i] - 1});
      exact = !b.contains(socle);
    }
    r.per_branch.push_back(exact);
    r.exact = r.exact && exact;
  }
  return r;
}

GorensteinProfile is_gorenstein_profile(const SubalgebraPoint& b) {
  if (!exact_conductances(b).exact)
    throw DomainError("precondition-violated", "conductances of the point are not exact");
  GorensteinProfile p;
  const int m = static_cast<int>(b.ambient().branches());
  p.total = b.ambient().total();
  p.window_lower = b.genus() + m - 1;
  p.window_upper = 2 * (b.genus() + m - 1);
  p.gorenstein = p.total == p.window_upper;
  p.in_window = p.window_lower < p.total && p.total <= p.window_upper;
  return p;
}

std::pair<int, int> degree_range(const ConductanceVector& c, const Grading& gamma) {
  int lo = 0, hi = 0;
  for (const auto& mono : c.ideal_basis()) {
    lo = std::min(lo, gamma.degree(mono));
    hi = std::max(hi, gamma.degree(mono));
  }
  return {lo, hi};
}

namespace {

// RREF with columns eliminated from lowest to highest gamma-degree.
RrefResult degree_echelon(const SubalgebraPoint& b, const Grading& gamma) {
  const ConductanceVector& c = b.ambient();
  if (gamma.weights.size() != c.branches()) throw std::invalid_argument("grading length mismatch");
  std::vector<std::size_t> order(c.ideal_rank());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return gamma.degree(c.monomial(x)) < gamma.degree(c.monomial(y));
  });
  return rref_in_order(b.basis(), order);
}

}  // namespace

NormalBasis normal_basis(const SubalgebraPoint& b, const Grading& gamma) {
  RrefResult e = degree_echelon(b, gamma);
  NormalBasis nb{gamma, {}};
  const ConductanceVector& c = b.ambient();
  nb.entries.emplace_back(0, AlgebraElement::constant(c, 1));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    nb.entries.emplace_back(gamma.degree(c.monomial(e.pivots[i])),
                            AlgebraElement::from_ideal_coordinates(c, e.matrix.row(i)));
  std::stable_sort(nb.entries.begin(), nb.entries.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  return nb;
}

VanishingData vanishing_data(const SubalgebraPoint& b, const Grading& gamma) {
  NormalBasis nb = normal_basis(b, gamma);
  VanishingData v;
  v.grading = gamma;
  for (const auto& [d, x] : nb.entries) {
    ++v.k[d];
    v.degree += d;
  }
  const ConductanceVector& c = b.ambient();
  auto [lo, hi] = degree_range(c, gamma);
  for (int d = lo; d <= hi + 1; ++d) {
    int ambient_dim = static_cast<int>(filtration_basis(c, gamma, d).size());
    int sub_dim = 0;
    for (const auto& [deg, count] : v.k)
      if (deg >= d) sub_dim += count;
    v.gaps[d] = ambient_dim - sub_dim;
  }
  return v;
}

std::optional<std::vector<std::vector<int>>> is_monomial(const SubalgebraPoint& b) {
  const ConductanceVector& c = b.ambient();
  std::vector<std::vector<int>> sets(c.branches());
  const RationalMatrix& m = b.basis();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != b.pivots()[i] && !is_zero(m(i, j))) return std::nullopt;
    Monomial mono = c.monomial(b.pivots()[i]);
    sets[static_cast<std::size_t>(mono.branch - 1)].push_back(mono.exponent);
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return sets;
}

std::optional<std::vector<int>> is_partition(const SubalgebraPoint& b) {
  auto sets = is_monomial(b);
  if (!sets) return std::nullopt;
  const ConductanceVector& c = b.ambient();
  std::vector<int> d(c.branches());
  for (std::size_t i = 0; i < c.branches(); ++i) {
    const auto& s = (*sets)[i];
    d[i] = c[i] - static_cast<int>(s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] != d[i] + static_cast<int>(k)) return std::nullopt;
  }
  return d;
}

SubalgebraPoint monomial_point(const ConductanceVector& c, const std::vector<std::vector<int>>& exponents) {
  if (exponents.size() != c.branches()) throw std::invalid_argument("one exponent set per branch required");
  std::vector<AlgebraElement> rows;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (int e : exponents[i]) rows.push_back(AlgebraElement::monomial(c, {static_cast<int>(i + 1), e}));
  return SubalgebraPoint::make(c, rows);
}

std::optional<SubalgebraPoint> truncate(const SubalgebraPoint& b, const ConductanceVector& smaller) {
  const ConductanceVector& c = b.ambient();
  if (!smaller.componentwise_leq(c))
    throw DomainError("incomparable-conductances", smaller.to_string() + " is not below " + c.to_string());
  for (std::size_t i = 0; i < c.branches(); ++i)
    for (int j = smaller[i]; j < c[i]; ++j)
      if (!b.contains(AlgebraElement::monomial(c, {static_cast<int>(i + 1), j}))) return std::nullopt;
  RationalMatrix m(0, smaller.ideal_rank());
  for (const auto& row : b.rows()) {
    std::vector<Rational> v(smaller.ideal_rank());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = row.at(smaller.monomial(k));
    m.append_row(v);
  }
  return SubalgebraPoint::from_matrix(smaller, m);
}

SubalgebraPoint lift(const SubalgebraPoint& b, const ConductanceVector& larger) {
  const ConductanceVector& c = b.ambient();
  if (!c.componentwise_leq(larger))
    throw DomainError("incomparable-conductances", larger.to_string() + " is not above " + c.to_string());
  std::vector<AlgebraElement> rows;
  for (const auto& row : b.rows()) {
    AlgebraElement x(larger);
    for (std::size_t k = 0; k < c.ideal_rank(); ++k) x.at(c.monomial(k)) = row.slot(k + 1);
    rows.push_back(x);
  }
  for (std::size_t i = 0; i < c.branches(); ++i)
    for (int j = c[i]; j < larger[i]; ++j)
      rows.push_back(AlgebraElement::monomial(larger, {static_cast<int>(i + 1), j}));
  return SubalgebraPoint::make(larger, rows);
}

}  // namespace ter
