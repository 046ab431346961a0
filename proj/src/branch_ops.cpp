#include "ter/branch_ops.hpp"

#include <algorithm>
#include <sstream>

namespace ter {

namespace {

std::vector<std::size_t> normalized_branches(const ConductanceVector& c, std::vector<std::size_t> branches) {
  std::sort(branches.begin(), branches.end());
  if (branches.empty() || std::adjacent_find(branches.begin(), branches.end()) != branches.end() ||
      branches.back() >= c.branches())
    throw DomainError("invalid-split", "branch set must be nonempty, distinct and within 1.." + std::to_string(c.branches()));
  return branches;
}

std::vector<std::size_t> columns_of(const ConductanceVector& c, const std::vector<std::size_t>& branches) {
  std::vector<std::size_t> cols;
  for (auto i : branches)
    for (int j = 1; j < c[i]; ++j) cols.push_back(c.index({static_cast<int>(i + 1), j}));
  return cols;
}

std::vector<std::size_t> other_branches(const ConductanceVector& c, const std::vector<std::size_t>& branches) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.branches(); ++i)
    if (!std::binary_search(branches.begin(), branches.end(), i)) out.push_back(i);
  return out;
}

std::vector<Rational> restrict_vector(const std::vector<Rational>& v, const std::vector<std::size_t>& cols) {
  std::vector<Rational> out;
  for (auto k : cols) out.push_back(v[k]);
  return out;
}

// RREF of the basis with the given branches eliminated first. Rows whose pivot lies
// in those branches come first; the remaining rows vanish on them.
struct SplitEchelon {
  RrefResult r;
  std::size_t leading = 0;  // number of rows with pivot in the first block
};

SplitEchelon split_echelon(const SubalgebraPoint& b, const std::vector<std::size_t>& first) {
  const ConductanceVector& c = b.ambient();
  auto cols = columns_of(c, first);
  auto rest = columns_of(c, other_branches(c, first));
  std::vector<std::size_t> order = cols;
  order.insert(order.end(), rest.begin(), rest.end());
  SplitEchelon s{rref_in_order(b.basis(), order), 0};
  for (auto p : s.r.pivots)
    if (std::find(cols.begin(), cols.end(), p) != cols.end()) ++s.leading;
  return s;
}

std::vector<Rational> class_in(const QuotientAlgebra& q, const RrefResult& reps, const std::vector<Rational>& v) {
  if (!q.algebra.contains_ideal_vector(v)) throw DomainError("precondition-violated", "element outside the algebra");
  return row_coordinates(reps, reduce_against(q.ideal.echelon(), v));
}

RrefResult reps_echelon(const QuotientAlgebra& q) {
  RationalMatrix m(0, q.algebra.ambient().ideal_rank());
  for (const auto& r : q.representatives) m.append_row(r.ideal_coordinates());
  return rref(m);
}

std::vector<Rational> quotient_product(const QuotientAlgebra& q, const std::vector<Rational>& u, const std::vector<Rational>& v) {
  const std::size_t n = q.rank();
  std::vector<Rational> w(n);
  w[0] = u[0] * v[0];
  for (std::size_t a = 1; a < n; ++a) w[a] = u[0] * v[a] + v[0] * u[a];
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      if (is_zero(u[a]) || is_zero(v[b])) continue;
      for (std::size_t k = 1; k < n; ++k) w[k] += u[a] * v[b] * q.structure[a - 1][b - 1][k - 1];
    }
  return w;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::vector<Rational> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Rational> e(n);
  e[k] = 1;
  return e;
}

}  // namespace

BranchSplit make_split(const ConductanceVector& c, const std::vector<int>& I) {
  std::vector<std::size_t> zero_based;
  for (int i : I) {
    if (i < 1 || i > static_cast<int>(c.branches()))
      throw DomainError("invalid-split", "branch " + std::to_string(i) + " out of range");
    zero_based.push_back(static_cast<std::size_t>(i - 1));
  }
  auto in = normalized_branches(c, zero_based);
  auto out = other_branches(c, in);
  if (out.empty()) throw DomainError("invalid-split", "complement of the branch set is empty");
  return {c, in, out};
}

BranchSplit parse_split(const ConductanceVector& c, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw ParseError("split must have the form I/I', e.g. 1,3/2");
  auto parse_list = [](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw ParseError("bad branch number '" + item + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad branch number '" + item + "'");
      }
    }
    return out;
  };
  std::vector<int> first = parse_list(text.substr(0, slash));
  std::vector<int> rest = parse_list(text.substr(slash + 1));
  if (first.empty() || rest.empty()) throw ParseError("both sides of the split must list branches");
  BranchSplit split = make_split(c, first);
  std::vector<std::size_t> rest0;
  for (int i : rest) rest0.push_back(static_cast<std::size_t>(i - 1));
  std::sort(rest0.begin(), rest0.end());
  if (rest0 != split.Iprime) throw DomainError("invalid-split", "the two branch sets must be complementary");
  return split;
}

SubalgebraPoint join(const std::vector<SubalgebraPoint>& points, const std::vector<std::vector<std::size_t>>& parts) {
  if (points.size() != parts.size() || points.empty())
    throw DomainError("partition-mismatch", "one branch set per point required");
  std::size_t total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].size() != points[k].ambient().branches())
      throw DomainError("partition-mismatch", "part " + std::to_string(k + 1) + " does not match its point's branch count");
    total += parts[k].size();
  }
  std::vector<int> values(total, 0);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t j = 0; j < parts[k].size(); ++j) {
      std::size_t target = parts[k][j];
      if (target >= total || values[target] != 0) throw DomainError("partition-mismatch", "parts do not partition the branches");
      values[target] = points[k].ambient()[j];
    }
  ConductanceVector full(values);
  std::vector<AlgebraElement> rows;
  for (std::size_t k = 0; k < points.size(); ++k)
    for (const auto& r : points[k].rows()) rows.push_back(embed(r, full, parts[k]));
  return make_point(full, rows);
}

SubalgebraPoint join(const SubalgebraPoint& b_I, const SubalgebraPoint& b_Iprime, const BranchSplit& split) {
  if (!(b_I.ambient() == split.c.restrict_to(split.I)) || !(b_Iprime.ambient() == split.c.restrict_to(split.Iprime)))
    throw DomainError("partition-mismatch", "points do not match the split");
  return join({b_I, b_Iprime}, {split.I, split.Iprime});
}

SubalgebraPoint restrict(const SubalgebraPoint& b, const std::vector<std::size_t>& branches) {
  const ConductanceVector& c = b.ambient();
  auto br = normalized_branches(c, branches);
  return SubalgebraPoint::from_matrix(c.restrict_to(br), b.basis().select_columns(columns_of(c, br)));
}

SubalgebraPoint contract(const SubalgebraPoint& b, const std::vector<std::size_t>& branches) {
  const ConductanceVector& c = b.ambient();
  auto br = normalized_branches(c, branches);
  auto others = other_branches(c, br);
  ConductanceVector sub = c.restrict_to(br);
  if (others.empty()) return b;
  SplitEchelon s = split_echelon(b, others);
  auto cols = columns_of(c, br);
  RationalMatrix m(0, sub.ideal_rank());
  for (std::size_t i = s.leading; i < s.r.matrix.rows(); ++i) m.append_row(restrict_vector(s.r.matrix.row(i), cols));
  return SubalgebraPoint::from_matrix(sub, m);
}

StratumLabel stratum_label(const SubalgebraPoint& b, const BranchSplit& split) {
  StratumLabel l{contract(b, split.I).genus(), restrict(b, split.Iprime).genus()};
  if (l.g_I + l.g_Iprime != b.genus()) throw std::logic_error("stratum label does not add up to the genus");
  return l;
}

GluingData extract_gluing(const SubalgebraPoint& b, const BranchSplit& split) {
  if (!(b.ambient() == split.c)) throw DomainError("ambient-mismatch", "split and point ambients differ");
  SubalgebraPoint b_I = contract(b, split.I);
  SubalgebraPoint b_Ip = restrict(b, split.Iprime);
  SplitEchelon s = split_echelon(b, split.Iprime);
  GluingHom phi{split, {}, {}};
  for (std::size_t i = 0; i < s.leading; ++i) {
    AlgebraElement row = AlgebraElement::from_ideal_coordinates(split.c, s.r.matrix.row(i));
    phi.domain.push_back(project(row, split.Iprime));
    AlgebraElement image = project(row, split.I);
    phi.images.push_back(AlgebraElement::from_ideal_coordinates(
        image.ambient(), reduce_against(b_I.echelon(), image.ideal_coordinates())));
  }
  if (phi.domain != b_Ip.rows()) throw std::logic_error("gluing domain does not match the restriction");

  GluingData data{b_I, b_Ip, phi, true, true};
  for (const auto& x : b_I.rows())
    for (const auto& y : phi.images)
      if (!(x * y).is_zero()) data.strictly_annihilating = false;
  for (std::size_t a = 0; a < phi.domain.size(); ++a)
    for (std::size_t c = a; c < phi.domain.size(); ++c) {
      auto coords = row_coordinates(b_Ip.echelon(), (phi.domain[a] * phi.domain[c]).ideal_coordinates());
      AlgebraElement image(phi.images.empty() ? b_I.ambient() : phi.images[0].ambient());
      for (std::size_t k = 0; k < coords.size(); ++k) image += phi.images[k].scaled(coords[k]);
      if (!(phi.images[a] * phi.images[c] == image)) data.strictly_multiplicative = false;
    }
  return data;
}

SubalgebraPoint assemble_from_gluing(const SubalgebraPoint& b_I, const SubalgebraPoint& b_Iprime, const GluingHom& phi) {
  const BranchSplit& split = phi.split;
  const ConductanceVector c_I = split.c.restrict_to(split.I);
  const ConductanceVector c_Ip = split.c.restrict_to(split.Iprime);
  if (!(b_I.ambient() == c_I) || !(b_Iprime.ambient() == c_Ip))
    throw DomainError("precondition-violated", "points do not match the split");
  if (phi.domain.size() != b_Iprime.dimension() || phi.images.size() != phi.domain.size())
    throw DomainError("precondition-violated", "gluing map must be given on a basis of the restricted algebra");

  // Rewrite phi on the RREF basis of B_I' via [D | Id] -> [rref D | E].
  const std::size_t k = phi.domain.size();
  const std::size_t n_Ip = c_Ip.ideal_rank();
  RationalMatrix aug(0, n_Ip + k);
  for (std::size_t a = 0; a < k; ++a) {
    if (!(phi.domain[a].ambient() == c_Ip) || !(phi.images[a].ambient() == c_I))
      throw DomainError("precondition-violated", "gluing map has the wrong ambient");
    if (!is_zero(phi.domain[a].constant_part()) || !is_zero(phi.images[a].constant_part()))
      throw DomainError("precondition-violated", "gluing map must send the maximal ideal to the maximal ideal");
    if (!b_Iprime.contains(phi.domain[a])) throw DomainError("precondition-violated", "domain element outside B_I'");
    auto row = phi.domain[a].ideal_coordinates();
    auto e = unit_vector(k, a);
    row.insert(row.end(), e.begin(), e.end());
    aug.append_row(row);
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() != k || (k > 0 && r.pivots.back() >= n_Ip))
    throw DomainError("precondition-violated", "domain of the gluing map is not a basis");
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < k; ++a) {
    AlgebraElement img(c_I);
    for (std::size_t j = 0; j < k; ++j) img += phi.images[j].scaled(r.matrix(a, n_Ip + j));
    images.push_back(img);
  }
  auto domain = b_Iprime.rows();
  auto phi_of = [&](const AlgebraElement& x) {
    auto coords = row_coordinates(b_Iprime.echelon(), x.ideal_coordinates());
    AlgebraElement y(c_I);
    for (std::size_t j = 0; j < k; ++j) y += images[j].scaled(coords[j]);
    return y;
  };
  for (const auto& x : b_I.rows())
    for (std::size_t a = 0; a < k; ++a)
      if (!b_I.contains(x * images[a]))
        throw DomainError("phi-not-annihilating", "(" + to_string(x) + ") * phi(" + to_string(domain[a]) + ") = " +
                                                      to_string(x * images[a]) + " is not in B_I");
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      AlgebraElement defect = images[a] * images[b] - phi_of(domain[a] * domain[b]);
      if (!b_I.contains(defect))
        throw DomainError("phi-not-multiplicative", "phi(" + to_string(domain[a]) + ") phi(" + to_string(domain[b]) +
                                                        ") - phi(product) = " + to_string(defect) + " is not in B_I");
    }
  std::vector<AlgebraElement> rows;
  for (const auto& x : b_I.rows()) rows.push_back(embed(x, split.c, split.I));
  for (std::size_t a = 0; a < k; ++a) rows.push_back(embed(domain[a], split.c, split.Iprime) + embed(images[a], split.c, split.I));
  return make_point(split.c, rows);
}

QuotientAlgebra make_quotient(const SubalgebraPoint& algebra, const SubalgebraPoint& ideal) {
  if (!(algebra.ambient() == ideal.ambient())) throw DomainError("precondition-violated", "quotient ambients differ");
  auto alg_rows = algebra.rows();
  auto ideal_rows = ideal.rows();
  for (const auto& z : ideal_rows) {
    if (!algebra.contains(z)) throw DomainError("precondition-violated", "ideal is not contained in the algebra");
    for (const auto& x : alg_rows)
      if (!ideal.contains(x * z)) throw DomainError("precondition-violated", "subspace is not an ideal of the algebra");
  }
  const ConductanceVector& c = algebra.ambient();
  RationalMatrix residues(0, c.ideal_rank());
  for (const auto& x : alg_rows) residues.append_row(reduce_against(ideal.echelon(), x.ideal_coordinates()));
  RrefResult reps = rref(residues);
  QuotientAlgebra q{algebra, ideal, {}, {}};
  for (std::size_t i = 0; i < reps.matrix.rows(); ++i)
    q.representatives.push_back(AlgebraElement::from_ideal_coordinates(c, reps.matrix.row(i)));
  const std::size_t g = q.representatives.size();
  q.structure.assign(g, std::vector<std::vector<Rational>>(g));
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) {
      auto v = (q.representatives[a] * q.representatives[b]).ideal_coordinates();
      q.structure[a][b] = row_coordinates(reps, reduce_against(ideal.echelon(), v));
    }
  return q;
}

IsomHilbData isom_hilb_data(const SubalgebraPoint& b, const BranchSplit& split) {
  if (!(b.ambient() == split.c)) throw DomainError("ambient-mismatch", "split and point ambients differ");
  SubalgebraPoint b1 = restrict(b, split.I), b2 = restrict(b, split.Iprime);
  IsomHilbData d{split, b1.genus(), b2.genus(), 0, make_quotient(b1, contract(b, split.I)),
                 make_quotient(b2, contract(b, split.Iprime)), {}};
  d.gamma = b.genus() - d.g1 - d.g2;
  const std::size_t rank = static_cast<std::size_t>(d.gamma) + 1;
  if (d.gamma < 0 || d.q1.rank() != rank || d.q2.rank() != rank)
    throw std::logic_error("quotient rank does not equal gamma + 1");

  SplitEchelon s = split_echelon(b, split.I);
  auto cols1 = columns_of(split.c, split.I), cols2 = columns_of(split.c, split.Iprime);
  RrefResult reps2 = reps_echelon(d.q2);
  d.phi = RationalMatrix(rank, rank);
  d.phi(0, 0) = 1;
  for (std::size_t a = 0; a < d.q1.representatives.size(); ++a) {
    auto coords = row_coordinates(b1.echelon(), d.q1.representatives[a].ideal_coordinates());
    std::vector<Rational> lifted(split.c.ideal_rank());
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t k = 0; k < lifted.size(); ++k) lifted[k] += coords[i] * s.r.matrix(i, k);
    auto cls = class_in(d.q2, reps2, restrict_vector(lifted, cols2));
    for (std::size_t k = 0; k < cls.size(); ++k) d.phi(k + 1, a + 1) = cls[k];
  }
  return d;
}

bool is_unital_isomorphism(const QuotientAlgebra& q1, const QuotientAlgebra& q2, const RationalMatrix& phi) {
  const std::size_t n = q1.rank();
  if (q2.rank() != n || phi.rows() != n || phi.cols() != n) return false;
  if (mat_vec(phi, unit_vector(n, 0)) != unit_vector(n, 0)) return false;
  for (std::size_t j = 1; j < n; ++j)
    if (!is_zero(phi(0, j))) return false;
  if (is_zero(determinant(phi))) return false;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto lhs = mat_vec(phi, quotient_product(q1, unit_vector(n, a), unit_vector(n, b)));
      auto rhs = quotient_product(q2, mat_vec(phi, unit_vector(n, a)), mat_vec(phi, unit_vector(n, b)));
      if (lhs != rhs) return false;
    }
  return true;
}

SubalgebraPoint isom_hilb_assemble(const BranchSplit& split, const QuotientAlgebra& q1, const QuotientAlgebra& q2,
                                   const RationalMatrix& phi) {
  if (!(q1.algebra.ambient() == split.c.restrict_to(split.I)) || !(q2.algebra.ambient() == split.c.restrict_to(split.Iprime)))
    throw DomainError("precondition-violated", "quotient algebras do not match the split");
  QuotientAlgebra c1 = make_quotient(q1.algebra, q1.ideal), c2 = make_quotient(q2.algebra, q2.ideal);
  if (c1.representatives != q1.representatives || c2.representatives != q2.representatives)
    throw DomainError("precondition-violated", "quotient representatives are not canonical");
  if (!is_unital_isomorphism(c1, c2, phi)) throw DomainError("precondition-violated", "phi is not a unital algebra isomorphism");

  const std::size_t gamma = c1.rank() - 1;
  RrefResult reps1 = reps_echelon(c1), reps2 = reps_echelon(c2);
  auto rows1 = c1.algebra.rows(), rows2 = c2.algebra.rows();
  RationalMatrix lin(gamma, rows1.size() + rows2.size());
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    auto cls = class_in(c1, reps1, rows1[i].ideal_coordinates());
    cls.insert(cls.begin(), Rational(0));
    auto img = mat_vec(phi, cls);
    for (std::size_t k = 0; k < gamma; ++k) lin(k, i) = img[k + 1];
  }
  for (std::size_t j = 0; j < rows2.size(); ++j) {
    auto cls = class_in(c2, reps2, rows2[j].ideal_coordinates());
    for (std::size_t k = 0; k < gamma; ++k) lin(k, rows1.size() + j) = -cls[k];
  }
  std::vector<AlgebraElement> rows;
  for (const auto& v : nullspace(lin)) {
    AlgebraElement x(split.c);
    for (std::size_t i = 0; i < rows1.size(); ++i)
      if (!is_zero(v[i])) x += embed(rows1[i], split.c, split.I).scaled(v[i]);
    for (std::size_t j = 0; j < rows2.size(); ++j)
      if (!is_zero(v[rows1.size() + j])) x += embed(rows2[j], split.c, split.Iprime).scaled(v[rows1.size() + j]);
    rows.push_back(x);
  }
  SubalgebraPoint b = make_point(split.c, rows);
  const int expected = c1.algebra.genus() + c2.algebra.genus() + static_cast<int>(gamma);
  if (b.genus() != expected)
    throw DomainError("corank-mismatch", "assembled genus " + std::to_string(b.genus()) + " differs from " + std::to_string(expected));
  return b;
}

GorensteinContractionReport gorenstein_contraction_check(const SubalgebraPoint& b, const BranchSplit& split) {
  if (!(b.ambient() == split.c)) throw DomainError("ambient-mismatch", "split and point ambients differ");
  if (!is_gorenstein_profile(b).gorenstein) throw DomainError("precondition-violated", "point is not Gorenstein");
  GorensteinContractionReport rep;
  for (auto i : split.Iprime) rep.c_Iprime += split.c[i];
  rep.g_Iprime = restrict(b, split.Iprime).genus();
  rep.bound = 2 * rep.g_Iprime + 2 * static_cast<int>(split.Iprime.size());
  rep.equality = rep.c_Iprime == rep.bound;
  SubalgebraPoint k = contract(b, split.I);
  rep.contraction_gorenstein = exact_conductances(k).exact && is_gorenstein_profile(k).gorenstein;
  for (std::size_t i = 0; i < split.c.branches(); ++i)
    if (split.c[i] == 2 || split.c[i] == 3)
      rep.small_branch_genera.emplace_back(static_cast<int>(i + 1), restrict(b, {i}).genus());
  return rep;
}

}  // namespace ter
