#include "ter/chart.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ter {

namespace {

std::string monomial_key(const Monomial& m) {
  return "t" + std::to_string(m.branch) + "_" + std::to_string(m.exponent);
}

std::vector<MultiPoly> normalized_unique(const std::vector<MultiPoly>& polys) {
  std::vector<MultiPoly> out;
  std::set<std::string> seen;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    MultiPoly q = p.sign_normalized();
    if (seen.insert(q.to_string()).second) out.push_back(q);
  }
  return out;
}

// All k-element subsets of [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& in) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (!std::binary_search(in.begin(), in.end(), j)) out.push_back(j);
  return out;
}

}  // namespace

ChartIndex make_chart_index(const ConductanceVector& c, int g, const std::vector<Monomial>& pivots) {
  std::vector<std::size_t> idx;
  for (const auto& m : pivots) {
    if (m.is_constant() || !c.valid(m)) throw DomainError("invalid-pivot-set", m.name() + " is not an ideal monomial");
    idx.push_back(c.index(m));
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw DomainError("invalid-pivot-set", "repeated pivot monomial");
  const int expected = static_cast<int>(c.ideal_rank()) - g;
  if (expected < 0 || static_cast<int>(idx.size()) != expected)
    throw DomainError("invalid-pivot-set", "pivot set must have c - m - g = " + std::to_string(expected) + " elements");
  return {c, idx};
}

std::string chart_variable_name(const Monomial& pivot, const Monomial& nonpivot) {
  return "x_" + monomial_key(pivot) + "_" + monomial_key(nonpivot);
}

ChartIdeal chart_equations(const ConductanceVector& c, int g, const ChartIndex& chart) {
  if (!(chart.c == c) || static_cast<int>(chart.pivots.size()) != static_cast<int>(c.ideal_rank()) - g)
    throw DomainError("invalid-pivot-set", "chart does not match the territory");
  const std::size_t n = c.ideal_rank();
  const auto& piv = chart.pivots;
  const auto free = complement(n, piv);
  std::vector<std::string> names;
  for (auto i : piv)
    for (auto j : free) names.push_back(chart_variable_name(c.monomial(i), c.monomial(j)));
  VarContext ctx = make_context(names);
  auto var = [&](std::size_t pi, std::size_t fj) { return MultiPoly::variable(ctx, pi * free.size() + fj); };

  std::vector<PolyElement> rows;
  for (std::size_t pi = 0; pi < piv.size(); ++pi) {
    PolyElement f(c);
    f.slot(piv[pi] + 1) = MultiPoly::constant(1, ctx);
    for (std::size_t fj = 0; fj < free.size(); ++fj) f.slot(free[fj] + 1) = var(pi, fj);
    rows.push_back(f);
  }
  std::vector<MultiPoly> gens;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a; b < rows.size(); ++b) {
      PolyElement prod = rows[a] * rows[b];
      for (std::size_t fj = 0; fj < free.size(); ++fj) {
        MultiPoly gen = prod.slot(free[fj] + 1).with_context(ctx);
        for (std::size_t pi = 0; pi < piv.size(); ++pi) {
          const MultiPoly& coeff = prod.slot(piv[pi] + 1);
          if (!coeff.is_zero()) gen -= coeff * var(pi, fj);
        }
        gens.push_back(gen);
      }
    }
  return ChartIdeal{IdealKind::Chart, c, g, chart, ctx, normalized_unique(gens), {}, -1};
}

ChartIdeal based_equations(const ConductanceVector& c, int g) {
  const std::size_t n = c.ideal_rank();
  const int r_signed = static_cast<int>(n) - g;
  if (r_signed < 1) throw DomainError("precondition-violated", "based territories need c - m - g >= 1");
  const std::size_t r = static_cast<std::size_t>(r_signed);
  std::vector<std::string> names;
  for (std::size_t alpha = 0; alpha < r; ++alpha)
    for (std::size_t i = 0; i < n; ++i)
      names.push_back(r <= 26 ? std::string(1, static_cast<char>('a' + alpha)) + std::to_string(i + 1)
                              : "x_" + std::to_string(i + 1) + "_" + std::to_string(alpha + 1));
  VarContext ctx = make_context(names);
  auto entry = [&](std::size_t i, std::size_t alpha) { return MultiPoly::variable(ctx, alpha * n + i); };

  std::vector<PolyElement> cols;
  for (std::size_t alpha = 0; alpha < r; ++alpha) {
    PolyElement f(c);
    for (std::size_t i = 0; i < n; ++i) f.slot(i + 1) = entry(i, alpha);
    cols.push_back(f);
  }
  const auto row_sets = subsets(n, r + 1);
  std::vector<MultiPoly> minors;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      PolyElement prod = cols[a] * cols[b];
      if (prod.is_zero()) continue;
      for (const auto& rows : row_sets) {
        std::vector<std::vector<MultiPoly>> m;
        for (auto i : rows) {
          std::vector<MultiPoly> line;
          for (std::size_t alpha = 0; alpha < r; ++alpha) line.push_back(entry(i, alpha));
          line.push_back(prod.slot(i + 1).with_context(ctx));
          m.push_back(line);
        }
        minors.push_back(det(m));
      }
    }
  std::vector<MultiPoly> cover;
  for (const auto& rows : subsets(n, r)) {
    std::vector<std::vector<MultiPoly>> m;
    for (auto i : rows) {
      std::vector<MultiPoly> line;
      for (std::size_t alpha = 0; alpha < r; ++alpha) line.push_back(entry(i, alpha));
      m.push_back(line);
    }
    cover.push_back(det(m));
  }
  return ChartIdeal{IdealKind::Based, c, g, std::nullopt, ctx, normalized_unique(minors),
                    normalized_unique(cover), static_cast<int>(r) + 2};
}

std::vector<Rational> chart_coordinates(const SubalgebraPoint& b, const ChartIndex& chart) {
  const std::size_t n = chart.c.ideal_rank();
  const auto free = complement(n, chart.pivots);
  std::vector<std::size_t> order = chart.pivots;
  order.insert(order.end(), free.begin(), free.end());
  RrefResult r = rref_in_order(b.basis(), order);
  if (!(b.ambient() == chart.c) || r.pivots != chart.pivots)
    throw DomainError("precondition-violated", "point does not lie in the requested chart");
  std::vector<Rational> values;
  for (std::size_t pi = 0; pi < chart.pivots.size(); ++pi)
    for (auto j : free) values.push_back(r.matrix(pi, j));
  return values;
}

RationalMatrix chart_rows(const ChartIndex& chart, const std::vector<Rational>& values) {
  const std::size_t n = chart.c.ideal_rank();
  const auto free = complement(n, chart.pivots);
  if (values.size() != chart.pivots.size() * free.size()) throw std::invalid_argument("wrong number of chart values");
  RationalMatrix m(chart.pivots.size(), n);
  for (std::size_t pi = 0; pi < chart.pivots.size(); ++pi) {
    m(pi, chart.pivots[pi]) = 1;
    for (std::size_t fj = 0; fj < free.size(); ++fj) m(pi, free[fj]) = values[pi * free.size() + fj];
  }
  return m;
}

SpineDescriptor spine(const ConductanceVector& c, int g) {
  SpineDescriptor s{c, g, {}, 0};
  int n = 0;
  for (std::size_t i = 0; i < c.branches(); ++i) {
    n += c[i] / 2;
    if (c[i] % 2 != 0) ++s.odd_count;
  }
  int k = c.total() - static_cast<int>(c.branches()) - g;
  s.grassmannian.k = k;
  s.grassmannian.n = n;
  s.grassmannian.empty = k < 0 || k > n;
  s.grassmannian.dimension = s.grassmannian.empty ? 0 : std::max(k * (n - k), 0);
  return s;
}

GrassmannianParams spine_intersection(const std::vector<ConductanceVector>& members, const ConductanceVector& c, int g) {
  if (members.empty()) throw std::invalid_argument("at least one conductance vector required");
  std::vector<int> lo = members.front().values(), hi = members.front().values();
  for (const auto& member : members) {
    if (!member.componentwise_leq(c))
      throw DomainError("incomparable-conductances", member.to_string() + " is not below " + c.to_string());
    for (std::size_t i = 0; i < c.branches(); ++i) {
      lo[i] = std::min(lo[i], member[i]);
      hi[i] = std::max(hi[i], member[i]);
    }
  }
  GrassmannianParams p;
  int total_lo = 0;
  for (int v : lo) total_lo += v;
  p.k = total_lo - g - static_cast<int>(c.branches());
  for (std::size_t i = 0; i < c.branches(); ++i) p.n += lo[i] - (hi[i] + 1) / 2;
  p.empty = p.k < 0 || p.n < 0 || p.k > p.n;
  p.dimension = p.empty ? 0 : p.k * (p.n - p.k);
  return p;
}

std::vector<Monomial> square_zero_monomials(const ConductanceVector& c) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < c.branches(); ++i)
    for (int j = (c[i] + 1) / 2; j < c[i]; ++j)
      if (j >= 1) out.push_back({static_cast<int>(i + 1), j});
  return out;
}

bool in_spine(const SubalgebraPoint& b) {
  const ConductanceVector& c = b.ambient();
  auto allowed = square_zero_monomials(c);
  for (const auto& row : b.rows())
    for (std::size_t k = 1; k < row.size(); ++k)
      if (!is_zero(row.slot(k)) &&
          std::find(allowed.begin(), allowed.end(), row.monomial_at_slot(k)) == allowed.end())
        return false;
  return true;
}

SubalgebraPoint random_spine_point(const ConductanceVector& c, int g, std::uint64_t seed) {
  const auto span = square_zero_monomials(c);
  const int k = c.total() - static_cast<int>(c.branches()) - g;
  if (k < 0 || k > static_cast<int>(span.size()))
    throw DomainError("empty-spine", "spine of genus " + std::to_string(g) + " in " + c.to_string() + " is empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (;;) {
    RationalMatrix m(static_cast<std::size_t>(k), c.ideal_rank());
    for (int r = 0; r < k; ++r)
      for (const auto& mono : span) m(static_cast<std::size_t>(r), c.index(mono)) = coef(rng);
    if (rank(m) == static_cast<std::size_t>(k)) return SubalgebraPoint::from_matrix(c, m);
  }
}

}  // namespace ter
