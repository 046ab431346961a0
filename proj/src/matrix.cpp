#include "ter/matrix.hpp"

#include <numeric>
#include <stdexcept>

#include "ter/error.hpp"

namespace ter {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  RationalMatrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) s(r, j) = (*this)(r, cols[j]);
  return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in product");
  RationalMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RrefResult rref_in_order(const RationalMatrix& m, const std::vector<std::size_t>& order) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col : order) {
    if (lead == a.rows()) break;
    std::size_t p = lead;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(lead, c));
    Rational inv = 1 / a(lead, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || is_zero(a(r, col))) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_zero(a(lead, c))) a(r, c) -= f * a(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  RationalMatrix out(0, a.cols());
  for (std::size_t r = 0; r < lead; ++r) out.append_row(a.row(r));
  return {out, pivots};
}

RrefResult rref(const RationalMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref_in_order(m, order);
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> reduce_against(const RrefResult& r, std::vector<Rational> v) {
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    Rational f = v[r.pivots[i]];
    if (is_zero(f)) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!is_zero(r.matrix(i, c))) v[c] -= f * r.matrix(i, c);
  }
  return v;
}

bool in_row_space(const RrefResult& r, const std::vector<Rational>& v) {
  return is_zero_vector(reduce_against(r, v));
}

std::vector<Rational> row_coordinates(const RrefResult& r, const std::vector<Rational>& v) {
  if (!in_row_space(r, v)) throw std::invalid_argument("vector not in row space");
  std::vector<Rational> coords(r.pivots.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) coords[i] = v[r.pivots[i]];
  return coords;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("dimension-mismatch", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RationalMatrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace ter
