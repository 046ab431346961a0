#pragma once

#include <cstddef>
#include <vector>

#include "ter/rational.hpp"

namespace ter {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& values);
  RationalMatrix transpose() const;
  RationalMatrix select_columns(const std::vector<std::size_t>& cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

struct RrefResult {
  RationalMatrix matrix;  // zero rows dropped
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RationalMatrix& m);

// Row reduction where columns are eliminated in the given priority order.
// Rows are returned over the original column indices; pivots[i] is the pivot
// column of row i and rows appear in the order their pivots occur in `order`.
RrefResult rref_in_order(const RationalMatrix& m, const std::vector<std::size_t>& order);

std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Reduces v against an rref. Returns the residue; zero iff v lies in the row space.
std::vector<Rational> reduce_against(const RrefResult& r, std::vector<Rational> v);
bool in_row_space(const RrefResult& r, const std::vector<Rational>& v);
// Coefficients expressing v in the rows of r; requires membership.
std::vector<Rational> row_coordinates(const RrefResult& r, const std::vector<Rational>& v);

Rational determinant(const RationalMatrix& m);

bool is_zero_vector(const std::vector<Rational>& v);

}  // namespace ter
