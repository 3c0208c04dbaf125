#pragma once

#include "spinorb/gaussian_rational.hpp"

#include <vector>

namespace spinorb {

using ExactVector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static Matrix from_rows(const std::vector<ExactVector> &rows, int cols);
  static Matrix from_columns(const std::vector<ExactVector> &columns, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational &at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const GaussianRational &at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  ExactVector row(int r) const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination; exact, so the pivot order affects speed only.
Echelon row_reduce(Matrix m);
int rank(const Matrix &m);
/// Basis of {x : m x = 0}, one vector per free column, with that free entry equal to 1.
std::vector<ExactVector> nullspace(const Matrix &m);
/// Linearly independent rows of the reduced echelon form spanning the same row space.
std::vector<ExactVector> row_space_basis(const std::vector<ExactVector> &vectors, int length);

}  // namespace spinorb
