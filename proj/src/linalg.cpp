#include "spinorb/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace spinorb {

Matrix Matrix::from_rows(const std::vector<ExactVector> &rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("Matrix::from_rows: ragged input");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<ExactVector> &columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw std::invalid_argument("Matrix::from_columns: ragged input");
    for (int r = 0; r < rows; ++r)
      m.at(r, c) = columns[c][r];
  }
  return m;
}

ExactVector Matrix::row(int r) const {
  return ExactVector(data_.begin() + static_cast<ptrdiff_t>(r) * cols_,
                     data_.begin() + static_cast<ptrdiff_t>(r + 1) * cols_);
}

Echelon row_reduce(Matrix m) {
  Echelon out;
  int pivot_row = 0;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    // Prefer a real pivot with the smallest numerator; any nonzero entry works.
    int best = -1;
    for (int r = pivot_row; r < m.rows(); ++r) {
      const auto &v = m.at(r, c);
      if (v.is_zero())
        continue;
      if (best < 0 || (v.is_real() && !m.at(best, c).is_real()))
        best = r;
      if (v.is_real() && (v.re() == 1 || v.re() == -1))
        break;
    }
    if (best < 0)
      continue;
    if (best != pivot_row)
      for (int k = 0; k < m.cols(); ++k)
        std::swap(m.at(best, k), m.at(pivot_row, k));

    const GaussianRational inv = GaussianRational(1) / m.at(pivot_row, c);
    for (int k = c; k < m.cols(); ++k)
      if (!m.at(pivot_row, k).is_zero())
        m.at(pivot_row, k) *= inv;

    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, c).is_zero())
        continue;
      const GaussianRational factor = m.at(r, c);
      for (int k = c; k < m.cols(); ++k) {
        const auto &p = m.at(pivot_row, k);
        if (!p.is_zero())
          m.at(r, k) -= factor * p;
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix &m) { return row_reduce(m).rank(); }

std::vector<ExactVector> nullspace(const Matrix &m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots)
    is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (int r = 0; r < e.rank(); ++r)
      v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ExactVector> row_space_basis(const std::vector<ExactVector> &vectors, int length) {
  if (vectors.empty())
    return {};
  const Echelon e = row_reduce(Matrix::from_rows(vectors, length));
  std::vector<ExactVector> out;
  for (int r = 0; r < e.rank(); ++r)
    out.push_back(e.reduced.row(r));
  return out;
}

}  // namespace spinorb
