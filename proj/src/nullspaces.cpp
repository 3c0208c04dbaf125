#include "spinorb/nullspaces.hpp"

#include <map>
#include <stdexcept>

namespace spinorb {

ExactVector coordinates(const Vector2d &v) {
  ExactVector x(v.ann);
  x.insert(x.end(), v.cre.begin(), v.cre.end());
  return x;
}

Vector2d from_coordinates(const ExactVector &x, int half_dim) {
  if (static_cast<int>(x.size()) != 2 * half_dim)
    throw DimensionError("from_coordinates: expected 2d entries");
  Vector2d v(half_dim);
  for (int i = 0; i < half_dim; ++i) {
    v.ann[i] = x[i];
    v.cre[i] = x[half_dim + i];
  }
  return v;
}

NullSubspace::NullSubspace(int half_dim, const std::vector<Vector2d> &spanning) : d_(half_dim) {
  std::vector<ExactVector> rows;
  for (const Vector2d &v : spanning) {
    if (v.half_dim() != half_dim)
      throw DimensionError("NullSubspace: dimension mismatch");
    rows.push_back(coordinates(v));
  }
  for (const ExactVector &r : row_space_basis(rows, 2 * half_dim))
    basis_.push_back(from_coordinates(r, half_dim));
}

bool NullSubspace::is_totally_null() const {
  for (size_t x = 0; x < basis_.size(); ++x)
    for (size_t y = x; y < basis_.size(); ++y)
      if (!metric(basis_[x], basis_[y]).is_zero())
        return false;
  return true;
}

NullSubspace annihilator(const Spinor &psi) {
  if (psi.is_zero())
    throw std::invalid_argument("annihilator: zero spinor");
  const int d = psi.half_dim();
  std::vector<Spinor> images;
  for (int i = 1; i <= d; ++i)
    images.push_back(annihilate(i, psi));
  for (int i = 1; i <= d; ++i)
    images.push_back(create(i, psi));

  std::map<IndexSet, int> row_of;
  for (const Spinor &s : images)
    for (const auto &[set, c] : s.terms())
      row_of.try_emplace(set, static_cast<int>(row_of.size()));

  Matrix m(static_cast<int>(row_of.size()), 2 * d);
  for (int col = 0; col < 2 * d; ++col)
    for (const auto &[set, c] : images[col].terms())
      m.at(row_of.at(set), col) = c;

  std::vector<Vector2d> kernel;
  for (const ExactVector &x : nullspace(m))
    kernel.push_back(from_coordinates(x, d));
  return NullSubspace(d, kernel);
}

int nullity(const Spinor &psi) { return annihilator(psi).dim(); }

bool is_pure(const Spinor &psi) { return nullity(psi) == psi.half_dim(); }

namespace {

void check_same(const NullSubspace &m1, const NullSubspace &m2) {
  if (m1.half_dim() != m2.half_dim())
    throw DimensionError("null subspaces live in different dimensions");
}

}  // namespace

int intersection_dim(const NullSubspace &m1, const NullSubspace &m2) {
  check_same(m1, m2);
  std::vector<ExactVector> rows;
  for (const Vector2d &v : m1.basis())
    rows.push_back(coordinates(v));
  for (const Vector2d &v : m2.basis())
    rows.push_back(coordinates(v));
  const int sum_dim = static_cast<int>(row_space_basis(rows, 2 * m1.half_dim()).size());
  return m1.dim() + m2.dim() - sum_dim;
}

NullSubspace intersect(const NullSubspace &m1, const NullSubspace &m2) {
  check_same(m1, m2);
  const int d = m1.half_dim();
  if (m1.dim() == 0 || m2.dim() == 0)
    return NullSubspace(d);
  // Solve sum x_i u_i = sum y_j w_j.
  std::vector<ExactVector> columns;
  for (const Vector2d &u : m1.basis())
    columns.push_back(coordinates(u));
  for (const Vector2d &w : m2.basis()) {
    ExactVector c = coordinates(w);
    for (auto &x : c)
      x = -x;
    columns.push_back(std::move(c));
  }
  std::vector<Vector2d> common;
  for (const ExactVector &sol : nullspace(Matrix::from_columns(columns, 2 * d))) {
    ExactVector v(2 * d);
    for (int i = 0; i < m1.dim(); ++i) {
      if (sol[i].is_zero())
        continue;
      const ExactVector u = coordinates(m1.basis()[i]);
      for (int r = 0; r < 2 * d; ++r)
        v[r] += sol[i] * u[r];
    }
    common.push_back(from_coordinates(v, d));
  }
  return NullSubspace(d, common);
}

}  // namespace spinorb
