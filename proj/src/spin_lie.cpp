#include "spinorb/spin_lie.hpp"

#include <map>
#include <stdexcept>

namespace spinorb {

namespace {

void check_dims(int a, int b) {
  if (a != b)
    throw DimensionError("spin(2d): dimension mismatch");
}

Matrix mul(const Matrix &x, const Matrix &y) {
  Matrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x.at(i, k).is_zero())
        continue;
      for (int j = 0; j < y.cols(); ++j)
        if (!y.at(k, j).is_zero())
          out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

Matrix transpose(const Matrix &x) {
  Matrix out(x.cols(), x.rows());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      out.at(j, i) = x.at(i, j);
  return out;
}

Matrix add(const Matrix &x, const Matrix &y, int sign = 1) {
  Matrix out = x;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!y.at(i, j).is_zero())
        out.at(i, j) += sign == 1 ? y.at(i, j) : -y.at(i, j);
  return out;
}

bool is_zero(const Matrix &m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero())
        return false;
  return true;
}

}  // namespace

bool LieElement::is_zero() const { return spinorb::is_zero(A) && spinorb::is_zero(beta) && spinorb::is_zero(B); }

int lie_dimension(int half_dim) { return half_dim * (2 * half_dim - 1); }

ExactVector lie_coordinates(const LieElement &x) {
  const int d = x.half_dim();
  ExactVector out;
  out.reserve(lie_dimension(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out.push_back(x.A.at(i, j));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.push_back(x.beta.at(i, j));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.push_back(x.B.at(i, j));
  return out;
}

LieElement lie_from_coordinates(const ExactVector &coords, int half_dim) {
  if (static_cast<int>(coords.size()) != lie_dimension(half_dim))
    throw DimensionError("lie_from_coordinates: wrong coordinate count");
  LieElement x(half_dim);
  size_t n = 0;
  for (int i = 0; i < half_dim; ++i)
    for (int j = 0; j < half_dim; ++j)
      x.A.at(i, j) = coords[n++];
  for (int i = 0; i < half_dim; ++i)
    for (int j = i + 1; j < half_dim; ++j) {
      x.beta.at(i, j) = coords[n];
      x.beta.at(j, i) = -coords[n++];
    }
  for (int i = 0; i < half_dim; ++i)
    for (int j = i + 1; j < half_dim; ++j) {
      x.B.at(i, j) = coords[n];
      x.B.at(j, i) = -coords[n++];
    }
  return x;
}

std::vector<LieElement> lie_basis(int half_dim) {
  if (half_dim < 1)
    throw DimensionError("lie_basis: d must be positive");
  const int n = lie_dimension(half_dim);
  std::vector<LieElement> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    ExactVector coords(n);
    coords[k] = 1;
    out.push_back(lie_from_coordinates(coords, half_dim));
  }
  return out;
}

LieElement cartan_generator(int half_dim, int i) {
  if (i < 1 || i > half_dim)
    throw DimensionError("cartan_generator: index out of range");
  LieElement x(half_dim);
  x.A.at(i - 1, i - 1) = 2;
  return x;
}

Spinor act(const LieElement &x, const Spinor &psi) {
  const int d = x.half_dim();
  check_dims(d, psi.half_dim());
  static const GaussianRational half(mpq_class(1, 2));
  Spinor out(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      const GaussianRational &a = x.A.at(i - 1, j - 1);
      if (a.is_zero())
        continue;
      // (a_i a_j^+ - a_j^+ a_i) psi
      Spinor term = annihilate(i, create(j, psi)) - create(j, annihilate(i, psi));
      out += (half * a) * term;
    }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (!x.beta.at(i - 1, j - 1).is_zero())
        out += x.beta.at(i - 1, j - 1) * create(i, create(j, psi));
      if (!x.B.at(i - 1, j - 1).is_zero())
        out += x.B.at(i - 1, j - 1) * annihilate(i, annihilate(j, psi));
    }
  return out;
}

Vector2d adjoint_action(const LieElement &x, const Vector2d &v) {
  const int d = x.half_dim();
  check_dims(d, v.half_dim());
  Vector2d out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      out.ann[i] += x.A.at(i, j) * v.ann[j] + x.B.at(i, j) * v.cre[j];
      out.cre[i] += x.beta.at(i, j) * v.ann[j] - x.A.at(j, i) * v.cre[j];
    }
  return out;
}

LieElement bracket(const LieElement &x, const LieElement &y) {
  check_dims(x.half_dim(), y.half_dim());
  // Commutator of the block matrices [[A, B], [beta, -A^T]] acting on (a, a^+) coordinates.
  LieElement out(x.half_dim());
  const Matrix xAt = transpose(x.A), yAt = transpose(y.A);
  out.A = add(add(mul(x.A, y.A), mul(x.B, y.beta)), add(mul(y.A, x.A), mul(y.B, x.beta)), -1);
  out.B = add(add(mul(x.A, y.B), mul(x.B, yAt), -1), add(mul(y.A, x.B), mul(y.B, xAt), -1), -1);
  out.beta = add(add(mul(x.beta, y.A), mul(xAt, y.beta), -1), add(mul(y.beta, x.A), mul(yAt, x.beta), -1), -1);
  return out;
}

LieElement operator+(const LieElement &x, const LieElement &y) {
  check_dims(x.half_dim(), y.half_dim());
  LieElement out(x.half_dim());
  out.A = add(x.A, y.A);
  out.beta = add(x.beta, y.beta);
  out.B = add(x.B, y.B);
  return out;
}

LieElement operator*(const GaussianRational &c, const LieElement &x) {
  return lie_from_coordinates([&] {
    ExactVector v = lie_coordinates(x);
    for (auto &e : v)
      e *= c;
    return v;
  }(), x.half_dim());
}

StabilizerAlgebra stabilizer_algebra(const Spinor &psi) {
  if (psi.is_zero())
    throw std::invalid_argument("stabilizer_algebra: zero spinor");
  const int d = psi.half_dim();
  const std::vector<LieElement> basis = lie_basis(d);
  std::vector<Spinor> images;
  images.reserve(basis.size());
  std::map<IndexSet, int> row_of;
  for (const LieElement &x : basis) {
    images.push_back(act(x, psi));
    for (const auto &[s, c] : images.back().terms())
      row_of.try_emplace(s, static_cast<int>(row_of.size()));
  }
  Matrix m(static_cast<int>(row_of.size()), static_cast<int>(basis.size()));
  for (int col = 0; col < m.cols(); ++col)
    for (const auto &[s, c] : images[col].terms())
      m.at(row_of.at(s), col) = c;

  StabilizerAlgebra out;
  for (const ExactVector &v : row_space_basis(nullspace(m), m.cols()))
    out.basis.push_back(lie_from_coordinates(v, d));
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

int derived_subalgebra_dim(const std::vector<LieElement> &basis) {
  if (basis.empty())
    return 0;
  const int d = basis.front().half_dim();
  const int n = lie_dimension(d);
  std::vector<ExactVector> gens;
  for (const LieElement &x : basis) {
    check_dims(x.half_dim(), d);
    gens.push_back(lie_coordinates(x));
  }
  const int base_rank = static_cast<int>(row_space_basis(gens, n).size());

  std::vector<ExactVector> brackets;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      LieElement b = bracket(basis[i], basis[j]);
      if (!b.is_zero())
        brackets.push_back(lie_coordinates(b));
    }
  const std::vector<ExactVector> derived = row_space_basis(brackets, n);

  std::vector<ExactVector> joint = gens;
  joint.insert(joint.end(), derived.begin(), derived.end());
  if (static_cast<int>(row_space_basis(joint, n).size()) != base_rank)
    throw std::invalid_argument("derived_subalgebra_dim: span is not closed under bracket");
  return static_cast<int>(derived.size());
}

Matrix cartan_eigenvalues(const Configuration &c) {
  c.validate();
  Matrix m(c.size(), c.half_dim);
  for (int alpha = 0; alpha < c.size(); ++alpha)
    for (int i = 1; i <= c.half_dim; ++i)
      m.at(alpha, i - 1) = c.words[alpha].contains(i) ? -1 : 1;
  return m;
}

bool cartan_equalizable(const Configuration &c) {
  if (c.words.empty())
    throw std::invalid_argument("cartan_equalizable: empty configuration");
  const Matrix eigen = cartan_eigenvalues(c);
  // Overall scale counts as a free parameter: append the all-ones column.
  Matrix extended(eigen.rows(), eigen.cols() + 1);
  for (int r = 0; r < eigen.rows(); ++r) {
    for (int col = 0; col < eigen.cols(); ++col)
      extended.at(r, col) = eigen.at(r, col);
    extended.at(r, eigen.cols()) = 1;
  }
  return rank(extended) == c.size();
}

}  // namespace spinorb
