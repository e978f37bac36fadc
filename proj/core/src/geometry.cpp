#include "thermogeom/geometry.hpp"

#include <cmath>
#include <string>

namespace thermogeom {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

StateVector::StateVector(Vector components, double norm_tol)
    : components_(std::move(components)) {
  if (components_.size() == 0) {
    throw std::invalid_argument("StateVector: empty vector");
  }
  const double n2 = components_.squaredNorm();
  if (std::abs(n2 - 1.0) > norm_tol) {
    throw std::invalid_argument("StateVector: squared norm " +
                                std::to_string(n2) + " is not 1");
  }
}

StateVector StateVector::normalized(Vector components) {
  const double n = components.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("StateVector::normalized: null or non-finite vector");
  }
  components /= n;
  return StateVector(std::move(components));
}

bool StateVector::nonnegative(double tol) const {
  return (components_.array() >= -tol).all();
}

Observable Observable::diagonal(Vector values) {
  if (values.size() == 0) {
    throw std::invalid_argument("Observable::diagonal: empty vector");
  }
  Observable x;
  x.diagonal_ = true;
  x.values_ = std::move(values);
  return x;
}

Observable Observable::dense(Matrix matrix, double symmetry_tol) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("Observable::dense: matrix must be square and nonempty");
  }
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > symmetry_tol) {
    throw std::invalid_argument("Observable::dense: matrix is not symmetric (max |X - X^T| = " +
                                std::to_string(asym) + ")");
  }
  Observable x;
  x.diagonal_ = false;
  x.matrix_ = std::move(matrix);
  return x;
}

Eigen::Index Observable::dim() const {
  return diagonal_ ? values_.size() : matrix_.rows();
}

const Vector& Observable::values() const {
  if (!diagonal_) throw std::logic_error("Observable::values: dense kind");
  return values_;
}

const Matrix& Observable::matrix() const {
  if (diagonal_) throw std::logic_error("Observable::matrix: diagonal kind");
  return matrix_;
}

Matrix Observable::to_matrix() const {
  if (diagonal_) return values_.asDiagonal();
  return matrix_;
}

Vector Observable::apply(const Vector& x) const {
  require_same_dim(dim(), x.size(), "Observable::apply");
  if (diagonal_) return values_.cwiseProduct(x);
  return matrix_ * x;
}

Observable Observable::shifted(double c) const {
  if (diagonal_) return diagonal(values_.array() - c);
  Matrix m = matrix_;
  m.diagonal().array() -= c;
  return dense(std::move(m));
}

double inner(const Vector& u, const Vector& v) {
  require_same_dim(u.size(), v.size(), "inner");
  return u.dot(v);
}

double expectation(const Observable& x, const StateVector& psi) {
  require_same_dim(x.dim(), psi.dim(), "expectation");
  const Vector& c = psi.components();
  if (x.is_diagonal()) return x.values().dot(c.cwiseAbs2());
  return c.dot(x.matrix() * c);
}

double central_moment(const Observable& x, const StateVector& psi, int order) {
  if (order < 1 || order > 4) {
    throw std::invalid_argument("central_moment: order must be in 1..4");
  }
  require_same_dim(x.dim(), psi.dim(), "central_moment");
  const Vector& c = psi.components();
  const double mean = expectation(x, psi);
  if (x.is_diagonal()) {
    const Vector d = x.values().array() - mean;
    return c.cwiseAbs2().dot(d.array().pow(order).matrix());
  }
  // <psi, Xt^n psi> via matrix-vector products of the deviation Xt = X - mean.
  const Observable xt = x.shifted(mean);
  const Vector v1 = xt.apply(c);
  switch (order) {
    case 1:
      return c.dot(v1);
    case 2:
      return v1.squaredNorm();
    case 3:
      return v1.dot(xt.apply(v1));
    default: {
      const Vector v2 = xt.apply(v1);
      return v2.squaredNorm();
    }
  }
}

Observable deviation(const Observable& x, const StateVector& psi) {
  require_same_dim(x.dim(), psi.dim(), "deviation");
  return x.shifted(expectation(x, psi));
}

DerivativeFrame orthogonalize(const std::vector<Vector>& raw_derivatives, double tol) {
  if (raw_derivatives.empty()) {
    throw std::invalid_argument("orthogonalize: empty input");
  }
  const Eigen::Index dim = raw_derivatives.front().size();
  const double n0 = raw_derivatives.front().squaredNorm();
  if (std::abs(n0 - 1.0) > 1e-10) {
    throw std::invalid_argument("orthogonalize: first vector must be unit norm");
  }

  DerivativeFrame frame;
  frame.tol = tol;
  frame.vectors.reserve(raw_derivatives.size());
  for (const Vector& raw : raw_derivatives) {
    if (raw.size() != dim) {
      throw DimensionError("orthogonalize: inputs differ in length");
    }
    Vector w = raw;
    // Two projection passes keep the retained directions orthogonal to
    // near machine precision even after heavy cancellation.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < frame.vectors.size(); ++i) {
        if (frame.degenerate[i]) continue;
        w -= (frame.vectors[i].dot(w) / frame.squared_norms[i]) * frame.vectors[i];
      }
    }
    const double n2 = w.squaredNorm();
    frame.vectors.push_back(std::move(w));
    frame.squared_norms.push_back(n2);
    frame.degenerate.push_back(n2 < tol);
  }
  return frame;
}

}  // namespace thermogeom
