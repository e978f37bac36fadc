#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace thermogeom {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Tolerance on |psi|^2 - 1 for vectors claiming to live on the unit sphere.
inline constexpr double kNormTolerance = 1e-12;

/// Squared-norm cutoff below which a frame direction counts as degenerate.
inline constexpr double kFrameTolerance = 1e-12;

/// Thrown when two arguments disagree on dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A unit vector in the real Hilbert space of square-root densities.
///
/// Thermal states additionally have all components >= 0 (they live on the
/// positive part of the sphere); that is checked where it matters, not here.
class StateVector {
 public:
  explicit StateVector(Vector components, double norm_tol = kNormTolerance);

  /// Rescales an arbitrary nonzero vector onto the unit sphere.
  static StateVector normalized(Vector components);

  const Vector& components() const { return components_; }
  double operator[](Eigen::Index k) const { return components_[k]; }
  Eigen::Index dim() const { return components_.size(); }

  bool nonnegative(double tol = 0.0) const;

 private:
  Vector components_;
};

/// A random variable: either a diagonal tensor (classical observable on the
/// configuration basis) or a dense symmetric matrix.
class Observable {
 public:
  static Observable diagonal(Vector values);
  static Observable dense(Matrix matrix, double symmetry_tol = 1e-12);

  bool is_diagonal() const { return diagonal_; }
  Eigen::Index dim() const;

  /// Diagonal entries; only valid for the diagonal kind.
  const Vector& values() const;
  /// Dense matrix; only valid for the dense kind.
  const Matrix& matrix() const;
  /// Materializes either kind as a dense matrix.
  Matrix to_matrix() const;

  /// Applies the tensor to a vector.
  Vector apply(const Vector& x) const;

  /// X - c * identity.
  Observable shifted(double c) const;

 private:
  Observable() = default;
  bool diagonal_ = true;
  Vector values_;
  Matrix matrix_;
};

/// State vector plus orthogonalized beta-derivatives, with squared norms.
/// Directions whose squared norm falls below `tol` are flagged degenerate and
/// take no further part in projections.
struct DerivativeFrame {
  std::vector<Vector> vectors;
  std::vector<double> squared_norms;
  std::vector<bool> degenerate;
  double tol = kFrameTolerance;
};

/// Euclidean inner product Σ u_k v_k.
double inner(const Vector& u, const Vector& v);

/// E_psi[X] = X_ab psi^a psi^b.
double expectation(const Observable& x, const StateVector& psi);

/// n-th central moment E_psi[(X - E_psi[X])^n], n in 1..4.
/// Dense observables are handled by repeated matrix-vector products.
double central_moment(const Observable& x, const StateVector& psi, int order);

/// X shifted by its own expectation, so that E_psi[deviation(X)] = 0.
Observable deviation(const Observable& x, const StateVector& psi);

/// Gram-Schmidt without normalization. The first input must be a unit vector;
/// near-null residual directions are flagged degenerate rather than divided by.
DerivativeFrame orthogonalize(const std::vector<Vector>& raw_derivatives,
                              double tol = kFrameTolerance);

}  // namespace thermogeom
