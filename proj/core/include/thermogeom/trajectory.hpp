#pragma once

#include "thermogeom/geometry.hpp"
#include "thermogeom/gibbs.hpp"

namespace thermogeom {

/// Curvature of the thermal curve at one β, with the central energy moments
/// it was built from. curvature * speed_squared² = acceleration_squared.
struct CurvatureReport {
  double beta;
  double speed_squared;
  double acceleration_squared;
  double curvature;
  double mu2;
  double mu3;
  double mu4;
};

/// G_ij at a parameter point; for thermal families this is the covariance
/// matrix of the Hamiltonians, equal to the Hessian of the log-partition.
struct FisherRaoMetric {
  Vector theta;
  Matrix matrix;
};

/// dψ/dβ = -½ (H - <H>) ψ. Single-parameter states only.
Vector velocity(const GibbsFamily& model, const ThermalState& state);

/// Component of d²ψ/dβ² orthogonal to ψ and to the velocity:
/// ψ₂ = ¼ (H̃²ψ - (μ₃/μ₂) H̃ψ - μ₂ψ). Requires nonzero energy variance.
Vector acceleration(const GibbsFamily& model, const ThermalState& state);

/// Curvature K = μ₄/μ₂² - μ₃²/μ₂³ - 1 of the thermal curve. The moment
/// formula is cross-checked against |ψ₂|²/|ψ₁|⁴ and must agree to 1e-8.
CurvatureReport curvature(const GibbsFamily& model, const ThermalState& state);

/// ψ and its β-derivatives up to order n_max, Gram-Schmidt orthogonalized.
/// Orders <= 4 use the closed-form derivative recursion; higher orders fall
/// back to Richardson-extrapolated central differences. n_max <= K - 1.
DerivativeFrame derivative_frame(const GibbsFamily& model, const ThermalState& state,
                                 int n_max, double tol = kFrameTolerance);

/// Covariance form of the metric; equals 4 <∂_iψ, ∂_jψ> and the Hessian of W.
FisherRaoMetric fisher_rao_metric(const GibbsFamily& model, const Vector& theta);

/// C = β² ΔH² (k_B = 1); 0 at β = 0.
double heat_capacity(const GibbsFamily& model, double beta);

/// dG/dβ for the single-parameter metric G(β) = ΔH²; equals -<H̃³>, the third
/// β-derivative of the log-partition.
double metric_beta_derivative(const GibbsFamily& model, double beta);

}  // namespace thermogeom
