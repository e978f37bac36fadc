#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thermogeom/geometry.hpp"

namespace thermogeom {

enum class Boundary { periodic, free_ends };

/// Thrown by from_spectrum_file on malformed input; the message names the
/// offending field.
class SpectrumFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential family p_k ∝ w_k q_k exp(-Σ_j θ^j E_{j,k}) over a finite
/// level space. Level degeneracies enter as integer multiplicities w_k folded
/// into the base weights, keeping large models (e.g. spin chains collapsed to
/// their energy levels) compact.
class GibbsFamily {
 public:
  GibbsFamily(std::vector<Vector> hamiltonians, Vector base_weights,
              std::vector<std::uint64_t> multiplicities,
              std::vector<std::string> labels = {});

  /// Single-Hamiltonian family with unit weights and multiplicities.
  explicit GibbsFamily(Vector energies);

  Eigen::Index size() const { return base_weights_.size(); }
  int parameter_count() const { return static_cast<int>(hamiltonians_.size()); }

  const Vector& energies(int j = 0) const;
  Observable hamiltonian(int j = 0) const { return Observable::diagonal(energies(j)); }
  const Vector& base_weights() const { return base_weights_; }
  const std::vector<std::uint64_t>& multiplicities() const { return multiplicities_; }
  /// Empty when no labels were supplied.
  const std::vector<std::string>& labels() const { return labels_; }
  /// log(w_k q_k), precomputed once.
  const Vector& log_weights() const { return log_weights_; }

 private:
  std::vector<Vector> hamiltonians_;
  Vector base_weights_;
  std::vector<std::uint64_t> multiplicities_;
  std::vector<std::string> labels_;
  Vector log_weights_;
};

/// A point of the thermal manifold: parameter, state vector, log-partition.
struct ThermalState {
  Vector theta;
  StateVector psi;
  double log_partition;

  /// θ¹ for single-parameter states; throws otherwise.
  double beta() const;
};

/// log Σ_k w_k q_k exp(-Σ_j θ^j E_{j,k}), evaluated in shift-by-maximum form.
double log_partition(const GibbsFamily& model, const Vector& theta);
double log_partition(const GibbsFamily& model, double beta);

/// ψ_k = sqrt(w_k q_k) exp(-½ Σ_j θ^j E_{j,k} - ½ W_θ); unit norm, positive.
ThermalState thermal_state(const GibbsFamily& model, const Vector& theta);
ThermalState thermal_state(const GibbsFamily& model, double beta);

/// The θ = 0 centre point, where every configuration is equally weighted.
ThermalState infinite_temperature_state(const GibbsFamily& model);

/// ∂ψ/∂θ^j = -½ (E_{j,k} - <H_j>) ψ_k, orthogonal to ψ.
Vector state_derivative(const GibbsFamily& model, const ThermalState& state, int j);

/// Outcome probabilities of configuration projection, p_k = ψ_k².
Vector boltzmann_weights(const GibbsFamily& model, const Vector& theta);
Vector boltzmann_weights(const GibbsFamily& model, double beta);

/// Full enumeration of an N-spin chain with H = -J Σ s_i s_{i+1}; one level
/// per spin configuration. The periodic sum runs over all N bonds, so N = 2
/// counts its single bond twice. 2 <= N <= 24.
GibbsFamily ising_chain(int n_spins, double coupling, Boundary boundary);

/// n independent ±J bonds, collapsed to n+1 binomially degenerate levels.
/// Level m has energy (2m - n) J and multiplicity C(n, m).
GibbsFamily independent_bond_chain(int n_bonds, double coupling);

/// Loads a family from a JSON spectrum document; see the README for the
/// schema. Unknown fields are rejected.
GibbsFamily from_spectrum_file(const std::string& path);

}  // namespace thermogeom
