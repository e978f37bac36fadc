#include "thermogeom/gibbs.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace thermogeom {

namespace {

// log-sum-exp exponents s_k = log(w q) - θ·E, shared by W and ψ.
Vector shifted_exponents(const GibbsFamily& model, const Vector& theta) {
  if (theta.size() != model.parameter_count()) {
    throw DimensionError("theta length does not match the family's parameter count");
  }
  if (!theta.allFinite()) {
    throw std::invalid_argument("theta must be finite");
  }
  Vector s = model.log_weights();
  for (int j = 0; j < model.parameter_count(); ++j) {
    s -= theta[j] * model.energies(j);
  }
  return s;
}

}  // namespace

GibbsFamily::GibbsFamily(std::vector<Vector> hamiltonians, Vector base_weights,
                         std::vector<std::uint64_t> multiplicities,
                         std::vector<std::string> labels)
    : hamiltonians_(std::move(hamiltonians)),
      base_weights_(std::move(base_weights)),
      multiplicities_(std::move(multiplicities)),
      labels_(std::move(labels)) {
  const Eigen::Index k = base_weights_.size();
  if (k == 0) throw std::invalid_argument("GibbsFamily: no levels");
  if (hamiltonians_.empty()) throw std::invalid_argument("GibbsFamily: at least one Hamiltonian required");
  for (const Vector& h : hamiltonians_) {
    if (h.size() != k) throw DimensionError("GibbsFamily: Hamiltonian length mismatch");
    if (!h.allFinite()) throw std::invalid_argument("GibbsFamily: non-finite energy");
  }
  if (!(base_weights_.array() > 0.0).all() || !base_weights_.allFinite()) {
    throw std::invalid_argument("GibbsFamily: base weights must be positive and finite");
  }
  if (multiplicities_.size() != static_cast<std::size_t>(k)) {
    throw DimensionError("GibbsFamily: multiplicity count mismatch");
  }
  for (std::uint64_t m : multiplicities_) {
    if (m < 1) throw std::invalid_argument("GibbsFamily: multiplicities must be >= 1");
  }
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(k)) {
    throw DimensionError("GibbsFamily: label count mismatch");
  }
  log_weights_.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    log_weights_[i] = std::log(base_weights_[i]) +
                      std::log(static_cast<double>(multiplicities_[i]));
  }
}

GibbsFamily::GibbsFamily(Vector energies)
    : GibbsFamily({energies}, Vector::Ones(energies.size()),
                  std::vector<std::uint64_t>(energies.size(), 1)) {}

const Vector& GibbsFamily::energies(int j) const {
  if (j < 0 || j >= parameter_count()) {
    throw std::out_of_range("GibbsFamily::energies: index " + std::to_string(j));
  }
  return hamiltonians_[static_cast<std::size_t>(j)];
}

double ThermalState::beta() const {
  if (theta.size() != 1) {
    throw std::invalid_argument("ThermalState::beta: state is multi-parameter");
  }
  return theta[0];
}

double log_partition(const GibbsFamily& model, const Vector& theta) {
  const Vector s = shifted_exponents(model, theta);
  const double m = s.maxCoeff();
  return m + std::log((s.array() - m).exp().sum());
}

double log_partition(const GibbsFamily& model, double beta) {
  return log_partition(model, Vector::Constant(1, beta));
}

ThermalState thermal_state(const GibbsFamily& model, const Vector& theta) {
  const Vector s = shifted_exponents(model, theta);
  const double m = s.maxCoeff();
  const Vector shifted = (s.array() - m).exp();
  const double z = shifted.sum();
  const double w = m + std::log(z);
  Vector psi = ((s.array() - w) * 0.5).exp();
  psi /= psi.norm();
  return ThermalState{theta, StateVector(std::move(psi)), w};
}

ThermalState thermal_state(const GibbsFamily& model, double beta) {
  return thermal_state(model, Vector::Constant(1, beta));
}

ThermalState infinite_temperature_state(const GibbsFamily& model) {
  return thermal_state(model, Vector::Zero(model.parameter_count()));
}

Vector state_derivative(const GibbsFamily& model, const ThermalState& state, int j) {
  if (j < 0 || j >= model.parameter_count()) {
    throw std::out_of_range("state_derivative: parameter index out of range");
  }
  const Vector& e = model.energies(j);
  const Vector& c = state.psi.components();
  const double mean = e.dot(c.cwiseAbs2());
  return -0.5 * (e.array() - mean).matrix().cwiseProduct(c);
}

Vector boltzmann_weights(const GibbsFamily& model, const Vector& theta) {
  return thermal_state(model, theta).psi.components().cwiseAbs2();
}

Vector boltzmann_weights(const GibbsFamily& model, double beta) {
  return boltzmann_weights(model, Vector::Constant(1, beta));
}

GibbsFamily ising_chain(int n_spins, double coupling, Boundary boundary) {
  if (n_spins < 2 || n_spins > 24) {
    throw std::invalid_argument("ising_chain: N must be in [2, 24]");
  }
  const std::uint64_t n_conf = std::uint64_t{1} << n_spins;
  const int n_bonds = boundary == Boundary::periodic ? n_spins : n_spins - 1;
  Vector energies(static_cast<Eigen::Index>(n_conf));
  for (std::uint64_t x = 0; x < n_conf; ++x) {
    // bit i of x ^ (x >> 1) marks an antiparallel bond (i, i+1); the
    // periodic bond (N-1, 0) compares the end bits directly.
    std::uint64_t mism = (x ^ (x >> 1)) & ((std::uint64_t{1} << (n_spins - 1)) - 1);
    int anti = std::popcount(mism);
    if (boundary == Boundary::periodic) {
      anti += static_cast<int>((x ^ (x >> (n_spins - 1))) & 1);
    }
    energies[static_cast<Eigen::Index>(x)] = -coupling * (n_bonds - 2 * anti);
  }
  return GibbsFamily(std::move(energies));
}

GibbsFamily independent_bond_chain(int n_bonds, double coupling) {
  if (n_bonds < 1) {
    throw std::invalid_argument("independent_bond_chain: n_bonds must be >= 1");
  }
  if (n_bonds > 64) {
    throw std::invalid_argument("independent_bond_chain: n_bonds must be <= 64");
  }
  const Eigen::Index k = n_bonds + 1;
  Vector energies(k);
  std::vector<std::uint64_t> mult(static_cast<std::size_t>(k));
  unsigned __int128 c = 1;  // C(n, m), exact up to n = 64
  for (Eigen::Index m = 0; m < k; ++m) {
    energies[m] = (2.0 * static_cast<double>(m) - n_bonds) * coupling;
    mult[static_cast<std::size_t>(m)] = static_cast<std::uint64_t>(c);
    c = c * static_cast<unsigned __int128>(n_bonds - m) / static_cast<unsigned __int128>(m + 1);
  }
  return GibbsFamily({std::move(energies)}, Vector::Ones(k), std::move(mult));
}

}  // namespace thermogeom
