#pragma once

#include "spinstat/phase.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinstat {

class CoveringError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidGridSpec : public CoveringError {
  using CoveringError::CoveringError;
};

class GridMismatch : public CoveringError {
  using CoveringError::CoveringError;
};

class KappaMismatch : public CoveringError {
  using CoveringError::CoveringError;
};

/// Aligned polar discretization shared by the plane and the covered cone:
/// M angular samples (phi_j = 2 pi j / M on the plane, chi_j = pi j / M on
/// the cone's fundamental domain) over K positive radial nodes. The radial
/// weights approximate the dr integral only; the r factor of the measure is
/// applied by the inner products.
class PolarGridSpec {
 public:
  PolarGridSpec(int angular_samples, std::vector<double> radial_nodes,
                std::vector<double> radial_weights);

  int angular_samples() const { return angular_samples_; }
  int radial_count() const { return static_cast<int>(radial_nodes_.size()); }

  double radial_node(int i) const {
    return radial_nodes_[static_cast<std::size_t>(i)];
  }
  double radial_weight(int i) const {
    return radial_weights_[static_cast<std::size_t>(i)];
  }

  /// Plane angle of column j.
  double phi(int j) const;
  /// Cone angle of column j, inside the fundamental domain [0, pi).
  double chi(int j) const;

  std::size_t sample_count() const {
    return radial_nodes_.size() * static_cast<std::size_t>(angular_samples_);
  }

  friend bool operator==(const PolarGridSpec&, const PolarGridSpec&) = default;

 private:
  int angular_samples_;
  std::vector<double> radial_nodes_;
  std::vector<double> radial_weights_;
};

/// Composite trapezoid weights on [r_min, r_max]; the K = 1 case degenerates
/// to a midpoint rule over the full interval.
PolarGridSpec trapezoid_grid(int angular_samples, int radial_count,
                             double r_min, double r_max);

/// Samples of a single-particle state on the plane, entry (i, j) holding
/// Psi(r_i, phi_j). Values are immutable after construction.
class PlaneWaveFunction {
 public:
  PlaneWaveFunction(PolarGridSpec grid, std::vector<std::complex<double>> samples);

  static PlaneWaveFunction zero(PolarGridSpec grid);

  /// Build from a callable f(r, phi) -> complex.
  template <class F>
  static PlaneWaveFunction sampled(const PolarGridSpec& grid, F&& f) {
    std::vector<std::complex<double>> samples;
    samples.reserve(grid.sample_count());
    for (int i = 0; i < grid.radial_count(); ++i)
      for (int j = 0; j < grid.angular_samples(); ++j)
        samples.push_back(f(grid.radial_node(i), grid.phi(j)));
    return PlaneWaveFunction(grid, std::move(samples));
  }

  const PolarGridSpec& grid() const { return grid_; }
  std::complex<double> at(int i, int j) const {
    return samples_[static_cast<std::size_t>(i) *
                        static_cast<std::size_t>(grid_.angular_samples()) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<std::complex<double>>& samples() const { return samples_; }

 private:
  PolarGridSpec grid_;
  std::vector<std::complex<double>> samples_;
};

/// Samples of a relative two-particle state on the fundamental domain
/// chi in [0, pi) of the covered cone, together with the statistics phase
/// kappa. The equivariant extension Phi(r, chi0 + k pi) = kappa^{-k}
/// Phi(r, chi0) defines the state on the whole cover.
class RelativeWaveFunction {
 public:
  RelativeWaveFunction(PolarGridSpec grid, Phase kappa,
                       std::vector<std::complex<double>> samples);

  template <class F>
  static RelativeWaveFunction sampled(const PolarGridSpec& grid, Phase kappa,
                                      F&& f) {
    std::vector<std::complex<double>> samples;
    samples.reserve(grid.sample_count());
    for (int i = 0; i < grid.radial_count(); ++i)
      for (int j = 0; j < grid.angular_samples(); ++j)
        samples.push_back(f(grid.radial_node(i), grid.chi(j)));
    return RelativeWaveFunction(grid, std::move(kappa), std::move(samples));
  }

  const PolarGridSpec& grid() const { return grid_; }
  const Phase& kappa() const { return kappa_; }
  std::complex<double> at(int i, int j) const {
    return samples_[static_cast<std::size_t>(i) *
                        static_cast<std::size_t>(grid_.angular_samples()) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<std::complex<double>>& samples() const { return samples_; }

 private:
  PolarGridSpec grid_;
  Phase kappa_;
  std::vector<std::complex<double>> samples_;
};

/// Gauss-bracket wrap of an angle into [0, 2 pi).
double gauss_wrap(double xi);

/// Rotation action D_1 at the grid-aligned angle theta = 2 pi k / M:
/// entry (i, j) becomes e^{i s theta} psi(i, (j - k) mod M).
PlaneWaveFunction rotate_plane(const PlaneWaveFunction& psi, int k,
                               const ExactReal& s);

/// Relative rotation at theta = pi k / M, using the equivariant extension
/// for columns shifted out of the fundamental domain. A shift by M (theta
/// = pi) multiplies by kappa.
RelativeWaveFunction rotate_relative(const RelativeWaveFunction& phi, int k);

/// The unitary intertwiner V: (V psi)(r, chi) = e^{-2 i s chi}
/// psi(r, Lambda(2 chi)). On the aligned grid Lambda(2 chi_j) = phi_j, so V
/// is the diagonal phase e^{-2 i s chi_j} on samples; the output carries
/// kappa = e^{2 pi i s}.
RelativeWaveFunction intertwiner_v(const PlaneWaveFunction& psi,
                                   const ExactReal& s);

/// Adjoint of the intertwiner: the diagonal phase e^{+i s phi_j}. Requires
/// the input's kappa to equal e^{2 pi i s}.
PlaneWaveFunction intertwiner_v_adjoint(const RelativeWaveFunction& phi,
                                        const ExactReal& s);

/// L^2(R^2) inner product under the polar measure r dr dphi:
/// (2 pi / M) sum_i w_i r_i sum_j conj(a_ij) b_ij.
std::complex<double> inner_plane(const PlaneWaveFunction& a,
                                 const PlaneWaveFunction& b);

/// L^2_kappa inner product over the fundamental domain with measure
/// 2 r dr dchi, the normalization under which V is exactly unitary.
std::complex<double> inner_relative(const RelativeWaveFunction& a,
                                    const RelativeWaveFunction& b);

double norm_plane(const PlaneWaveFunction& a);
double norm_relative(const RelativeWaveFunction& a);

PlaneWaveFunction operator-(const PlaneWaveFunction& a,
                            const PlaneWaveFunction& b);
RelativeWaveFunction operator-(const RelativeWaveFunction& a,
                               const RelativeWaveFunction& b);
PlaneWaveFunction operator*(std::complex<double> c, const PlaneWaveFunction& a);
RelativeWaveFunction operator*(std::complex<double> c,
                               const RelativeWaveFunction& a);

/// || D_2^rel(theta) V psi - V D_1(2 theta) psi ||, theta = pi k / M.
/// Zero up to roundoff for every k and spin.
double intertwining_residual(const PlaneWaveFunction& psi, int k,
                             const ExactReal& s);

/// || D_1(-2 theta) V* D_2^rel(theta) V psi - psi ||, theta = pi k / M.
double theorem1_roundtrip_residual(const PlaneWaveFunction& psi, int k,
                                   const ExactReal& s);

/// || rotate_relative(V psi, M) - kappa_claim V psi ||, with the extension
/// rule driven by the true phase e^{2 pi i s}. Vanishes for nonzero psi
/// exactly when kappa_claim = e^{2 pi i s}.
double equivariance_defect(const PlaneWaveFunction& psi, const ExactReal& s,
                           const Phase& kappa_claim);

/// Angular-momentum eigenmode r^{|m|} e^{-r^2/2} e^{i m phi}.
PlaneWaveFunction angular_mode_packet(const PolarGridSpec& grid, int m);

/// Deterministic pseudo-random samples (standard complex Gaussian entries).
PlaneWaveFunction random_wavefunction(const PolarGridSpec& grid,
                                      std::uint64_t seed);

}  // namespace spinstat
