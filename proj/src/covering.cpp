#include "spinstat/covering.hpp"

#include <cmath>
#include <random>
#include <string>

namespace spinstat {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

// floor division for a shift by b > 0
std::pair<int, int> floor_divmod(int a, int b) {
  int q = a / b;
  int r = a % b;
  if (r < 0) {
    --q;
    r += b;
  }
  return {q, r};
}

// e^{2 pi i (s k / m)}, exact in turns when s is
Phase phase_of_ratio(const ExactReal& s, int k, int m) {
  if (s.is_exact()) return Phase::from_turns(s.rational() * Rational(k, m));
  return Phase::from_turns(s.as_double() * static_cast<double>(k) /
                           static_cast<double>(m));
}

void require_same_grid(const PolarGridSpec& a, const PolarGridSpec& b) {
  if (!(a == b)) throw GridMismatch("wave functions live on different grids");
}

std::complex<double> weighted_sum(const PolarGridSpec& grid,
                                  const std::vector<std::complex<double>>& a,
                                  const std::vector<std::complex<double>>& b) {
  const int m = grid.angular_samples();
  std::complex<double> total = 0.0;
  for (int i = 0; i < grid.radial_count(); ++i) {
    std::complex<double> row = 0.0;
    const std::size_t base =
        static_cast<std::size_t>(i) * static_cast<std::size_t>(m);
    for (int j = 0; j < m; ++j)
      row += std::conj(a[base + static_cast<std::size_t>(j)]) *
             b[base + static_cast<std::size_t>(j)];
    total += grid.radial_weight(i) * grid.radial_node(i) * row;
  }
  return total;
}

}  // namespace

PolarGridSpec::PolarGridSpec(int angular_samples,
                             std::vector<double> radial_nodes,
                             std::vector<double> radial_weights)
    : angular_samples_(angular_samples),
      radial_nodes_(std::move(radial_nodes)),
      radial_weights_(std::move(radial_weights)) {
  if (angular_samples_ < 2 || angular_samples_ % 2 != 0)
    throw InvalidGridSpec("angular sample count must be even and >= 2, got " +
                          std::to_string(angular_samples_));
  if (radial_nodes_.empty())
    throw InvalidGridSpec("at least one radial node is required");
  if (radial_nodes_.size() != radial_weights_.size())
    throw InvalidGridSpec("radial nodes and weights differ in length");
  double prev = 0.0;
  for (double r : radial_nodes_) {
    if (!(r > prev))
      throw InvalidGridSpec(
          "radial nodes must be positive and strictly increasing");
    prev = r;
  }
  for (double w : radial_weights_)
    if (!(w > 0.0)) throw InvalidGridSpec("radial weights must be positive");
}

double PolarGridSpec::phi(int j) const {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(angular_samples_);
}

double PolarGridSpec::chi(int j) const {
  return kPi * static_cast<double>(j) / static_cast<double>(angular_samples_);
}

PolarGridSpec trapezoid_grid(int angular_samples, int radial_count,
                             double r_min, double r_max) {
  if (radial_count < 1)
    throw InvalidGridSpec("radial count must be >= 1");
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw InvalidGridSpec("need 0 < r_min < r_max");
  std::vector<double> nodes, weights;
  if (radial_count == 1) {
    nodes.push_back(0.5 * (r_min + r_max));
    weights.push_back(r_max - r_min);
  } else {
    const double h = (r_max - r_min) / static_cast<double>(radial_count - 1);
    for (int i = 0; i < radial_count; ++i) {
      nodes.push_back(r_min + h * static_cast<double>(i));
      weights.push_back((i == 0 || i == radial_count - 1) ? 0.5 * h : h);
    }
  }
  return PolarGridSpec(angular_samples, std::move(nodes), std::move(weights));
}

PlaneWaveFunction::PlaneWaveFunction(PolarGridSpec grid,
                                     std::vector<std::complex<double>> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.sample_count())
    throw InvalidGridSpec("sample array does not match the grid shape");
}

PlaneWaveFunction PlaneWaveFunction::zero(PolarGridSpec grid) {
  std::vector<std::complex<double>> samples(grid.sample_count(), 0.0);
  return PlaneWaveFunction(std::move(grid), std::move(samples));
}

RelativeWaveFunction::RelativeWaveFunction(
    PolarGridSpec grid, Phase kappa, std::vector<std::complex<double>> samples)
    : grid_(std::move(grid)), kappa_(std::move(kappa)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.sample_count())
    throw InvalidGridSpec("sample array does not match the grid shape");
}

double gauss_wrap(double xi) {
  double r = xi - kTwoPi * std::floor(xi / kTwoPi);
  if (r >= kTwoPi) r -= kTwoPi;
  if (r < 0.0) r += kTwoPi;
  return r;
}

PlaneWaveFunction rotate_plane(const PlaneWaveFunction& psi, int k,
                               const ExactReal& s) {
  const int m = psi.grid().angular_samples();
  const std::complex<double> factor = phase_of_ratio(s, k, m).value();
  std::vector<std::complex<double>> out;
  out.reserve(psi.grid().sample_count());
  for (int i = 0; i < psi.grid().radial_count(); ++i)
    for (int j = 0; j < m; ++j)
      out.push_back(factor * psi.at(i, floor_divmod(j - k, m).second));
  return PlaneWaveFunction(psi.grid(), std::move(out));
}

RelativeWaveFunction rotate_relative(const RelativeWaveFunction& phi, int k) {
  const int m = phi.grid().angular_samples();
  std::vector<std::complex<double>> factors;
  std::vector<int> sources;
  factors.reserve(static_cast<std::size_t>(m));
  sources.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto [q, j0] = floor_divmod(j - k, m);
    factors.push_back(phi.kappa().pow(-q).value());
    sources.push_back(j0);
  }
  std::vector<std::complex<double>> out;
  out.reserve(phi.grid().sample_count());
  for (int i = 0; i < phi.grid().radial_count(); ++i)
    for (int j = 0; j < m; ++j)
      out.push_back(factors[static_cast<std::size_t>(j)] *
                    phi.at(i, sources[static_cast<std::size_t>(j)]));
  return RelativeWaveFunction(phi.grid(), phi.kappa(), std::move(out));
}

RelativeWaveFunction intertwiner_v(const PlaneWaveFunction& psi,
                                   const ExactReal& s) {
  const int m = psi.grid().angular_samples();
  std::vector<std::complex<double>> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    factors.push_back(phase_of_ratio(s, -j, m).value());  // e^{-2 i s chi_j}
  std::vector<std::complex<double>> out;
  out.reserve(psi.grid().sample_count());
  for (int i = 0; i < psi.grid().radial_count(); ++i)
    for (int j = 0; j < m; ++j)
      out.push_back(factors[static_cast<std::size_t>(j)] * psi.at(i, j));
  return RelativeWaveFunction(psi.grid(), Phase::from_turns(s), std::move(out));
}

PlaneWaveFunction intertwiner_v_adjoint(const RelativeWaveFunction& phi,
                                        const ExactReal& s) {
  if (phi.kappa() != Phase::from_turns(s))
    throw KappaMismatch(
        "relative state's kappa does not equal e^{2 pi i s} for spin s = " +
        s.to_string());
  const int m = phi.grid().angular_samples();
  std::vector<std::complex<double>> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    factors.push_back(phase_of_ratio(s, j, m).value());  // e^{+i s phi_j}
  std::vector<std::complex<double>> out;
  out.reserve(phi.grid().sample_count());
  for (int i = 0; i < phi.grid().radial_count(); ++i)
    for (int j = 0; j < m; ++j)
      out.push_back(factors[static_cast<std::size_t>(j)] * phi.at(i, j));
  return PlaneWaveFunction(phi.grid(), std::move(out));
}

std::complex<double> inner_plane(const PlaneWaveFunction& a,
                                 const PlaneWaveFunction& b) {
  require_same_grid(a.grid(), b.grid());
  const double prefactor =
      kTwoPi / static_cast<double>(a.grid().angular_samples());
  return prefactor * weighted_sum(a.grid(), a.samples(), b.samples());
}

std::complex<double> inner_relative(const RelativeWaveFunction& a,
                                    const RelativeWaveFunction& b) {
  require_same_grid(a.grid(), b.grid());
  if (a.kappa() != b.kappa())
    throw KappaMismatch("relative states carry different statistics phases");
  const double prefactor =
      2.0 * (kPi / static_cast<double>(a.grid().angular_samples()));
  return prefactor * weighted_sum(a.grid(), a.samples(), b.samples());
}

double norm_plane(const PlaneWaveFunction& a) {
  return std::sqrt(std::max(0.0, inner_plane(a, a).real()));
}

double norm_relative(const RelativeWaveFunction& a) {
  return std::sqrt(std::max(0.0, inner_relative(a, a).real()));
}

PlaneWaveFunction operator-(const PlaneWaveFunction& a,
                            const PlaneWaveFunction& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<std::complex<double>> out(a.samples());
  for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] -= b.samples()[idx];
  return PlaneWaveFunction(a.grid(), std::move(out));
}

RelativeWaveFunction operator-(const RelativeWaveFunction& a,
                               const RelativeWaveFunction& b) {
  require_same_grid(a.grid(), b.grid());
  if (a.kappa() != b.kappa())
    throw KappaMismatch("cannot subtract relative states with different kappa");
  std::vector<std::complex<double>> out(a.samples());
  for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] -= b.samples()[idx];
  return RelativeWaveFunction(a.grid(), a.kappa(), std::move(out));
}

PlaneWaveFunction operator*(std::complex<double> c, const PlaneWaveFunction& a) {
  std::vector<std::complex<double>> out(a.samples());
  for (auto& v : out) v *= c;
  return PlaneWaveFunction(a.grid(), std::move(out));
}

RelativeWaveFunction operator*(std::complex<double> c,
                               const RelativeWaveFunction& a) {
  std::vector<std::complex<double>> out(a.samples());
  for (auto& v : out) v *= c;
  return RelativeWaveFunction(a.grid(), a.kappa(), std::move(out));
}

double intertwining_residual(const PlaneWaveFunction& psi, int k,
                             const ExactReal& s) {
  const RelativeWaveFunction lhs = rotate_relative(intertwiner_v(psi, s), k);
  const RelativeWaveFunction rhs = intertwiner_v(rotate_plane(psi, k, s), s);
  return norm_relative(lhs - rhs);
}

double theorem1_roundtrip_residual(const PlaneWaveFunction& psi, int k,
                                   const ExactReal& s) {
  const RelativeWaveFunction rotated = rotate_relative(intertwiner_v(psi, s), k);
  const PlaneWaveFunction back =
      rotate_plane(intertwiner_v_adjoint(rotated, s), -k, s);
  return norm_plane(back - psi);
}

double equivariance_defect(const PlaneWaveFunction& psi, const ExactReal& s,
                           const Phase& kappa_claim) {
  const RelativeWaveFunction v = intertwiner_v(psi, s);
  const RelativeWaveFunction rotated = rotate_relative(v, psi.grid().angular_samples());
  return norm_relative(rotated - kappa_claim.value() * v);
}

PlaneWaveFunction angular_mode_packet(const PolarGridSpec& grid, int m) {
  return PlaneWaveFunction::sampled(grid, [m](double r, double phi) {
    const double radial =
        std::pow(r, std::abs(m)) * std::exp(-0.5 * r * r);
    return std::polar(radial, static_cast<double>(m) * phi);
  });
}

PlaneWaveFunction random_wavefunction(const PolarGridSpec& grid,
                                      std::uint64_t seed) {
  // Box-Muller over raw mt19937_64 output; avoids std::*_distribution so the
  // stream is identical across standard library implementations.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  auto gaussian = [&]() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
  };
  std::vector<std::complex<double>> samples;
  samples.reserve(grid.sample_count());
  for (std::size_t idx = 0; idx < grid.sample_count(); ++idx) {
    const double re = gaussian();
    const double im = gaussian();
    samples.emplace_back(re, im);
  }
  return PlaneWaveFunction(grid, std::move(samples));
}

}  // namespace spinstat
