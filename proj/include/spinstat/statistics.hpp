#pragma once

#include "spinstat/braid.hpp"
#include "spinstat/phase.hpp"

namespace spinstat {

/// Spin data entering the rotation actions: the single-particle spin s and
/// the rotation weight s_n of the n-particle system.
struct SpinAssignment {
  ExactReal s;
  ExactReal s_n;
  int n;

  SpinAssignment(ExactReal s_, ExactReal s_n_, int n_)
      : s(std::move(s_)), s_n(std::move(s_n_)), n(n_) {
    if (n < 1)
      throw InvalidStrandCount("spin assignment needs n >= 1, got " +
                               std::to_string(n));
  }
};

/// The scalar representation sending every generator to kappa evaluates a
/// word to kappa^(exponent sum); well defined on rewriting classes.
Phase scalar_rep(const BraidWord& w, const Phase& kappa);

/// Statistics phase kappa^(n^2) of a bound cluster of n identical anyons;
/// certified by scalar_rep(cluster_exchange(n), kappa).
Phase composite_statistics_phase(const Phase& kappa, int n);

/// Phase kappa^(n(n-1)) picked up under a 2 pi rotation of n particles;
/// certified by scalar_rep(full_twist(n), kappa).
Phase rotation_phase(const Phase& kappa, int n);

/// D_n(2 pi) = e^{2 pi i s_n} kappa^(n(n-1)).
Phase d_n_two_pi(const SpinAssignment& sa, const Phase& kappa);

/// Single-particle spin-statistics connection: kappa = e^{2 pi i s}.
bool spin_statistics_single(const ExactReal& s, const Phase& kappa);

/// Composite spin-statistics condition: s_n - n s is an integer.
bool composite_spin_statistics(const SpinAssignment& sa);

}  // namespace spinstat
