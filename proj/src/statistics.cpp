#include "spinstat/statistics.hpp"

namespace spinstat {

Phase scalar_rep(const BraidWord& w, const Phase& kappa) {
  return kappa.pow(exponent_sum(w));
}

Phase composite_statistics_phase(const Phase& kappa, int n) {
  if (n < 1)
    throw InvalidStrandCount("composite statistics phase needs n >= 1, got " +
                             std::to_string(n));
  return kappa.pow(static_cast<std::int64_t>(n) * n);
}

Phase rotation_phase(const Phase& kappa, int n) {
  if (n < 1)
    throw InvalidStrandCount("rotation phase needs n >= 1, got " +
                             std::to_string(n));
  return kappa.pow(static_cast<std::int64_t>(n) * (n - 1));
}

Phase d_n_two_pi(const SpinAssignment& sa, const Phase& kappa) {
  return Phase::from_turns(sa.s_n) * rotation_phase(kappa, sa.n);
}

bool spin_statistics_single(const ExactReal& s, const Phase& kappa) {
  return Phase::from_turns(s) == kappa;
}

bool composite_spin_statistics(const SpinAssignment& sa) {
  return is_integer(sa.s_n - ExactReal(Rational(sa.n)) * sa.s);
}

}  // namespace spinstat
