#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace spinstat {

using Rational = boost::rational<std::int64_t>;

/// floor(r) as an integer, rounding toward minus infinity.
std::int64_t floor_to_int(const Rational& r);

/// Reduce r into [0, 1).
Rational mod_one(const Rational& r);

/// A real number carried either exactly as a rational or inexactly as a
/// double. Exactness propagates through arithmetic; downstream predicates
/// use it to pick exact comparison over a tolerance.
class ExactReal {
 public:
  ExactReal() : value_(Rational(0)) {}
  ExactReal(Rational r) : value_(std::move(r)) {}
  ExactReal(double d) : value_(d) {}
  ExactReal(int v) : value_(Rational(v)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  /// Exact value; only valid when is_exact().
  const Rational& rational() const { return std::get<Rational>(value_); }

  double as_double() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);

  /// Accepts "p/q" (exact), integer literals (exact), and decimal or
  /// scientific literals (inexact). Returns nullopt on malformed input.
  static std::optional<ExactReal> parse(std::string_view text);

  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

/// True when x is an integer: exact test for rationals, |x - round(x)| < tol
/// for doubles.
bool is_integer(const ExactReal& x, double tol = 1e-12);

/// A unit-modulus complex number e^{2 pi i t}, stored as the number of turns
/// t reduced into [0, 1). Rational turns stay exact under products and
/// powers; otherwise the phase degrades to a double-precision turn count and
/// comparisons fall back to a tolerance of 1e-12 turns.
class Phase {
 public:
  /// The trivial phase +1.
  Phase() : turns_(Rational(0)) {}

  static Phase from_turns(const Rational& turns);
  static Phase from_turns(double turns);
  static Phase from_turns(const ExactReal& turns);
  static Phase one() { return Phase(); }

  bool is_exact() const { return std::holds_alternative<Rational>(turns_); }

  /// Turns as an exact rational in [0, 1); only valid when is_exact().
  const Rational& exact_turns() const { return std::get<Rational>(turns_); }

  /// Turns as a double in [0, 1), regardless of exactness.
  double turns() const;

  /// The represented complex number e^{2 pi i turns}. Quarter-turn multiples
  /// map to exact unit values (+1, +i, -1, -i).
  std::complex<double> value() const;

  /// This phase raised to an integer power; exact when the turns are.
  Phase pow(std::int64_t m) const;

  friend Phase operator*(const Phase& a, const Phase& b);

  /// Exact comparison when both sides are exact, otherwise circular
  /// distance in turns below 1e-12.
  friend bool operator==(const Phase& a, const Phase& b);
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::variant<Rational, double> turns_;
};

/// Circular distance between two phases measured in turns, in [0, 1/2].
double phase_distance_turns(const Phase& a, const Phase& b);

bool approx_equal(const Phase& a, const Phase& b, double tol_turns);

}  // namespace spinstat
