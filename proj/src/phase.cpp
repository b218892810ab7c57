#include "spinstat/phase.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace spinstat {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_unit(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r += 1.0;
  return r;
}

std::string double_to_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::int64_t floor_to_int(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Rational mod_one(const Rational& r) { return r - Rational(floor_to_int(r)); }

double ExactReal::as_double() const {
  if (is_exact()) {
    const Rational& r = rational();
    return static_cast<double>(r.numerator()) /
           static_cast<double>(r.denominator());
  }
  return std::get<double>(value_);
}

ExactReal ExactReal::operator-() const {
  if (is_exact()) return ExactReal(-rational());
  return ExactReal(-std::get<double>(value_));
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  if (a.is_exact() && b.is_exact()) return ExactReal(a.rational() + b.rational());
  return ExactReal(a.as_double() + b.as_double());
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  if (a.is_exact() && b.is_exact()) return ExactReal(a.rational() - b.rational());
  return ExactReal(a.as_double() - b.as_double());
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  if (a.is_exact() && b.is_exact()) return ExactReal(a.rational() * b.rational());
  return ExactReal(a.as_double() * b.as_double());
}

std::optional<ExactReal> ExactReal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t num = 0, den = 0;
    const char* nb = text.data();
    const char* ne = text.data() + slash;
    const char* db = text.data() + slash + 1;
    const char* de = text.data() + text.size();
    auto rn = std::from_chars(nb, ne, num);
    auto rd = std::from_chars(db, de, den);
    if (rn.ec != std::errc() || rn.ptr != ne) return std::nullopt;
    if (rd.ec != std::errc() || rd.ptr != de) return std::nullopt;
    if (den == 0) return std::nullopt;
    return ExactReal(Rational(num, den));
  }
  if (text.find('.') == std::string_view::npos &&
      text.find('e') == std::string_view::npos &&
      text.find('E') == std::string_view::npos) {
    std::int64_t v = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size())
      return std::nullopt;
    return ExactReal(Rational(v));
  }
  std::string owned(text);
  char* end = nullptr;
  double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) return std::nullopt;
  return ExactReal(v);
}

std::string ExactReal::to_string() const {
  if (is_exact()) {
    const Rational& r = rational();
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }
  return double_to_string(std::get<double>(value_));
}

bool is_integer(const ExactReal& x, double tol) {
  if (x.is_exact()) return x.rational().denominator() == 1;
  double v = x.as_double();
  return std::abs(v - std::round(v)) < tol;
}

Phase Phase::from_turns(const Rational& turns) {
  Phase p;
  p.turns_ = mod_one(turns);
  return p;
}

Phase Phase::from_turns(double turns) {
  Phase p;
  p.turns_ = wrap_unit(turns);
  return p;
}

Phase Phase::from_turns(const ExactReal& turns) {
  if (turns.is_exact()) return from_turns(turns.rational());
  return from_turns(turns.as_double());
}

double Phase::turns() const {
  if (is_exact()) {
    const Rational& r = exact_turns();
    return static_cast<double>(r.numerator()) /
           static_cast<double>(r.denominator());
  }
  return std::get<double>(turns_);
}

std::complex<double> Phase::value() const {
  if (is_exact()) {
    const Rational& t = exact_turns();
    if (t == Rational(0)) return {1.0, 0.0};
    if (t == Rational(1, 4)) return {0.0, 1.0};
    if (t == Rational(1, 2)) return {-1.0, 0.0};
    if (t == Rational(3, 4)) return {0.0, -1.0};
  }
  return std::polar(1.0, kTwoPi * turns());
}

Phase Phase::pow(std::int64_t m) const {
  if (is_exact()) return from_turns(exact_turns() * Rational(m));
  return from_turns(std::get<double>(turns_) * static_cast<double>(m));
}

Phase operator*(const Phase& a, const Phase& b) {
  if (a.is_exact() && b.is_exact())
    return Phase::from_turns(a.exact_turns() + b.exact_turns());
  return Phase::from_turns(a.turns() + b.turns());
}

double phase_distance_turns(const Phase& a, const Phase& b) {
  double d = std::abs(wrap_unit(a.turns() - b.turns()));
  return std::min(d, 1.0 - d);
}

bool approx_equal(const Phase& a, const Phase& b, double tol_turns) {
  return phase_distance_turns(a, b) < tol_turns;
}

bool operator==(const Phase& a, const Phase& b) {
  if (a.is_exact() && b.is_exact()) return a.exact_turns() == b.exact_turns();
  return approx_equal(a, b, 1e-12);
}

std::string Phase::to_string() const {
  if (is_exact()) {
    const Rational& t = exact_turns();
    if (t == Rational(0)) return "+1";
    if (t == Rational(1, 2)) return "-1";
    if (t == Rational(1, 4)) return "+i";
    if (t == Rational(3, 4)) return "-i";
    return "exp(2*pi*i * " + ExactReal(t).to_string() + ")";
  }
  return "exp(2*pi*i * " + double_to_string(std::get<double>(turns_)) + ")";
}

}  // namespace spinstat
