#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinstat {

class ReportError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One verification check: name, grid/sweep parameters, measured value, and
/// the pass verdict.
struct CheckEntry {
  std::string check;
  int grid_m = 0;
  int grid_k = 0;
  int k = 0;
  double s = 0.0;
  double value = 0.0;
  bool pass = false;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

class VerificationReport {
 public:
  void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }

  const std::vector<CheckEntry>& entries() const { return entries_; }

  /// Conjunction of all entry flags.
  bool overall() const;

 private:
  std::vector<CheckEntry> entries_;
};

/// Shortest round-trippable decimal representation of v; used for both the
/// printed table and the CSV file so the two agree byte for byte.
std::string format_value(double v);

/// Header "M,K,k,s,check,value,pass", one row per entry, LF line endings.
void write_csv(std::ostream& out, const VerificationReport& report);

/// Inverse of write_csv; throws ReportError on malformed input.
VerificationReport read_csv(std::istream& in);

/// Human-readable table, one line per entry plus an overall verdict.
void print_table(std::ostream& out, const VerificationReport& report);

}  // namespace spinstat
