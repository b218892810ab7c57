#include "spinstat/report.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <istream>
#include <sstream>

namespace spinstat {

bool VerificationReport::overall() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const CheckEntry& e) { return e.pass; });
}

std::string format_value(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const VerificationReport& report) {
  out << "M,K,k,s,check,value,pass\n";
  for (const CheckEntry& e : report.entries()) {
    out << e.grid_m << ',' << e.grid_k << ',' << e.k << ','
        << format_value(e.s) << ',' << e.check << ',' << format_value(e.value)
        << ',' << (e.pass ? 1 : 0) << '\n';
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

int parse_int(const std::string& text) {
  int v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ReportError("bad integer field '" + text + "'");
  return v;
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    throw ReportError("bad numeric field '" + text + "'");
  return v;
}

}  // namespace

VerificationReport read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ReportError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "M,K,k,s,check,value,pass")
    throw ReportError("unexpected CSV header '" + line + "'");
  VerificationReport report;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 7)
      throw ReportError("expected 7 fields, got " +
                        std::to_string(fields.size()) + " in '" + line + "'");
    CheckEntry e;
    e.grid_m = parse_int(fields[0]);
    e.grid_k = parse_int(fields[1]);
    e.k = parse_int(fields[2]);
    e.s = parse_double(fields[3]);
    e.check = fields[4];
    e.value = parse_double(fields[5]);
    const int pass = parse_int(fields[6]);
    if (pass != 0 && pass != 1) throw ReportError("pass flag must be 0 or 1");
    e.pass = pass == 1;
    report.add(e);
  }
  return report;
}

void print_table(std::ostream& out, const VerificationReport& report) {
  for (const CheckEntry& e : report.entries()) {
    out << (e.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(22)
        << e.check << std::right << " M=" << std::setw(4) << e.grid_m
        << " K=" << std::setw(4) << e.grid_k << " k=" << std::setw(5) << e.k
        << " s=" << format_value(e.s) << " value=" << format_value(e.value)
        << '\n';
  }
  out << "overall: " << (report.overall() ? "PASS" : "FAIL") << '\n';
}

}  // namespace spinstat
