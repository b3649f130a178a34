#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinorkit {

// One verification record. The anchor names the claim the check audits:
// an equation or section tag for substantive checks, "plumbing" for
// infrastructure ones.
struct CheckRecord {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string observed;
  std::string expected;
  double tolerance = 0.0;  // 0 for exact checks
};

struct Report {
  std::string command;
  std::uint64_t seed = 1;
  std::uint64_t trials = 0;
  std::uint64_t pairs = 0;
  double tolerance = 0.0;
  std::vector<CheckRecord> checks;

  void add(std::string name, std::string anchor, bool pass, std::string observed,
           std::string expected, double tol = 0.0) {
    checks.push_back({std::move(name), std::move(anchor), pass, std::move(observed),
                      std::move(expected), tol});
  }

  bool all_passed() const;
  std::size_t passed_count() const;
};

// UTF-8 JSON with stable key order (command, seed, checks, summary); the
// same report always serializes to the same bytes.
std::string report_json(const Report& r);

// One check per row under a name,anchor,pass,observed,expected,tolerance
// header.
std::string report_csv(const Report& r);

// Renders in the requested format ("json" or "csv") and writes to the path,
// or to stdout when the path is empty. I/O failures throw with the path in
// the message.
void write_report(const Report& r, const std::string& format, const std::string& path);

}  // namespace spinorkit
