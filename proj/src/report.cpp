#include "spinorkit/report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "spinorkit/format.hpp"

namespace spinorkit {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool Report::all_passed() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

std::size_t Report::passed_count() const {
  std::size_t n = 0;
  for (const CheckRecord& c : checks)
    if (c.pass) ++n;
  return n;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["pass"] = c.pass;
    jc["observed"] = c.observed;
    jc["expected"] = c.expected;
    jc["tolerance"] = c.tolerance;
    j["checks"].push_back(std::move(jc));
  }
  const std::size_t passed = r.passed_count();
  nlohmann::ordered_json summary;
  summary["total"] = r.checks.size();
  summary["passed"] = passed;
  summary["failed"] = r.checks.size() - passed;
  summary["trials"] = r.trials;
  summary["pairs"] = r.pairs;
  summary["tolerance"] = r.tolerance;
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

std::string report_csv(const Report& r) {
  std::string out = "name,anchor,pass,observed,expected,tolerance\n";
  for (const CheckRecord& c : r.checks) {
    out += csv_field(c.name);
    out += ',';
    out += csv_field(c.anchor);
    out += ',';
    out += c.pass ? "true" : "false";
    out += ',';
    out += csv_field(c.observed);
    out += ',';
    out += csv_field(c.expected);
    out += ',';
    out += format_double(c.tolerance);
    out += '\n';
  }
  return out;
}

void write_report(const Report& r, const std::string& format, const std::string& path) {
  const std::string payload = format == "csv" ? report_csv(r) : report_json(r);
  if (path.empty()) {
    std::cout << payload;
    if (!std::cout) throw std::runtime_error("failed to write report to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report output path: " + path);
  out << payload;
  if (!out) throw std::runtime_error("failed while writing report to: " + path);
}

}  // namespace spinorkit
