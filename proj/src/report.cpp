#include "lrc/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace lrc {

std::string report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) e["witness"] = c.witness;
    j["cases"].push_back(std::move(e));
  }
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : r.cases) {
    if (c.passed) continue;
    ++failed;
    os << "FAIL " << c.id << "\n     " << c.witness << "\n";
  }
  os << "suite " << r.suite << ": " << (r.cases.size() - failed) << "/" << r.cases.size() << " passed, seed "
     << r.seed << ", " << r.elapsed_ms << " ms\n";
  return os.str();
}

SuiteReport parse_report_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    for (const auto& e : j.at("cases")) {
      CaseRecord c;
      c.id = e.at("id").get<std::string>();
      const auto status = e.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw std::invalid_argument("report: bad status '" + status + "'");
      c.passed = status == "pass";
      if (e.contains("witness")) c.witness = e.at("witness").get<std::string>();
      r.cases.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

void emit_report(const SuiteReport& r, ReportFormat format, const std::string& path) {
  const std::string body = format == ReportFormat::Json ? report_json(r) : report_text(r);
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write report to '" + path + "'");
  out << body;
  if (!out) throw ConfigError("cannot write report to '" + path + "'");
}

}  // namespace lrc
