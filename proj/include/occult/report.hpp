// Verification report rows and their text / JSON renderings.

#ifndef OCCULT_REPORT_HPP_
#define OCCULT_REPORT_HPP_

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace occult {

enum class CheckStatus { Pass, Fail, DiscrepancyFlag, Skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::DiscrepancyFlag: return "discrepancy-flag";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

struct CheckRow {
  std::string id;
  std::string computed;
  std::string claimed;
  CheckStatus status = CheckStatus::Skipped;
  std::string citation;
  std::optional<double> runtime_ms;
};

struct VerificationReport {
  std::vector<CheckRow> checks;

  std::size_t count(CheckStatus s) const {
    return std::size_t(std::count_if(checks.begin(), checks.end(), [s](const CheckRow& r) { return r.status == s; }));
  }
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

enum class ReportFormat { Text, Json };

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json row;
    row["id"] = c.id;
    row["computed"] = c.computed;
    row["claimed"] = c.claimed;
    row["status"] = status_name(c.status);
    row["citation"] = c.citation;
    if (c.runtime_ms)
      row["runtime_ms"] = *c.runtime_ms;
    else
      row["runtime_ms"] = nullptr;
    checks.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["checks"] = std::move(checks);
  return doc;
}

inline void emit_text(std::ostream& out, const VerificationReport& r) {
  const std::vector<std::string> head{"id", "computed", "claimed", "status", "citation", "runtime_ms"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks) {
    std::string ms = "-";
    if (c.runtime_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", *c.runtime_ms);
      ms = buf;
    }
    rows.push_back({c.id, c.computed, c.claimed, status_name(c.status), c.citation, ms});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t j = 0; j < head.size(); ++j) {
    width[j] = head[j].size();
    for (const auto& row : rows) width[j] = std::max(width[j], row[j].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      s += cells[j];
      if (j + 1 < cells.size()) s += std::string(width[j] - cells[j].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(head);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  out << '\n'
      << r.checks.size() << " checks: " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail)
      << " fail, " << r.count(CheckStatus::DiscrepancyFlag) << " discrepancy-flag, " << r.count(CheckStatus::Skipped)
      << " skipped\n";
}

inline void emit_report(std::ostream& out, const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Json)
    out << report_to_json(r).dump(2) << '\n';
  else
    emit_text(out, r);
}

}  // namespace occult

#endif  // OCCULT_REPORT_HPP_
