#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "dpv/catalogue.hpp"

namespace dpv::catalogue {

namespace {

using Json = nlohmann::ordered_json;

Json work_json(const GroebnerStats& s) {
  return Json{{"bases", s.bases},
              {"pairs", s.pairs},
              {"pairs_skipped", s.pairs_skipped},
              {"zero_reductions", s.zero_reductions},
              {"reduction_steps", s.reduction_steps}};
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["schema"] = 1;
  j["id"] = r.id;
  j["row"] = r.row;
  j["checks"] = Json::array();
  j["certificates"] = Json::array();
  Json timings = Json::object();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"status", to_string(c.status)}, {"expected", c.expected}, {"computed", c.computed}};
    if (!c.exhausted.empty()) cj["exhausted"] = c.exhausted;
    j["checks"].push_back(std::move(cj));
    j["certificates"].push_back(Json{{"check", c.name}, {"lines", c.certificate}});
    timings[c.name] = work_json(c.work);
  }
  timings["total"] = work_json(r.work);
  j["expected"] = Json(r.expected);
  j["computed"] = Json(r.computed);
  j["notes"] = r.notes;
  j["timings"] = std::move(timings);
  return j;
}

std::string overall(const VerificationReport& r) {
  if (r.mismatch()) return "MISMATCH";
  if (r.inconclusive()) return "inconclusive";
  return "pass";
}

std::string get(const std::map<std::string, std::string>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? "-" : it->second;
}

}  // namespace

std::string to_json(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const Summary& s) {
  Json j;
  j["schema"] = 1;
  j["records"] = s.reports.size();
  j["mismatches"] = s.mismatches;
  j["inconclusive"] = s.inconclusive;
  j["rows"] = Json::array();
  for (const auto& row : expected_rows()) {
    if (s.p && row.p != *s.p) continue;
    Json rj{{"row", row.key}};
    if (!row.scope_note.empty()) rj["status"] = row.scope_note;
    Json ex = Json::array();
    for (const auto& r : s.reports)
      if (r.row == row.key) ex.push_back(Json{{"id", r.id}, {"status", overall(r)}});
    if (ex.empty() && row.scope_note.empty()) continue;
    rj["examples"] = std::move(ex);
    j["rows"].push_back(std::move(rj));
  }
  j["reports"] = Json::array();
  for (const auto& r : s.reports) j["reports"].push_back(report_json(r));
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.id << "  (table row " << get(r.expected, "table_row") << ")\n";
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(14) << c.name << std::setw(13) << to_string(c.status) << "computed "
       << c.computed << ", expected " << c.expected;
    if (!c.exhausted.empty()) os << " [" << c.exhausted << "]";
    os << "  (" << std::fixed << std::setprecision(3) << c.seconds << " s)\n";
    for (const auto& l : c.certificate) os << "      " << l << "\n";
  }
  for (const char* k : {"rho", "h1", "normalization", "extremal_rays"})
    if (r.expected.count(k)) os << "  " << std::setw(14) << k << r.expected.at(k) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string summary_table(const Summary& s) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "row" << std::setw(14) << "example" << std::setw(9) << "regular"
     << std::setw(9) << "normal" << std::setw(10) << "integral" << std::setw(5) << "K2" << std::setw(10)
     << "sing dim" << std::setw(14) << "status"
     << "time\n";
  for (const auto& row : expected_rows()) {
    if (s.p && row.p != *s.p) continue;
    bool listed = false;
    for (const auto& r : s.reports) {
      if (r.row != row.key) continue;
      listed = true;
      os << std::setw(10) << row.key << std::setw(14) << r.id << std::setw(9) << get(r.computed, "regular")
         << std::setw(9) << get(r.computed, "geom_normal") << std::setw(10) << get(r.computed, "geom_integral")
         << std::setw(5) << get(r.computed, "K2") << std::setw(10) << get(r.computed, "sing_dim") << std::setw(14)
         << overall(r) << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    }
    if (!listed && !row.scope_note.empty()) os << std::setw(10) << row.key << row.scope_note << "\n";
  }
  os << s.reports.size() << " reports, " << s.mismatches << " mismatches, " << s.inconclusive << " inconclusive, "
     << std::fixed << std::setprecision(2) << s.seconds << " s\n";
  return os.str();
}

}  // namespace dpv::catalogue
