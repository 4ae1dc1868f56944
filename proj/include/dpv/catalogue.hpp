#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dpv/groebner.hpp"
#include "dpv/model.hpp"

namespace dpv::catalogue {

/// What the classification tables say about one family. Columns that cannot
/// be computed here (rho, h1, the normalisation of the base change) are kept
/// as text and reported as expected only.
struct ExpectedRow {
  std::string key;  // "p2:2-6"
  int p = 0;
  std::string number;  // "2-6"
  std::string rho;
  int k2 = 0;
  std::string h1;
  std::string normalization;
  std::optional<std::string> extremal_rays;
  std::string properties;
  bool regular = true;
  bool geom_integral = true;
  bool geom_normal = false;
  /// Id of the record realising the row; empty when out of scope.
  std::vector<std::string> examples;
  std::string scope_note;
};

const std::vector<ExpectedRow>& expected_rows();
const ExpectedRow& expected_row(const std::string& key);

struct ExampleRecord {
  std::string id;
  std::string row;  // key into expected_rows()
  std::string summary;
  std::string source;  // model text
  std::vector<std::string> assumptions;
  ModelPtr model;
};

/// The in-scope records, in table order.
const std::vector<std::string>& record_ids();
/// Models used only as blow-up parents.
const std::vector<std::string>& auxiliary_ids();
const std::string& record_source(const std::string& id);
const std::string& record_row(const std::string& id);

/// Throws std::out_of_range for unknown ids and dpv::ModelError or
/// dpv::ParseError for broken model text.
ExampleRecord load_example(const std::string& id, const GroebnerOptions& opts = {});

enum class Check { ambient, regular, geom_normal, geom_integral, k2, extras };
std::string to_string(Check c);
/// Accepts ambient, regular, normal, integral, k2, extras (comma separated) or "all".
std::set<Check> parse_checks(const std::string& list);
std::set<Check> all_checks();

enum class Status { pass, fail, inconclusive, skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::skipped;
  std::string expected;
  std::string computed;
  std::vector<std::string> certificate;
  /// Resource that ran out, for inconclusive results.
  std::string exhausted;
  GroebnerStats work;
  double seconds = 0;
};

struct VerificationReport {
  std::string id;
  std::string row;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> expected;
  std::map<std::string, std::string> computed;
  std::vector<std::string> notes;
  GroebnerStats work;
  double seconds = 0;

  bool mismatch() const;
  bool inconclusive() const;
};

VerificationReport verify_example(const std::string& id, const std::set<Check>& checks = all_checks(),
                                  const GroebnerOptions& opts = {});

struct Summary {
  /// Characteristic filter of the run, if any.
  std::optional<int> p;
  std::vector<VerificationReport> reports;
  std::size_t mismatches = 0;
  std::size_t inconclusive = 0;
  double seconds = 0;
  /// 0 all pass, 1 some mismatch, 2 no mismatch but something undecided.
  int exit_code() const;
};

/// Runs every record (optionally only those of characteristic p), on
/// DPV_THREADS worker threads (default 1). Report order is record order.
Summary verify_all(std::optional<int> p = std::nullopt, const std::set<Check>& checks = all_checks(),
                   const GroebnerOptions& opts = {});

/// JSON with schema version 1; deterministic (no wall times).
std::string to_json(const VerificationReport& r);
std::string to_json(const Summary& s);
std::string summary_table(const Summary& s);
std::string report_text(const VerificationReport& r);

/// Verdict tuple (regular, geom_normal, geom_integral, K^2) of a report.
std::vector<std::string> verdict_tuple(const VerificationReport& r);

}  // namespace dpv::catalogue
