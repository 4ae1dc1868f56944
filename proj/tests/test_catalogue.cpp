#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dpv/catalogue.hpp"
#include "dpv/parser.hpp"
#include "dpv/predicates.hpp"

using namespace dpv;
using namespace dpv::catalogue;

namespace {

Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(s, r); }

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(DPV_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe.release());
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Records, LoadE12) {
  auto rec = load_example("e1-2");
  EXPECT_EQ(rec.row, "p2:1-2");
  const auto& m = *rec.model;
  EXPECT_EQ(m.ambient.describe(), "P(1,1,1,2)");
  EXPECT_EQ(m.ambient.ring->prime(), 2u);
  EXPECT_EQ(m.ambient.ring->param_names(), (std::vector<std::string>{"s0", "s1", "s2", "t"}));
  ASSERT_EQ(m.equations.size(), 1u);
  EXPECT_EQ(m.equations[0], P(m.ambient.ring, "y^2 + t*x0^2*y + s0*x0^4 + s1*x1^4 + s2*x2^4"));
}

TEST(Records, LoadPencil) {
  auto rec = load_example("e2-5-pencil");
  const auto& m = *rec.model;
  EXPECT_EQ(m.ambient.describe(), "P^2xP^1");
  EXPECT_EQ(m.equations.at(0), P(m.ambient.ring, "u*(x^2 + s*z^2) + v*(y^2 + t*z^2)"));
}

TEST(Records, UnknownId) {
  EXPECT_THROW(load_example("bogus"), std::out_of_range);
  EXPECT_THROW(verify_example("bogus"), std::out_of_range);
}

TEST(Records, CoverageSelfTest) {
  std::set<std::string> ids(record_ids().begin(), record_ids().end());
  EXPECT_EQ(ids.size(), 11u);
  std::set<std::string> covered;
  for (const auto& row : expected_rows()) {
    if (row.examples.empty()) {
      EXPECT_FALSE(row.scope_note.empty()) << row.key;
      continue;
    }
    for (const auto& e : row.examples) {
      EXPECT_TRUE(ids.count(e)) << row.key << " names unknown record " << e;
      EXPECT_EQ(record_row(e), row.key);
      covered.insert(e);
    }
  }
  EXPECT_EQ(covered, ids);
  for (const auto& id : record_ids()) EXPECT_NO_THROW(load_example(id)) << id;
  for (const auto& id : auxiliary_ids()) EXPECT_NO_THROW(load_example(id)) << id;
}

TEST(Verify, SexticInCharacteristicThree) {
  auto r = verify_example("e1-1-p3");
  EXPECT_FALSE(r.mismatch());
  EXPECT_FALSE(r.inconclusive());
  EXPECT_EQ(r.computed.at("regular"), "yes");
  EXPECT_EQ(r.computed.at("geom_normal"), "no");
  EXPECT_EQ(r.computed.at("sing_dim"), "1");
  EXPECT_EQ(r.computed.at("geom_integral"), "yes");
  EXPECT_EQ(r.computed.at("K2"), "1");
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::pass) << c.name;
    EXPECT_FALSE(c.certificate.empty()) << c.name;
  }
  EXPECT_EQ(r.expected.at("rho"), "1 (expected, not computed)");
}

TEST(Verify, DisjointConics) {
  auto r = verify_example("e2-2", {Check::extras});
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, Status::pass);
  bool disjoint = false;
  for (const auto& l : r.checks[0].certificate) disjoint = disjoint || l == "[ok] C1 and C2 are disjoint (unit ideal on every chart)";
  EXPECT_TRUE(disjoint);
}

TEST(Verify, BlowUpBookkeeping) {
  auto r = verify_example("e2-6", {Check::k2});
  const auto& c = check(r, "k2");
  EXPECT_EQ(c.status, Status::pass);
  EXPECT_EQ(c.computed, "6");
  bool step = false;
  for (const auto& l : c.certificate) step = step || l.find("8 - 2 = 6") != std::string::npos;
  EXPECT_TRUE(step);
}

TEST(Verify, CrossModelTuples) {
  auto a = verify_example("e2-5-pencil"), b = verify_example("e2-5-blowup");
  EXPECT_EQ(verdict_tuple(a), verdict_tuple(b));
  EXPECT_EQ(verdict_tuple(a), (std::vector<std::string>{"yes", "no", "yes", "5"}));
}

TEST(Verify, DoubleCoverSingularCurve) {
  auto m = load_example("e2-4").model;
  auto c = find_chart(*m, "D+(y)xD+(y')");
  auto J = nonsmooth_ideal(c);
  auto gb = groebner(J.ring, J.generators);
  EXPECT_EQ(dimension(gb), 1);
  EXPECT_TRUE(gb.contains(P(J.ring, "w^2 + t3*x^2 + t4")));
  EXPECT_TRUE(gb.contains(P(J.ring, "x'^2")));
  EXPECT_TRUE(radical_membership(P(J.ring, "x'"), J.generators));
  EXPECT_TRUE(ideal_contains(J.ring, {P(J.ring, "x'"), P(J.ring, "w^2 + t3*x^2 + t4")}, J.generators));
}

TEST(VerifyAll, FullRun) {
  auto s = verify_all();
  ASSERT_EQ(s.reports.size(), 11u);
  EXPECT_EQ(s.mismatches, 0u);
  EXPECT_EQ(s.inconclusive, 0u);
  EXPECT_EQ(s.exit_code(), 0);
  const std::vector<std::string> k2 = {"1", "3", "1", "2", "4", "2", "3", "4", "5", "5", "6"};
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    const auto& r = s.reports[i];
    EXPECT_EQ(r.id, record_ids()[i]);
    EXPECT_EQ(verdict_tuple(r), (std::vector<std::string>{"yes", "no", "yes", k2[i]})) << r.id;
    EXPECT_EQ(r.computed.at("sing_dim"), "1") << r.id;
  }
}

TEST(VerifyAll, CharacteristicThree) {
  auto s = verify_all(3);
  ASSERT_EQ(s.reports.size(), 2u);
  EXPECT_EQ(s.reports[0].id, "e1-1-p3");
  EXPECT_EQ(s.reports[1].id, "e1-3");
}

TEST(VerifyAll, PairLimitIsInconclusive) {
  GroebnerOptions o;
  o.limits.max_pairs = 10;
  auto s = verify_all(std::nullopt, all_checks(), o);
  EXPECT_EQ(s.mismatches, 0u);
  EXPECT_GT(s.inconclusive, 0u);
  EXPECT_EQ(s.exit_code(), 2);
  for (const auto& r : s.reports)
    for (const auto& c : r.checks)
      if (c.status == Status::inconclusive) {
        EXPECT_FALSE(c.exhausted.empty()) << r.id << " " << c.name;
      }
}

TEST(Reports, DeterministicJson) {
  auto a = to_json(verify_all()), b = to_json(verify_all());
  EXPECT_EQ(a, b);
  setenv("DPV_THREADS", "3", 1);
  auto c = to_json(verify_all());
  unsetenv("DPV_THREADS");
  EXPECT_EQ(a, c);
}

TEST(Reports, Schema) {
  auto j = nlohmann::json::parse(to_json(verify_example("e1-3")));
  EXPECT_EQ(j["schema"], 1);
  for (const char* k : {"id", "checks", "certificates", "expected", "computed", "notes", "timings"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["checks"].size(), 6u);
  bool discrepancy = false;
  for (const auto& n : j["notes"]) discrepancy = discrepancy || n.get<std::string>().find("{x = z = 0}") != std::string::npos;
  EXPECT_TRUE(discrepancy);

  auto s = nlohmann::json::parse(to_json(verify_all(3)));
  EXPECT_EQ(s["records"], 2);
  EXPECT_EQ(s["rows"].size(), 2u);
}

TEST(Checks, Parsing) {
  EXPECT_EQ(parse_checks("all"), all_checks());
  EXPECT_EQ(parse_checks("normal,integral"), (std::set<Check>{Check::geom_normal, Check::geom_integral}));
  EXPECT_THROW(parse_checks("bogus"), std::invalid_argument);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(cli("lattice k2-wci 1,1,2,3 6").out, "1\n");
  EXPECT_EQ(cli("lattice secant 2 5 1 4").out, "1\n");
  EXPECT_EQ(cli("lattice index-two 2 1").out, "non_integral 3/2\n");
  EXPECT_EQ(cli("lattice conic-bound 4 10").out, "[1]\n");
  auto ok = cli("verify e2-6 --check k2");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("computed 6, expected 6"), std::string::npos);
  EXPECT_EQ(cli("verify bogus").status, 1);
  EXPECT_EQ(cli("verify-all --limit-pairs 10").status, 2);
  auto p3 = cli("verify-all --p 3 --json");
  EXPECT_EQ(p3.status, 0);
  EXPECT_EQ(nlohmann::json::parse(p3.out)["records"], 2);
}
