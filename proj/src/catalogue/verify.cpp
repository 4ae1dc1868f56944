#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dpv/catalogue.hpp"
#include "dpv/lattice.hpp"
#include "dpv/parser.hpp"
#include "dpv/predicates.hpp"

namespace dpv::catalogue {

std::string to_string(Check c) {
  switch (c) {
    case Check::ambient: return "ambient";
    case Check::regular: return "regular";
    case Check::geom_normal: return "geom_normal";
    case Check::geom_integral: return "geom_integral";
    case Check::k2: return "k2";
    case Check::extras: return "extras";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::set<Check> all_checks() {
  return {Check::ambient, Check::regular, Check::geom_normal, Check::geom_integral, Check::k2, Check::extras};
}

std::set<Check> parse_checks(const std::string& list) {
  std::set<Check> out;
  std::stringstream ss(list);
  std::string w;
  while (std::getline(ss, w, ',')) {
    if (w.empty()) continue;
    if (w == "all") return all_checks();
    if (w == "ambient") out.insert(Check::ambient);
    else if (w == "regular") out.insert(Check::regular);
    else if (w == "normal" || w == "geom_normal") out.insert(Check::geom_normal);
    else if (w == "integral" || w == "geom_integral") out.insert(Check::geom_integral);
    else if (w == "k2") out.insert(Check::k2);
    else if (w == "extras") out.insert(Check::extras);
    else throw std::invalid_argument("unknown check '" + w + "'");
  }
  return out;
}

bool VerificationReport::mismatch() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return true;
  return false;
}

bool VerificationReport::inconclusive() const {
  for (const auto& c : checks)
    if (c.status == Status::inconclusive) return true;
  return false;
}

int Summary::exit_code() const {
  if (mismatches) return 1;
  if (inconclusive) return 2;
  return 0;
}

std::vector<std::string> verdict_tuple(const VerificationReport& r) {
  std::vector<std::string> t;
  for (const char* k : {"regular", "geom_normal", "geom_integral", "K2"}) {
    auto it = r.computed.find(k);
    t.push_back(it == r.computed.end() ? "-" : it->second);
  }
  return t;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string chart_line(const ChartResult& c) {
  std::string s = c.chart + ": ";
  if (c.verdict == Verdict::inconclusive) return s + "inconclusive (" + c.exhausted + ")";
  s += std::to_string(c.generators) + " generators";
  if (c.minors) s += " (" + std::to_string(c.minors) + " minors)";
  s += ", dim " + std::to_string(c.dimension) + ", basis {";
  for (std::size_t i = 0; i < c.basis.size(); ++i) s += (i ? ", " : "") + c.basis[i];
  return s + "}";
}

std::string first_exhausted(const std::vector<ChartResult>& cs) {
  for (const auto& c : cs)
    if (!c.exhausted.empty()) return c.exhausted;
  return {};
}

// K^2 from the presentation, with a one-line derivation.
struct K2Value {
  lattice::Rational value;
  std::vector<std::string> steps;
};

K2Value k2_of(const SurfaceModel& m) {
  using namespace lattice;
  K2Value out;
  switch (m.presentation) {
    case Presentation::complete_intersection: {
      std::vector<std::vector<long long>> degs;
      for (const auto& f : m.equations) {
        auto d = weighted_degree(f);
        if (!d.homogeneous()) throw ModelError("inhomogeneous equation");
        degs.emplace_back(d.degree.begin(), d.degree.end());
      }
      std::ostringstream os;
      if (m.ambient.kind == AmbientKind::weighted_projective) {
        std::vector<long long> w(m.ambient.weights.begin(), m.ambient.weights.end()), d;
        for (const auto& v : degs) d.push_back(v.at(0));
        out.value = k2_weighted_ci(w, d);
        os << "adjunction in P(";
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
        os << "), degrees (";
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
        os << "): K^2 = (sum d - sum w)^2 prod d / prod w = " << lattice::to_string(out.value);
      } else if (m.ambient.kind == AmbientKind::multiprojective) {
        out.value = Rational(k2_multiprojective(m.ambient.factor_dims, degs));
        os << "Chow ring of the product, K = (sum D_i - (n_j + 1) h_j)|X: K^2 = " << lattice::to_string(out.value);
      } else {
        throw ModelError("K^2 needs a projective ambient");
      }
      out.steps.push_back(os.str());
      break;
    }
    case Presentation::double_cover: {
      const auto& b = m.cover->bidegree;
      out.value = Rational(k2_double_cover_p1p1(b[0], b[1]));
      out.steps.push_back("K_X = pi^*(K + L), L = O(" + std::to_string(b[0]) + "," + std::to_string(b[1]) +
                          "): K^2 = 2 (K + L)^2 = " + lattice::to_string(out.value));
      break;
    }
    case Presentation::blow_up: {
      const auto& d = *m.blowup;
      K2Value parent = k2_of(*d.parent);
      if (denominator(parent.value) != 1) throw ModelError("non-integral parent K^2");
      Integer k = blowup_k2(numerator(parent.value), Integer(d.center_degree));
      out.steps = parent.steps;
      out.steps.push_back("blow-up at a point of degree " + std::to_string(d.center_degree) + ": K^2 = " +
                          lattice::to_string(parent.value) + " - " + std::to_string(d.center_degree) + " = " + lattice::to_string(k));
      out.value = Rational(k);
      break;
    }
  }
  return out;
}

std::vector<std::string> basis_lines(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(g.to_string());
  return out;
}

bool all_reduce_to_zero(const std::vector<Polynomial>& fs, const GroebnerBasis& gb) {
  for (const auto& f : fs)
    if (!gb.contains(f)) return false;
  return true;
}

// Key of a check's verdict in the expected map, if it has one.
std::string expected_key(Check c) {
  switch (c) {
    case Check::regular: return "regular";
    case Check::geom_normal: return "geom_normal";
    case Check::geom_integral: return "geom_integral";
    case Check::k2: return "K2";
    default: return {};
  }
}

class Runner {
 public:
  Runner(const std::string& id, const std::set<Check>& checks, const GroebnerOptions& opts)
      : id_(id), checks_(checks), opts_(opts) {}

  VerificationReport run() {
    auto t0 = std::chrono::steady_clock::now();
    rep_.id = id_;
    rep_.row = record_row(id_);
    const ExpectedRow& row = expected_row(rep_.row);
    fill_expected(row);
    try {
      rec_ = load_example(id_, with_stats(load_work_));
    } catch (const ResourceLimitExceeded& e) {
      rep_.work += load_work_;
      rep_.notes.push_back(std::string("model construction ran out of resources: ") + e.what());
      for (Check c : checks_) {
        CheckResult r;
        r.name = to_string(c);
        r.status = Status::inconclusive;
        if (auto it = rep_.expected.find(expected_key(c)); it != rep_.expected.end()) r.expected = it->second;
        r.exhausted = e.what();
        rep_.checks.push_back(std::move(r));
      }
      rep_.seconds = seconds_since(t0);
      return std::move(rep_);
    }
    rep_.work += load_work_;

    for (Check c : checks_) {
      auto t = std::chrono::steady_clock::now();
      CheckResult r;
      r.name = to_string(c);
      GroebnerOptions o = with_stats(r.work);
      try {
        switch (c) {
          case Check::ambient: ambient(r, o); break;
          case Check::regular: regular(r, o); break;
          case Check::geom_normal: normal(r, o); break;
          case Check::geom_integral: integral(r, o); break;
          case Check::k2: k2(r, row); break;
          case Check::extras: extras(r, o); break;
        }
      } catch (const ResourceLimitExceeded& e) {
        r.status = Status::inconclusive;
        r.exhausted = e.what();
      } catch (const std::exception& e) {
        r.status = Status::fail;
        r.computed = std::string("error: ") + e.what();
      }
      r.seconds = seconds_since(t);
      rep_.work += r.work;
      rep_.checks.push_back(std::move(r));
    }
    rep_.seconds = seconds_since(t0);
    return std::move(rep_);
  }

 private:
  GroebnerOptions with_stats(GroebnerStats& s) const {
    GroebnerOptions o = opts_;
    o.stats = &s;
    return o;
  }

  const SurfaceModel& model() const { return *rec_.model; }

  void fill_expected(const ExpectedRow& row) {
    auto& e = rep_.expected;
    e["table_row"] = row.number + " (p = " + std::to_string(row.p) + ")";
    e["regular"] = row.regular ? "yes" : "no";
    e["geom_integral"] = row.geom_integral ? "yes" : "no";
    e["geom_normal"] = row.geom_normal ? "yes" : "no";
    e["K2"] = std::to_string(row.k2);
    e["rho"] = row.rho + " (expected, not computed)";
    e["h1"] = row.h1 + " (expected, not computed)";
    e["normalization"] = row.normalization + " (expected, not computed)";
    if (row.extremal_rays) e["extremal_rays"] = *row.extremal_rays + " (expected, not computed)";
    e["properties"] = row.properties + " (expected, not computed)";
  }

  void ambient(CheckResult& r, const GroebnerOptions& o) {
    auto a = ambient_check(model(), o);
    r.expected = "X avoids the ambient singular points and the charts cover X";
    for (const auto& s : a.strata)
      r.certificate.push_back(s.locus + (s.avoided ? " avoided by X" : " meets X"));
    if (a.standard_charts_cover) r.certificate.push_back("standard charts cover X");
    if (a.coverage_asserted)
      r.certificate.push_back(std::string("extra charts cover the rest") +
                              (a.extra_loci_verified ? " (declared loci verified)" : " (declared loci unverified)"));
    for (const auto& n : a.notes) r.certificate.push_back(n);
    r.computed = a.ok ? "ok" : "not ok";
    r.status = a.ok ? Status::pass : Status::fail;
  }

  const RegularityReport& regularity(const GroebnerOptions& o) {
    if (!regular_) regular_ = check_regular(model(), o);
    return *regular_;
  }

  void regular(CheckResult& r, const GroebnerOptions& o) {
    const auto& reg = regularity(o);
    r.expected = rep_.expected["regular"];
    for (const auto& c : reg.charts) r.certificate.push_back(chart_line(c));
    finish_verdict(r, reg.regular, "regular", r.expected, first_exhausted(reg.charts));
  }

  void normal(CheckResult& r, const GroebnerOptions& o) {
    auto s = geometric_singular_dimension(model(), o);
    r.expected = rep_.expected["geom_normal"];
    for (const auto& c : s.charts) r.certificate.push_back(chart_line(c));
    if (s.decided == Verdict::inconclusive) {
      r.status = Status::inconclusive;
      r.exhausted = first_exhausted(s.charts);
      rep_.computed["geom_normal"] = "inconclusive";
      return;
    }
    Verdict v = is_geometrically_normal(s);
    rep_.computed["sing_dim"] = std::to_string(s.dimension);
    r.certificate.insert(r.certificate.begin(),
                         "dim Sing(X over k-bar) = " + std::to_string(s.dimension) +
                             "; X over k-bar is Cohen-Macaulay, so normal iff dim Sing <= 0");
    finish_verdict(r, v, "geom_normal", r.expected, {});
  }

  void integral(CheckResult& r, const GroebnerOptions& o) {
    const auto& reg = regularity(o);
    auto g = geometric_integrality(model(), reg.regular, o);
    r.expected = rep_.expected["geom_integral"];
    if (!g.witness_chart.empty()) r.certificate.push_back("smooth point on " + g.witness_chart + ": minor " + g.witness_minor +
                                                          " is not in the radical of the chart ideal");
    for (const auto& n : g.notes) r.certificate.push_back(n);
    Verdict v = Verdict::inconclusive;
    if (g.reduced == Verdict::no)
      v = Verdict::no;
    else if (g.reduced == Verdict::yes && g.irreducibility == "implied")
      v = Verdict::yes;
    finish_verdict(r, v, "geom_integral", r.expected, {});
  }

  void k2(CheckResult& r, const ExpectedRow& row) {
    auto k = k2_of(model());
    r.expected = std::to_string(row.k2);
    r.computed = lattice::to_string(k.value);
    r.certificate = k.steps;
    rep_.computed["K2"] = r.computed;
    r.status = r.computed == r.expected ? Status::pass : Status::fail;
  }

  void finish_verdict(CheckResult& r, Verdict v, const std::string& key, const std::string& expected,
                      const std::string& exhausted) {
    r.computed = dpv::to_string(v);
    rep_.computed[key] = r.computed;
    if (v == Verdict::inconclusive) {
      r.status = Status::inconclusive;
      r.exhausted = exhausted;
    } else {
      r.status = r.computed == expected ? Status::pass : Status::fail;
    }
  }

  // -- example-specific checks ------------------------------------------

  void extras(CheckResult& r, const GroebnerOptions& o) {
    bool ok = true, any = false;
    auto claim = [&](bool holds, const std::string& what) {
      any = true;
      ok = ok && holds;
      r.certificate.push_back((holds ? "[ok] " : "[FAILED] ") + what);
    };
    if (id_ == "e2-2") disjoint_curves(claim, r, o);
    if (id_ == "e2-4") double_cover_locus(claim, r, o);
    if (id_ == "e1-3") cubic_locus(claim, o);
    if (id_ == "e1-1-p3" || id_ == "e1-1-p2") {
      auto a = ambient_check(model(), o);
      claim(a.extra_loci_verified, "X minus D+(x0) u D+(x1) lies in {yz != 0}, the locus of chart U");
      rep_.notes.push_back("the equation of U on {yz != 0} is taken from the model data, not derived");
    }
    if (model().blowup) blow_up_data(claim, o);
    if (id_ == "e2-5-pencil" || id_ == "e2-5-blowup") cross_model(claim);
    if (id_ == "e2-3")
      rep_.notes.push_back("the cubic-surface description H3 in P3 of this row is expected only; the model is the blow-up");
    r.expected = "example-specific claims hold";
    if (!any) {
      r.status = Status::skipped;
      r.computed = "none for this example";
      return;
    }
    r.computed = ok ? "all hold" : "some fail";
    r.status = ok ? Status::pass : Status::fail;
  }

  template <class Claim>
  void disjoint_curves(Claim& claim, CheckResult& r, const GroebnerOptions& o) {
    const auto& m = model();
    const Ring& ring = m.ambient.ring;
    std::vector<Polynomial> c1{m.named.at("c1a"), m.named.at("c1b")};
    std::vector<Polynomial> c2{m.named.at("c2a"), m.named.at("c2b")};
    claim(ideal_contains(ring, c1, m.equations, o), "C1 = {y + f2 = g = 0} lies on X");
    claim(ideal_contains(ring, c2, m.equations, o), "C2 = {y + g = y + f2 + h = 0} lies on X");
    for (auto [name, c] : {std::pair{"C1", &c1}, std::pair{"C2", &c2}}) {
      int d = dimension(ring, *c, o) - 1;
      claim(d == 1, std::string(name) + " has dimension " + std::to_string(d));
    }
    auto dj = subschemes_disjoint(m, c1, c2, o);
    for (const auto& c : dj.charts) r.certificate.push_back("  C1 + C2 on " + chart_line(c));
    claim(dj.disjoint == Verdict::yes, "C1 and C2 are disjoint (unit ideal on every chart)");
    if (dj.disjoint == Verdict::yes) rep_.notes.push_back("two disjoint curves on the regular surface X give rho >= 2");
    if (dj.disjoint == Verdict::inconclusive) throw ResourceLimitExceeded("pairs", o.limits.max_pairs);
  }

  template <class Claim>
  void double_cover_locus(Claim& claim, CheckResult& r, const GroebnerOptions& o) {
    Chart c = find_chart(model(), "D+(y)xD+(y')");
    auto j = nonsmooth_ideal(c, false);
    auto gb = groebner(j.ring, j.generators, o);
    r.certificate.push_back("  Sing ideal on " + c.name + ": basis {" + join(basis_lines(gb)) + "}");
    Polynomial xp = parse_polynomial("x'", j.ring);
    Polynomial q = parse_polynomial("w^2 + t3*x^2 + t4", j.ring);
    claim(gb.contains(q), "w^2 + t3*x^2 + t4 reduces to 0 against the Sing basis");
    claim(radical_membership(xp, j.generators, o), "x' lies in the radical of the Sing ideal (x'^2 is in it)");
    auto curve = groebner(j.ring, {xp, q}, o);
    claim(all_reduce_to_zero(j.generators, curve), "every Sing generator reduces to 0 against (x', w^2 + t3*x^2 + t4)");
    claim(dimension(curve) == 1, "{x' = w^2 + t3*x^2 + t4 = 0} is a curve, equal to Sing as a set");
  }

  template <class Claim>
  void cubic_locus(Claim& claim, const GroebnerOptions& o) {
    Chart c = find_chart(model(), "D+(w)");
    auto j = nonsmooth_ideal(c, false);
    auto curve = groebner(j.ring, {parse_polynomial("y - x", j.ring), parse_polynomial("-x^3 + s*z^3 + t", j.ring)}, o);
    claim(all_reduce_to_zero(j.generators, curve) && dimension(curve) == 1,
          "Sing on D+(w) contains the curve {y = x, -x^3 + s*z^3 + t = 0}");
    // The same computation on the simplified model x^2 y + x y^2 + z^3 over k-bar.
    Ring kb = parse_ring("ring p=3 geom x y z");
    Polynomial g = parse_polynomial("x^2*y + x*y^2 + z^3", kb);
    std::vector<Polynomial> sing{g, diff(g, "x"), diff(g, "y"), diff(g, "z")};
    auto line = groebner(kb, {parse_polynomial("x - y", kb), parse_polynomial("y - z", kb)}, o);
    claim(all_reduce_to_zero(sing, line), "over k-bar, Sing{x^2 y + x y^2 + z^3 = 0} contains the line {x = y = z}");
    auto other = groebner(kb, {parse_polynomial("x", kb), parse_polynomial("z", kb)}, o);
    bool contains_other = all_reduce_to_zero(sing, other);
    rep_.notes.push_back(std::string("the line {x = z = 0} is ") + (contains_other ? "" : "not ") +
                         "in the singular locus of x^2 y + x y^2 + z^3 (d/dx = y^2 there); the singular line is "
                         "{x = y = z}");
  }

  template <class Claim>
  void blow_up_data(Claim& claim, const GroebnerOptions& o) {
    const auto& d = *model().blowup;
    claim(blowup_charts_agree(model(), o), "the two blow-up charts agree on their overlap");
    std::string centre = "(" + d.g1.to_string() + ", " + d.g2.to_string() + ") on " + d.chart + " of " + d.parent_id;
    if (d.invert) centre += " with " + d.invert->to_string() + " inverted";
    claim(d.center_degree > 0, "centre " + centre + " has length " + std::to_string(d.center_degree));
  }

  template <class Claim>
  void cross_model(Claim& claim) {
    std::string other = id_ == "e2-5-pencil" ? "e2-5-blowup" : "e2-5-pencil";
    auto mine = Runner(id_, {Check::regular, Check::geom_normal, Check::geom_integral, Check::k2}, opts_).run();
    auto theirs = Runner(other, {Check::regular, Check::geom_normal, Check::geom_integral, Check::k2}, opts_).run();
    if (mine.inconclusive() || theirs.inconclusive()) throw ResourceLimitExceeded("pairs", opts_.limits.max_pairs);
    auto a = verdict_tuple(mine), b = verdict_tuple(theirs);
    claim(a == b, "verdict tuple (regular, geom_normal, geom_integral, K2) = (" + join(a) + ") for " + id_ + " and (" +
                      join(b) + ") for " + other);
  }

  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  }

  std::string id_;
  std::set<Check> checks_;
  GroebnerOptions opts_;
  GroebnerStats load_work_;
  ExampleRecord rec_;
  VerificationReport rep_;
  std::optional<RegularityReport> regular_;
};

}  // namespace

VerificationReport verify_example(const std::string& id, const std::set<Check>& checks, const GroebnerOptions& opts) {
  (void)record_source(id);  // unknown ids throw before anything runs
  return Runner(id, checks, opts).run();
}

Summary verify_all(std::optional<int> p, const std::set<Check>& checks, const GroebnerOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> ids;
  for (const auto& id : record_ids()) {
    if (!p || expected_row(record_row(id)).p == *p) ids.push_back(id);
  }
  std::size_t threads = 1;
  if (const char* env = std::getenv("DPV_THREADS")) threads = std::max(1, std::atoi(env));
  threads = std::min(threads, std::max<std::size_t>(ids.size(), 1));

  Summary s;
  s.p = p;
  s.reports.resize(ids.size());
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == ids.size()) return;
        i = next++;
      }
      s.reports[i] = verify_example(ids[i], checks, opts);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : s.reports) {
    if (r.mismatch()) ++s.mismatches;
    else if (r.inconclusive()) ++s.inconclusive;
  }
  s.seconds = seconds_since(t0);
  return s;
}

}  // namespace dpv::catalogue
