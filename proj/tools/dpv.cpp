// Command-line front end: verification runs, lattice arithmetic and raw
// Gröbner computations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dpv/catalogue.hpp"
#include "dpv/groebner.hpp"
#include "dpv/lattice.hpp"
#include "dpv/parser.hpp"

namespace fs = std::filesystem;
namespace cat = dpv::catalogue;
namespace lat = dpv::lattice;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

dpv::GroebnerOptions options(std::uint64_t limit_pairs) {
  dpv::GroebnerOptions o;
  if (limit_pairs) o.limits.max_pairs = limit_pairs;
  return o;
}

std::vector<long long> int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string w;
  while (std::getline(ss, w, ',')) out.push_back(std::stoll(w));
  return out;
}

void add_lattice(CLI::App& app) {
  auto* lattice = app.add_subcommand("lattice", "exact intersection arithmetic");
  lattice->require_subcommand(1);

  static std::string weights, degrees;
  auto* wci = lattice->add_subcommand("k2-wci", "K^2 of a weighted complete intersection surface");
  wci->add_option("weights", weights, "comma-separated weights")->required();
  wci->add_option("degrees", degrees, "comma-separated degrees")->required();
  wci->callback([] { std::cout << lat::to_string(lat::k2_weighted_ci(int_list(weights), int_list(degrees))) << "\n"; });

  static std::string dims;
  static std::vector<std::string> multidegs;
  auto* mp = lattice->add_subcommand("k2-multiproj", "K^2 of a complete intersection in a product of P^n");
  mp->add_option("dims", dims, "comma-separated factor dimensions")->required();
  mp->add_option("degrees", multidegs, "one comma-separated multidegree per equation");
  mp->callback([] {
    std::vector<int> d;
    for (long long x : int_list(dims)) d.push_back(static_cast<int>(x));
    std::vector<std::vector<long long>> degs;
    for (const auto& s : multidegs) degs.push_back(int_list(s));
    std::cout << lat::k2_multiprojective(d, degs) << "\n";
  });

  static long long a1 = 0, a2 = 0, a3 = 0, a4 = 0;
  auto* bl = lattice->add_subcommand("blowup-k2", "K^2 after blowing up a point of the given degree");
  bl->add_option("k2", a1)->required();
  bl->add_option("degree", a2)->required();
  bl->callback([] { std::cout << lat::blowup_k2(a1, a2) << "\n"; });

  auto* rr = lattice->add_subcommand("rr-chi", "chi(O) + L.(L - K)/2");
  rr->add_option("chi0", a1)->required();
  rr->add_option("L2", a2)->required();
  rr->add_option("LK", a3)->required();
  rr->callback([] { std::cout << lat::to_string(lat::rr_chi(a1, a2, a3)) << "\n"; });

  auto* it = lattice->add_subcommand("index-two", "chi(H) - chi(O) under K = -rH");
  it->add_option("r", a1)->required();
  it->add_option("H2", a2)->required();
  it->callback([] {
    auto r = lat::index_two_check(a1, a2);
    std::cout << (r.verdict == lat::IndexTwo::integral ? "integral" : "non_integral") << " " << lat::to_string(r.value)
              << "\n";
  });

  auto* nc = lattice->add_subcommand("negcurve", "deg K_C = -2 against dY Z");
  nc->add_option("dY", a1)->required();
  nc->callback([] {
    std::cout << (lat::negcurve_divisibility(a1) == lat::Divisibility::consistent ? "consistent" : "contradiction")
              << "\n";
  });

  auto* cf = lattice->add_subcommand("conic-fibration", "aK^2 = 8 from -aK ~ 2F1 + 2F2");
  cf->add_option("a", a1)->required();
  cf->callback([] {
    auto r = lat::conic_fibration(a1);
    if (r)
      std::cout << "b=" << r->b << " c=" << r->c << " k2=" << r->k2 << "\n";
    else
      std::cout << "non-integral\n";
  });

  auto* cb = lattice->add_subcommand("conic-bound", "a in [1, a_max] with a K^2 <= 4");
  cb->add_option("k2", a1)->required();
  cb->add_option("a_max", a2)->required();
  cb->callback([] {
    auto v = lat::conic_bundle_bound(a1, a2);
    std::cout << "[";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
    std::cout << "]\n";
  });

  auto* rk = lattice->add_subcommand("ruled-k2", "8 (1 - h1)");
  rk->add_option("h1", a1)->required();
  rk->callback([] { std::cout << lat::ruled_k2(a1) << "\n"; });

  auto* ss = lattice->add_subcommand("secant", "(mH - E)^4 on the blow-up of P^4 along a curve");
  ss->add_option("m", a1)->required();
  ss->add_option("degC", a2)->required();
  ss->add_option("genus", a3)->required();
  ss->add_option("n", a4)->required();
  ss->callback([] { std::cout << lat::secant_selfint(a1, a2, a3, a4) << "\n"; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of regular del Pezzo surface examples"};
  app.require_subcommand(1);
  int status = 0;

  std::string id, checks = "all", json_path;
  std::uint64_t limit_pairs = 0;
  auto* verify = app.add_subcommand("verify", "verify one example");
  verify->add_option("id", id, "example id")->required();
  verify->add_option("--check", checks, "ambient,regular,normal,integral,k2,extras or all");
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  verify->add_option("--limit-pairs", limit_pairs, "S-pair budget per Gröbner computation");
  verify->callback([&] {
    auto r = cat::verify_example(id, cat::parse_checks(checks), options(limit_pairs));
    if (json_path == "-") {
      std::cout << cat::to_json(r);
    } else {
      std::cout << cat::report_text(r);
      if (!json_path.empty()) write_file(json_path, cat::to_json(r));
    }
    status = r.mismatch() ? 1 : r.inconclusive() ? 2 : 0;
  });

  int p = 0;
  std::string all_json;
  bool all_json_flag = false;
  auto* all = app.add_subcommand("verify-all", "verify every example record");
  all->add_option("--p", p, "only records of this characteristic")->check(CLI::IsMember({2, 3}));
  auto* jopt = all->add_option("--json", all_json, "JSON output: a directory, a file, or stdout when omitted")
                   ->expected(0, 1);
  all->add_option("--limit-pairs", limit_pairs, "S-pair budget per Gröbner computation");
  all->add_option("--check", checks, "ambient,regular,normal,integral,k2,extras or all");
  all->callback([&] {
    all_json_flag = jopt->count() > 0;
    auto s = cat::verify_all(p ? std::optional<int>(p) : std::nullopt, cat::parse_checks(checks), options(limit_pairs));
    if (all_json_flag && (all_json.empty() || all_json == "-")) {
      std::cout << cat::to_json(s);
    } else {
      std::cout << cat::summary_table(s);
      if (all_json_flag) {
        fs::path out(all_json);
        if (all_json.back() == '/' || fs::is_directory(out)) {
          fs::create_directories(out);
          for (const auto& r : s.reports) write_file(out / (r.id + ".json"), cat::to_json(r));
          write_file(out / "summary.json", cat::to_json(s));
        } else {
          write_file(out, cat::to_json(s));
        }
      }
    }
    status = s.exit_code();
  });

  std::string ring_file, ideal_file, order = "grevlex";
  auto* gb = app.add_subcommand("groebner", "reduced Gröbner basis of an ideal");
  gb->add_option("--ring", ring_file, "file with a ring declaration")->required();
  gb->add_option("--ideal", ideal_file, "file with one polynomial per line")->required();
  gb->add_option("--order", order)->check(CLI::IsMember({"grevlex", "lex"}));
  gb->add_option("--limit-pairs", limit_pairs, "S-pair budget");
  gb->callback([&] {
    dpv::Ring ring;
    std::istringstream in(read_file(ring_file));
    for (std::string line; std::getline(in, line);)
      if (!dpv::strip_comment(line).empty()) {
        ring = dpv::parse_ring(dpv::strip_comment(line));
        break;
      }
    if (!ring) throw std::runtime_error("no ring declaration in " + ring_file);
    std::vector<dpv::Polynomial> gens;
    for (auto& [name, f] : dpv::parse_poly_lines(read_file(ideal_file), ring)) gens.push_back(std::move(f));
    auto ord = order == "lex" ? dpv::MonomialOrder::lex(ring->nvars()) : dpv::MonomialOrder::grevlex(ring->nvars());
    dpv::GroebnerStats stats;
    auto o = options(limit_pairs);
    o.stats = &stats;
    auto basis = gens.empty() ? dpv::groebner(ring, gens, o) : dpv::buchberger(gens, ord, o);
    std::cout << "# order " << ord.name() << ", " << basis.generators().size() << " elements, dimension "
              << dpv::dimension(basis) << ", " << stats.pairs << " pairs\n";
    for (const auto& g : basis.generators()) std::cout << g.to_string() << "\n";
  });

  add_lattice(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const dpv::ResourceLimitExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
