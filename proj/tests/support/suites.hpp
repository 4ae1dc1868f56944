#pragma once

// Randomized Gröbner checks shared by the unit tests and the acceptance run.

#include <sstream>
#include <string>

#include "support/oracles.hpp"

namespace oracle {

struct SuiteResult {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t nonempty = 0;  // oracle suite only
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
  void fail(const std::string& what) {
    if (!failures++) first_failure = what;
  }
};

inline std::string describe(const std::vector<Polynomial>& g) {
  std::ostringstream os;
  os << "p=" << g.front().ring()->prime() << " {";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i].to_string();
  os << "}";
  return os.str();
}

/// Random ideals in <= 3 variables, <= 3 generators of degree <= 3, over
/// F_2, F_3, F_5 with 0-2 parameters: S-pairs reduce to zero, normal forms
/// are idempotent, inputs reduce to zero, grevlex and lex dimensions agree.
inline SuiteResult groebner_property_suite(std::size_t count, std::uint64_t seed = 1) {
  SuiteResult res;
  RandomIdeals gen(seed);
  const std::uint32_t primes[] = {2, 3, 5};
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t p = primes[i % 3];
    auto r = gen.ring(p, 1 + gen.uniform(3), (i / 3) % 3);
    auto gens = gen.ideal(r, 3, 3);
    const std::string what = describe(gens);
    ++res.instances;
    try {
      auto grevlex = dpv::buchberger(gens, MonomialOrder::grevlex(r->nvars()));
      auto lex = dpv::buchberger(gens, MonomialOrder::lex(r->nvars()));
      for (const auto* b : {&grevlex, &lex}) {
        if (!s_pairs_reduce_to_zero(b->generators(), b->order())) {
          res.fail("S-pair does not reduce to 0: " + what);
          break;
        }
        for (const auto& f : gens)
          if (!b->reduce(f).is_zero()) res.fail("input generator not reduced to 0: " + what);
        auto probe = gen.polynomial(r, 4, 5);
        auto nf = b->reduce(probe);
        if (b->reduce(nf) != nf) res.fail("reduce not idempotent: " + what);
        if (!b->reduce(probe - nf).is_zero()) res.fail("f - NF(f) not in the ideal: " + what);
      }
      if (dpv::dimension(grevlex) != dpv::dimension(lex)) res.fail("grevlex/lex dimensions differ: " + what);
      // The basis generates the input ideal: each input divides to zero
      // against the basis by naive division, too.
      for (const auto& f : gens)
        if (!naive_reduce(f, grevlex.generators(), grevlex.order()).is_zero())
          res.fail("naive division leaves a remainder: " + what);
    } catch (const std::exception& e) {
      res.fail(std::string(e.what()) + ": " + what);
    }
  }
  return res;
}

/// Parameter-free instances whose points all lie over F_{p^6}: affine ideals
/// in 1-2 variables containing a univariate cubic per variable, and binary
/// forms on P^1. Emptiness from the Gröbner engine must match enumeration.
inline SuiteResult emptiness_oracle_suite(std::size_t count, std::uint64_t seed = 2) {
  SuiteResult res;
  RandomIdeals gen(seed);
  const std::uint32_t primes[] = {2, 3, 5};
  std::vector<Fq> fields;
  for (auto p : primes) fields.emplace_back(p);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = i % 3;
    const Fq& F = fields[k];
    const std::uint32_t p = primes[k];
    ++res.instances;
    std::vector<Polynomial> gens;
    bool engine = false, brute = false;
    try {
      switch ((i / 3) % 3) {
        case 0: {  // affine line
          auto r = gen.ring(p, 1, 0);
          gens.push_back(gen.univariate(r, 0));
          if (gen.uniform(2)) gens.push_back(gen.univariate(r, 0));
          engine = dpv::is_unit_ideal(r, gens);
          brute = !affine_point_exists(F, gens, 1);
          break;
        }
        case 1: {  // affine plane
          auto r = gen.ring(p, 2, 0);
          gens.push_back(gen.univariate(r, 0));
          gens.push_back(gen.univariate(r, 1));
          if (gen.uniform(4)) {
            auto mixed = gen.polynomial(r, 3, 3);
            if (!mixed.is_zero()) gens.push_back(mixed);
          }
          engine = dpv::is_unit_ideal(r, gens);
          brute = !affine_point_exists(F, gens, 2);
          break;
        }
        default: {  // P^1
          auto r = gen.ring(p, 2, 0);
          std::size_t n = 1 + gen.uniform(3);
          Polynomial common = gen.uniform(2) ? gen.binary_form(r, 1) : Polynomial::constant(r, 1);
          while (gens.size() < n) {
            int d = 1 + static_cast<int>(gen.uniform(common.total_degree() > 0 ? 2 : 3));
            gens.push_back(gen.binary_form(r, d) * common);
          }
          engine = dpv::projective_is_empty(r, gens, {"x", "y"});
          brute = !p1_point_exists(F, gens);
          break;
        }
      }
    } catch (const std::exception& e) {
      res.fail(std::string(e.what()) + ": " + describe(gens));
      continue;
    }
    if (!brute) ++res.nonempty;
    if (engine != brute) res.fail(std::string("engine says ") + (engine ? "empty" : "nonempty") + ": " + describe(gens));
  }
  return res;
}

}  // namespace oracle
