#pragma once

// Test-only oracles, independent of the Gröbner engine: naive division,
// arithmetic in F_{p^6}, brute-force point search and a random ideal source.

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dpv/groebner.hpp"
#include "dpv/polynomial.hpp"

namespace dpv {
// Readable gtest failure messages.
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << f.to_string(); }
}  // namespace dpv

namespace oracle {

using dpv::Coefficient;
using dpv::Monomial;
using dpv::MonomialOrder;
using dpv::Polynomial;
using dpv::Ring;

/// Full division by a list, term by term, using only polynomial arithmetic.
inline Polynomial naive_reduce(Polynomial f, const std::vector<Polynomial>& g, const MonomialOrder& order) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    Monomial lm = dpv::leading_monomial(f, order);
    Polynomial lt = dpv::leading_term(f, order);
    bool divided = false;
    for (const auto& h : g) {
      if (h.is_zero()) continue;
      Monomial hm = dpv::leading_monomial(h, order);
      if (!hm.divides(lm)) continue;
      Polynomial ht = dpv::leading_term(h, order);
      Coefficient q = lt.terms().front().coef / ht.terms().front().coef;
      f = f - h * Polynomial::monomial(f.ring(), lm / hm, q);
      divided = true;
      break;
    }
    if (!divided) {
      rem = rem + lt;
      f = f - lt;
    }
  }
  return rem;
}

/// Every S-polynomial of the basis divides to zero (naive division).
inline bool s_pairs_reduce_to_zero(const std::vector<Polynomial>& g, const MonomialOrder& order) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Monomial a = dpv::leading_monomial(g[i], order), b = dpv::leading_monomial(g[j], order);
      const Monomial l = dpv::lcm(a, b);
      Coefficient ca = dpv::leading_term(g[i], order).terms().front().coef;
      Coefficient cb = dpv::leading_term(g[j], order).terms().front().coef;
      Polynomial s = g[i] * Polynomial::monomial(g[i].ring(), l / a, cb) -
                     g[j] * Polynomial::monomial(g[j].ring(), l / b, ca);
      if (!naive_reduce(s, g, order).is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// F_{p^6} as F_p[z]/(m), m irreducible of degree 6.

class Fq {
 public:
  using Elt = std::vector<std::uint32_t>;  // 6 coefficients, low degree first

  explicit Fq(std::uint32_t p) : p_(p) { find_modulus(); }

  std::uint32_t p() const { return p_; }
  std::uint64_t size() const {
    std::uint64_t q = 1;
    for (int i = 0; i < 6; ++i) q *= p_;
    return q;
  }
  Elt zero() const { return Elt(6, 0); }
  Elt one() const {
    Elt e = zero();
    e[0] = 1;
    return e;
  }
  Elt scalar(std::uint32_t c) const {
    Elt e = zero();
    e[0] = c % p_;
    return e;
  }
  Elt element(std::uint64_t index) const {
    Elt e = zero();
    for (int i = 0; i < 6; ++i) {
      e[i] = static_cast<std::uint32_t>(index % p_);
      index /= p_;
    }
    return e;
  }
  Elt add(const Elt& a, const Elt& b) const {
    Elt r(6);
    for (int i = 0; i < 6; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Elt mul(const Elt& a, const Elt& b) const {
    std::vector<std::uint64_t> t(11, 0);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) t[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    for (int k = 10; k >= 6; --k) {
      std::uint64_t c = t[k] % p_;
      t[k] = 0;
      // z^6 = -(m_0 + ... + m_5 z^5)
      for (int i = 0; i < 6; ++i) t[k - 6 + i] += c * (p_ - m_[i]);
    }
    Elt r(6);
    for (int i = 0; i < 6; ++i) r[i] = static_cast<std::uint32_t>(t[i] % p_);
    return r;
  }
  Elt pow(Elt a, std::uint64_t e) const {
    Elt r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(const Elt& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }

  /// Value of a parameter-free polynomial at a point.
  Elt eval(const Polynomial& f, const std::vector<Elt>& point) const {
    Elt acc = zero();
    for (const auto& t : f.terms()) {
      auto c = t.coef.evaluate(std::vector<std::uint32_t>{});
      Elt v = scalar(*c);
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.mono.exp[i]) v = mul(v, pow(point[i], t.mono.exp[i]));
      acc = add(acc, v);
    }
    return acc;
  }

 private:
  // Brute-force search for a monic sextic without roots or factors of
  // degree 2 and 3; checked via x^(p^k) mod m.
  void find_modulus() {
    for (std::uint64_t idx = 0;; ++idx) {
      std::uint64_t t = idx;
      m_.assign(6, 0);
      for (int i = 0; i < 6; ++i) {
        m_[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      if (m_[0] == 0) continue;
      if (irreducible()) return;
    }
  }
  using P = std::vector<std::uint32_t>;

  std::uint32_t inv(std::uint32_t x) const {
    std::uint64_t r = 1, b = x % p_;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
    }
    return static_cast<std::uint32_t>(r);
  }

  static int deg(const P& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (v[i]) return i;
    return -1;
  }

  // f mod g over F_p.
  P rem(P f, const P& g) const {
    const int dg = deg(g);
    const std::uint32_t li = inv(g[dg]);
    for (int df = deg(f); df >= dg; df = deg(f)) {
      std::uint64_t c = static_cast<std::uint64_t>(f[df]) * li % p_;
      for (int i = 0; i <= dg; ++i) f[i + df - dg] = static_cast<std::uint32_t>((f[i + df - dg] + (p_ - c) * g[i]) % p_);
    }
    return f;
  }

  // Degree of gcd(a, m) over F_p.
  int gcd_degree_with_modulus(const P& a) const {
    P f(m_.begin(), m_.end());
    f.push_back(1);
    P g = a;
    while (deg(g) >= 0) {
      P r = rem(f, g);
      f = g;
      g = r;
    }
    return deg(f);
  }

  // Monic sextic m is irreducible iff x^(p^6) = x mod m and x^(p^k) - x is
  // coprime to m for k = 2, 3.
  bool irreducible() const {
    P x(6, 0);
    x[1] = 1;
    P cur = x;
    std::vector<P> frob;
    for (int k = 1; k <= 6; ++k) {
      cur = pow(cur, p_);
      frob.push_back(cur);
    }
    if (frob[5] != x) return false;
    for (int k : {2, 3}) {
      P d = frob[k - 1];
      d[1] = (d[1] + p_ - 1) % p_;
      if (gcd_degree_with_modulus(d) > 0) return false;
    }
    return true;
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> m_;
};

/// Whether V(gens) has a point in affine n-space over F_{p^6}; gens
/// parameter-free. A coordinate that some generator constrains univariately
/// ranges over that generator's roots only.
inline bool affine_point_exists(const Fq& F, const std::vector<Polynomial>& gens, std::size_t n) {
  const std::uint64_t q = F.size();
  std::vector<std::vector<Fq::Elt>> cand(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Polynomial* uni = nullptr;
    for (const auto& g : gens) {
      if (g.is_constant()) continue;
      bool only_v = true;
      for (const auto& t : g.terms())
        for (std::size_t w = 0; w < n; ++w)
          if (w != v && t.mono.exp[w]) only_v = false;
      if (only_v) uni = &g;
    }
    std::vector<Fq::Elt> pt(n, F.zero());
    for (std::uint64_t a = 0; a < q; ++a) {
      pt[v] = F.element(a);
      if (!uni || F.is_zero(F.eval(*uni, pt))) cand[v].push_back(pt[v]);
    }
  }
  std::vector<Fq::Elt> pt(n);
  std::vector<std::size_t> idx(n, 0);
  for (const auto& c : cand)
    if (c.empty()) return false;
  while (true) {
    for (std::size_t v = 0; v < n; ++v) pt[v] = cand[v][idx[v]];
    bool all = true;
    for (const auto& g : gens)
      if (!F.is_zero(F.eval(g, pt))) {
        all = false;
        break;
      }
    if (all) return true;
    std::size_t v = 0;
    while (v < n && ++idx[v] == cand[v].size()) idx[v++] = 0;
    if (v == n) return false;
  }
}

/// Whether homogeneous gens in x, y have a common zero in P^1(F_{p^6}).
inline bool p1_point_exists(const Fq& F, const std::vector<Polynomial>& gens) {
  auto zero_at = [&](const std::vector<Fq::Elt>& pt) {
    for (const auto& g : gens)
      if (!F.is_zero(F.eval(g, pt))) return false;
    return true;
  };
  if (zero_at({F.one(), F.zero()})) return true;
  for (std::uint64_t a = 0; a < F.size(); ++a)
    if (zero_at({F.element(a), F.one()})) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Random ideals.

struct RandomIdeals {
  std::mt19937_64 rng;
  explicit RandomIdeals(std::uint64_t seed) : rng(seed) {}

  std::uint32_t uniform(std::uint32_t n) { return static_cast<std::uint32_t>(rng() % n); }

  Ring ring(std::uint32_t p, std::size_t nvars, std::size_t nparams) {
    static const char* vars[] = {"x", "y", "z"};
    static const char* params[] = {"s", "t"};
    return dpv::RingContext::standard(p, {vars, vars + nvars}, {params, params + nparams});
  }

  Coefficient coefficient(const Ring& r) {
    const std::uint32_t p = r->prime();
    Coefficient c = Coefficient::constant(p, r->nparams(), 1 + uniform(p - 1));
    if (r->nparams() == 0 || uniform(3) == 0) return c;
    Coefficient s = Coefficient::parameter(p, r->nparams(), uniform(static_cast<std::uint32_t>(r->nparams())));
    switch (uniform(4)) {
      case 0: return c * s;
      case 1: return c + s;
      case 2: return c * s * s + Coefficient::constant(p, r->nparams(), 1);
      default: return (s + c).inverse();
    }
  }

  Polynomial polynomial(const Ring& r, int max_degree, std::size_t max_terms) {
    Polynomial f(r);
    std::size_t terms = 1 + uniform(static_cast<std::uint32_t>(max_terms));
    for (std::size_t k = 0; k < terms; ++k) {
      Monomial m;
      int budget = static_cast<int>(uniform(static_cast<std::uint32_t>(max_degree + 1)));
      for (int d = 0; d < budget; ++d) ++m.exp[uniform(static_cast<std::uint32_t>(r->nvars()))];
      f = f + Polynomial::monomial(r, m, coefficient(r));
    }
    return f;
  }

  std::vector<Polynomial> ideal(const Ring& r, std::size_t max_gens, int max_degree) {
    std::vector<Polynomial> g;
    std::size_t n = 1 + uniform(static_cast<std::uint32_t>(max_gens));
    while (g.size() < n) {
      Polynomial f = polynomial(r, max_degree, 4);
      if (!f.is_zero()) g.push_back(f);
    }
    return g;
  }

  /// Homogeneous binary form of degree d >= 1 in x, y.
  Polynomial binary_form(const Ring& r, int d) {
    Polynomial f(r);
    while (f.is_zero())
      for (int i = 0; i <= d; ++i) {
        if (uniform(2)) continue;
        Monomial m;
        m.exp[0] = static_cast<std::uint16_t>(i);
        m.exp[1] = static_cast<std::uint16_t>(d - i);
        f = f + Polynomial::monomial(r, m, Coefficient::constant(r->prime(), 0, 1 + uniform(r->prime() - 1)));
      }
    return f;
  }

  /// Nonconstant univariate polynomial of degree <= 3 in variable v.
  Polynomial univariate(const Ring& r, std::size_t v) {
    Polynomial f(r);
    int d = 1 + static_cast<int>(uniform(3));
    for (int i = 0; i <= d; ++i) {
      std::uint32_t c = i == d ? 1 + uniform(r->prime() - 1) : uniform(r->prime());
      if (!c) continue;
      Monomial m;
      m.exp[v] = static_cast<std::uint16_t>(i);
      f = f + Polynomial::monomial(r, m, Coefficient::constant(r->prime(), 0, c));
    }
    return f;
  }
};

}  // namespace oracle
