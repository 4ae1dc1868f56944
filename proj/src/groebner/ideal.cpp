#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "dpv/groebner.hpp"

namespace dpv {

namespace {

const Ring& ring_of(const Polynomial& g, const std::vector<Polynomial>& gens) {
  for (const auto& f : gens)
    if (!compatible(f.ring(), g.ring())) throw RingMismatch("ideal operation across rings");
  return g.ring();
}

// Ring with a fresh variable T, and the image of 1 - T*g there.
struct Rabinowitsch {
  Ring ring;
  std::vector<Polynomial> gens;
  std::size_t t;
};

Rabinowitsch rabinowitsch(const Polynomial& g, const std::vector<Polynomial>& gens) {
  const Ring& base = ring_of(g, gens);
  std::string name = base->fresh_name("T");
  Rabinowitsch r{base->extended({name}), {}, base->nvars()};
  for (const auto& f : gens) r.gens.push_back(embed(f, r.ring));
  Polynomial t = Polynomial::variable(r.ring, r.t);
  r.gens.push_back(Polynomial::constant(r.ring, 1) - t * embed(g, r.ring));
  return r;
}

std::uint32_t support_mask(const Monomial& m, std::size_t n) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (m.exp[i]) mask |= 1u << i;
  return mask;
}

}  // namespace

bool is_unit_ideal(const Ring& ring, const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
  return groebner(ring, gens, opts).is_unit();
}

bool radical_membership(const Polynomial& g, const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
  if (g.is_zero()) return true;
  if (g.is_constant()) return is_unit_ideal(g.ring(), gens, opts);
  auto r = rabinowitsch(g, gens);
  return groebner(r.ring, r.gens, opts).is_unit();
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& g,
                                 const GroebnerOptions& opts) {
  if (g.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  const Ring& base = ring_of(g, gens);
  if (g.is_constant()) return groebner(base, gens, opts).generators();
  auto r = rabinowitsch(g, gens);
  // T most significant: the basis elements free of T generate the elimination ideal.
  std::vector<std::size_t> perm(r.ring->nvars());
  perm[0] = r.t;
  std::iota(perm.begin() + 1, perm.end(), 0);
  auto gb = buchberger(r.gens, MonomialOrder::make(MonomialOrder::Kind::block, perm, 1), opts);
  std::vector<Polynomial> out;
  for (const auto& f : gb.generators())
    if (f.degree_in(r.t) <= 0) out.push_back(embed(f, base));
  return out;
}

int dimension(const GroebnerBasis& g) {
  const std::size_t n = g.ring()->nvars();
  if (g.is_unit()) return -1;
  if (g.is_zero()) return static_cast<int>(n);
  std::vector<std::uint32_t> masks;
  for (const auto& m : g.leading_monomials()) masks.push_back(support_mask(m, n));
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    // s is independent when no leading monomial is supported inside s.
    if (std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & ~s) == 0; })) best = size;
  }
  return best;
}

int dimension(const Ring& ring, const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
  return dimension(groebner(ring, gens, opts));
}

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& g) {
  if (g.is_unit()) return 0;
  const std::size_t n = g.ring()->nvars();
  auto leads = g.leading_monomials();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : leads) {
    std::uint32_t mask = support_mask(m, n);
    if (std::popcount(mask) == 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(mask));
      bound[v] = bound[v] ? std::min<std::uint32_t>(bound[v], m.exp[v]) : m.exp[v];
    }
  }
  if (std::any_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b == 0; })) return std::nullopt;

  // Count standard monomials inside the box of pure-power bounds.
  std::uint64_t count = 0;
  Monomial m;
  auto standard = [&] {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      m.exp[v] = static_cast<std::uint16_t>(e);
      if (!standard()) break;  // every larger exponent is divisible too
      walk(v + 1);
    }
    m.exp[v] = 0;
  };
  walk(0);
  return count;
}

std::optional<std::uint64_t> quotient_dimension(const Ring& ring, const std::vector<Polynomial>& gens,
                                                const GroebnerOptions& opts) {
  return quotient_dimension(groebner(ring, gens, opts));
}

bool projective_is_empty(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& irrelevant,
                         const GroebnerOptions& opts) {
  if (gens.empty() && irrelevant.empty()) return true;
  const Ring& ring = gens.empty() ? irrelevant.front().ring() : gens.front().ring();
  for (const auto& f : gens)
    if (!weighted_degree(f).homogeneous() && !f.is_zero())
      throw std::invalid_argument("projective_is_empty: inhomogeneous generator " + f.to_string());
  auto gb = groebner(ring, gens, opts);
  if (gb.is_unit()) return true;
  for (const auto& v : irrelevant) {
    if (gb.contains(v)) continue;
    if (!radical_membership(v, gb.generators(), opts)) return false;
  }
  return true;
}

bool projective_is_empty(const Ring& ring, const std::vector<Polynomial>& gens,
                         const std::vector<std::string>& irrelevant, const GroebnerOptions& opts) {
  std::vector<Polynomial> vars;
  for (const auto& name : irrelevant) vars.push_back(Polynomial::variable(ring, name));
  return projective_is_empty(gens, vars, opts);
}

bool ideal_contains(const Ring& ring, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                    const GroebnerOptions& opts) {
  auto gb = groebner(ring, a, opts);
  return std::all_of(b.begin(), b.end(), [&](const Polynomial& f) { return gb.contains(f); });
}

}  // namespace dpv
