#include <algorithm>
#include <cstdlib>
#include <set>

#include "engine.hpp"

namespace dpv {

namespace detail {

OPoly to_opoly(const Polynomial& f, const MonomialOrder& order) {
  OPoly out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, t.coef});
  std::sort(out.begin(), out.end(),
            [&](const OTerm& a, const OTerm& b) { return order.compare(a.mono, b.mono) > 0; });
  return out;
}

Polynomial to_polynomial(const Ring& ring, const OPoly& f) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back({t.mono, t.coef});
  return Polynomial::from_terms(ring, std::move(terms));
}

OPoly make_monic(OPoly f) {
  if (f.empty() || f.front().coef.is_one()) return f;
  Coefficient inv = f.front().coef.inverse();
  for (auto& t : f) t.coef = t.coef * inv;
  return f;
}

OPoly normal_form(const OPoly& f, const std::vector<Reducer>& reducers, const MonomialOrder& order,
                  const ReduceBudget& budget) {
  std::map<Monomial, Coefficient, Descending> acc(Descending{&order});
  for (const auto& t : f) acc.emplace_hint(acc.end(), t.mono, t.coef);
  OPoly rem;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Reducer* r = nullptr;
    for (const auto& cand : reducers)
      if (cand.lead.divides(it->first)) {
        r = &cand;
        break;
      }
    if (!r) {
      rem.push_back({it->first, std::move(it->second)});
      acc.erase(it);
      continue;
    }
    Monomial q = it->first / r->lead;
    Coefficient c = std::move(it->second);
    acc.erase(it);
    const OPoly& g = *r->poly;
    for (std::size_t k = 1; k < g.size(); ++k) {
      Coefficient delta = c * g[k].coef;
      auto [pos, inserted] = acc.try_emplace(g[k].mono * q, -delta);
      if (!inserted) {
        pos->second = pos->second - delta;
        if (pos->second.is_zero()) acc.erase(pos);
      }
    }
    if (budget.steps) ++*budget.steps;
    if (budget.max_terms && acc.size() + rem.size() > budget.max_terms)
      throw ResourceLimitExceeded("term", budget.max_terms);
  }
  return rem;
}

}  // namespace detail

using detail::OPoly;
using detail::Reducer;

std::uint64_t GroebnerLimits::default_pair_limit() {
  if (const char* env = std::getenv("DPV_PAIR_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

GroebnerStats& GroebnerStats::operator+=(const GroebnerStats& o) {
  bases += o.bases;
  pairs += o.pairs;
  pairs_skipped += o.pairs_skipped;
  zero_reductions += o.zero_reductions;
  reduction_steps += o.reduction_steps;
  return *this;
}

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), order_(std::move(order)), gens_(std::move(gens)) {
  if (order_.nvars() != ring_->nvars()) throw std::invalid_argument("monomial order does not match ring");
  auto data = std::make_shared<detail::BasisData>();
  data->polys.reserve(gens_.size());
  for (const auto& g : gens_) {
    if (!compatible(g.ring(), ring_)) throw RingMismatch("basis element from another ring");
    data->polys.push_back(detail::make_monic(detail::to_opoly(g, order_)));
  }
  for (const auto& p : data->polys) data->reducers.push_back({&p, p.front().mono});
  data_ = std::move(data);
}

bool GroebnerBasis::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_constant() && !gens_.front().is_zero();
}

Monomial GroebnerBasis::leading_monomial(std::size_t i) const { return data_->polys.at(i).front().mono; }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : data_->polys) out.push_back(p.front().mono);
  return out;
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  if (!compatible(f.ring(), ring_)) throw RingMismatch("reduce: polynomial from another ring");
  return detail::to_polynomial(ring_, detail::normal_form(detail::to_opoly(f, order_), data_->reducers, order_));
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& g) { return g.reduce(f); }

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

Polynomial leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  Monomial m = leading_monomial(f, order);
  for (const auto& t : f.terms())
    if (t.mono == m) return Polynomial::monomial(f.ring(), m, t.coef);
  return Polynomial(f.ring());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  auto lf = detail::to_opoly(f, order), lg = detail::to_opoly(g, order);
  if (lf.empty() || lg.empty()) return Polynomial(f.ring());
  Monomial l = lcm(lf.front().mono, lg.front().mono);
  Polynomial a = Polynomial::monomial(f.ring(), l / lf.front().mono, lf.front().coef.inverse());
  Polynomial b = Polynomial::monomial(f.ring(), l / lg.front().mono, lg.front().coef.inverse());
  return a * f - b * g;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!g.reduce(s_polynomial(gens[i], gens[j], g.order())).is_zero()) return false;
  return true;
}

namespace {

struct Pair {
  std::uint32_t degree;
  std::size_t i, j;
  Monomial lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Engine {
 public:
  Engine(Ring ring, const MonomialOrder& order, const GroebnerOptions& opts)
      : ring_(std::move(ring)), order_(order), limits_(opts.limits) {}

  /// False once the unit ideal has been detected.
  bool add(OPoly h);
  bool run();
  std::vector<Polynomial> reduced_basis() const;
  const GroebnerStats& stats() const { return stats_; }

 private:
  struct Entry {
    OPoly poly;
    Monomial lead;
    bool active = true;
  };

  OPoly reduce(const OPoly& f);
  void update(std::size_t h);
  OPoly spoly(const Pair& p) const;

  Ring ring_;
  const MonomialOrder& order_;
  GroebnerLimits limits_;
  GroebnerStats stats_;
  std::vector<Entry> basis_;
  std::set<Pair, PairLess> pairs_;
  std::vector<Reducer> reducers_;
  bool unit_ = false;
};

OPoly Engine::reduce(const OPoly& f) {
  return detail::normal_form(f, reducers_, order_, {limits_.max_terms, &stats_.reduction_steps});
}

bool Engine::add(OPoly h) {
  if (unit_) return false;
  h = reduce(h);
  if (h.empty()) {
    ++stats_.zero_reductions;
    return true;
  }
  h = detail::make_monic(std::move(h));
  if (h.front().mono.is_one()) {
    unit_ = true;
    return false;
  }
  if (h.front().mono.degree() > limits_.max_degree) throw ResourceLimitExceeded("degree", limits_.max_degree);
  Monomial lead = h.front().mono;
  basis_.push_back({std::move(h), lead, true});
  update(basis_.size() - 1);
  reducers_.clear();
  for (const auto& e : basis_)
    if (e.active) reducers_.push_back({&e.poly, e.lead});
  return true;
}

// Gebauer–Möller installation of basis element h.
void Engine::update(std::size_t h) {
  const Monomial& lh = basis_[h].lead;
  std::vector<Pair> c;
  for (std::size_t g = 0; g < h; ++g)
    if (basis_[g].active) {
      Monomial l = lcm(basis_[g].lead, lh);
      c.push_back({l.degree(), g, h, l});
    }

  std::vector<Pair> d;
  std::vector<bool> coprime_pair;
  for (std::size_t k = 0; k < c.size(); ++k) {
    bool cop = coprime(basis_[c[k].i].lead, lh);
    bool keep = cop;
    if (!keep) {
      keep = true;
      for (std::size_t m = k + 1; m < c.size() && keep; ++m)
        if (c[m].lcm.divides(c[k].lcm)) keep = false;
      for (std::size_t m = 0; m < d.size() && keep; ++m)
        if (d[m].lcm.divides(c[k].lcm)) keep = false;
    }
    if (keep) {
      d.push_back(c[k]);
      coprime_pair.push_back(cop);
    } else {
      ++stats_.pairs_skipped;
    }
  }

  for (auto it = pairs_.begin(); it != pairs_.end();) {
    const Monomial& l = it->lcm;
    if (lh.divides(l) && lcm(basis_[it->i].lead, lh) != l && lcm(basis_[it->j].lead, lh) != l) {
      it = pairs_.erase(it);
      ++stats_.pairs_skipped;
    } else {
      ++it;
    }
  }
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (coprime_pair[k])
      ++stats_.pairs_skipped;
    else
      pairs_.insert(d[k]);
  }
  for (std::size_t g = 0; g < h; ++g)
    if (basis_[g].active && lh.divides(basis_[g].lead)) basis_[g].active = false;
}

OPoly Engine::spoly(const Pair& p) const {
  const OPoly& f = basis_[p.i].poly;
  const OPoly& g = basis_[p.j].poly;
  Monomial qf = p.lcm / basis_[p.i].lead, qg = p.lcm / basis_[p.j].lead;
  std::map<Monomial, Coefficient, detail::Descending> acc(detail::Descending{&order_});
  for (std::size_t k = 1; k < f.size(); ++k) acc.emplace(f[k].mono * qf, f[k].coef);
  for (std::size_t k = 1; k < g.size(); ++k) {
    auto [pos, inserted] = acc.try_emplace(g[k].mono * qg, -g[k].coef);
    if (!inserted) {
      pos->second = pos->second - g[k].coef;
      if (pos->second.is_zero()) acc.erase(pos);
    }
  }
  OPoly out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back({m, std::move(c)});
  return out;
}

bool Engine::run() {
  while (!unit_ && !pairs_.empty()) {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    if (++stats_.pairs > limits_.max_pairs) throw ResourceLimitExceeded("pair", limits_.max_pairs);
    if (!add(spoly(p))) return false;
  }
  return !unit_;
}

std::vector<Polynomial> Engine::reduced_basis() const {
  if (unit_) return {Polynomial::constant(ring_, 1)};
  std::vector<const Entry*> active;
  for (const auto& e : basis_)
    if (e.active) active.push_back(&e);
  std::sort(active.begin(), active.end(),
            [&](const Entry* a, const Entry* b) { return order_.compare(a->lead, b->lead) < 0; });
  std::vector<Polynomial> out;
  out.reserve(active.size());
  for (std::size_t k = 0; k < active.size(); ++k) {
    std::vector<Reducer> others;
    for (std::size_t m = 0; m < active.size(); ++m)
      if (m != k) others.push_back({&active[m]->poly, active[m]->lead});
    OPoly tail(active[k]->poly.begin() + 1, active[k]->poly.end());
    OPoly nf = detail::normal_form(tail, others, order_);
    nf.insert(nf.begin(), active[k]->poly.front());
    out.push_back(detail::to_polynomial(ring_, nf));
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list needs a ring");
  const Ring& ring = gens.front().ring();
  for (const auto& g : gens)
    if (!compatible(g.ring(), ring)) throw RingMismatch("buchberger: generators from different rings");
  if (order.nvars() != ring->nvars()) throw std::invalid_argument("monomial order does not match ring");

  for (const auto& g : gens)
    if (g.is_constant() && !g.is_zero()) {
      if (opts.stats) ++opts.stats->bases;
      return GroebnerBasis(ring, order, {Polynomial::constant(ring, 1)});
    }

  std::vector<OPoly> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(detail::to_opoly(g, order));
  std::stable_sort(input.begin(), input.end(),
                   [&](const OPoly& a, const OPoly& b) { return order.compare(a.front().mono, b.front().mono) < 0; });

  Engine engine(ring, order, opts);
  struct Flush {
    const Engine& e;
    GroebnerStats* out;
    ~Flush() {
      if (out) {
        *out += e.stats();
        ++out->bases;
      }
    }
  } flush{engine, opts.stats};

  bool open = true;
  for (auto& f : input)
    if (!(open = engine.add(std::move(f)))) break;
  if (open) engine.run();
  return GroebnerBasis(ring, order, engine.reduced_basis());
}

GroebnerBasis groebner(const Ring& ring, const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) return GroebnerBasis(ring, MonomialOrder::grevlex(ring->nvars()), {});
  return buchberger(gens, MonomialOrder::grevlex(ring->nvars()), opts);
}

}  // namespace dpv
