#include "dpv/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dpv/prime_field.hpp"

namespace dpv {

namespace {

Coefficient coefficient_power(const Coefficient& c, unsigned e) {
  Coefficient result = Coefficient::constant(c.prime(), c.nparams(), 1);
  Coefficient base = c;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

/// Evaluates a parameter polynomial at coefficient-field values; unassigned
/// parameters stay themselves.
Coefficient compose(const ParamPoly& f, const std::vector<std::optional<Coefficient>>& values) {
  const std::uint32_t p = f.prime();
  const std::size_t n = f.nvars();
  Coefficient acc(p, n);
  std::vector<ParamPoly::Term> untouched;
  for (const auto& t : f.terms()) {
    ParamMonomial keep;
    Coefficient term = Coefficient::constant(p, n, t.second);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.first.exp[i] == 0) continue;
      if (values[i])
        term = term * coefficient_power(*values[i], t.first.exp[i]);
      else
        keep.exp[i] = t.first.exp[i];
    }
    if (!(keep == ParamMonomial{})) term = term * Coefficient::from_poly(ParamPoly::constant(p, n, 1).shifted(keep));
    acc = acc + term;
  }
  return acc;
}

bool greater_mono(const Polynomial::Term& a, const Polynomial::Term& b) { return a.mono > b.mono; }

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial Polynomial::constant(Ring ring, const Coefficient& c) {
  Polynomial r(std::move(ring));
  if (c.prime() != r.ring_->prime() || c.nparams() != r.ring_->nparams())
    throw RingMismatch("coefficient from a different field");
  if (!c.is_zero()) r.terms_.push_back({Monomial{}, c});
  return r;
}

Polynomial Polynomial::constant(Ring ring, long long c) {
  auto coef = Coefficient::constant(ring->prime(), ring->nparams(), c);
  return constant(std::move(ring), coef);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index");
  Monomial m;
  m.exp[index] = 1;
  auto one = Coefficient::constant(ring->prime(), ring->nparams(), 1);
  return monomial(std::move(ring), m, one);
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  auto idx = ring->var_index(name);
  if (!idx) throw std::invalid_argument("unknown geometric variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::parameter(Ring ring, std::string_view name) {
  auto idx = ring->param_index(name);
  if (!idx) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  auto c = Coefficient::parameter(ring->prime(), ring->nparams(), *idx);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Coefficient& c) {
  Polynomial r(std::move(ring));
  if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial r(std::move(ring));
  std::sort(terms.begin(), terms.end(), greater_mono);
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef = r.terms_.back().coef + t.coef;
      if (r.terms_.back().coef.is_zero()) r.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return zero_coefficient();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
  return d;
}

std::optional<std::size_t> Polynomial::as_variable() const {
  if (terms_.size() != 1 || !terms_[0].coef.is_one() || terms_[0].mono.degree() != 1) return std::nullopt;
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (terms_[0].mono.exp[i] == 1) return i;
  return std::nullopt;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!compatible(ring_, o.ring_)) throw RingMismatch("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->mono > j->mono) {
      r.terms_.push_back(*i++);
    } else if (j->mono > i->mono) {
      r.terms_.push_back(*j++);
    } else {
      Coefficient c = i->coef + j->coef;
      if (!c.is_zero()) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, o.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  if (!c.is_one())
    for (auto& t : r.terms_) t.coef = t.coef * c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& vars = ring_->var_names();
  const auto& params = ring_->param_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[i];
      if (t.mono.exp[i] > 1) mono += '^' + std::to_string(t.mono.exp[i]);
    }
    if (mono.empty()) {
      os << t.coef.to_string(params);
      continue;
    }
    if (t.coef.is_one()) {
      os << mono;
      continue;
    }
    std::string c = t.coef.to_string(params);
    bool bare = t.coef.denominator().is_one() && t.coef.numerator().terms().size() == 1;
    if (!bare && t.coef.denominator().is_one()) c = "(" + c + ")";
    os << c << '*' << mono;
  }
  return os.str();
}

Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return f * g;
  }
  throw std::logic_error("unknown arithmetic operation");
}

Polynomial diff_geometric(const Polynomial& f, std::size_t var) {
  const std::uint32_t p = f.ring()->prime();
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.mono.exp[var];
    if (e % p == 0) continue;
    Monomial m = t.mono;
    m.exp[var] = static_cast<std::uint16_t>(e - 1);
    out.push_back({m, t.coef * Coefficient::constant(p, f.ring()->nparams(), e % p)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial diff_parameter(const Polynomial& f, std::size_t param) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    Coefficient c = t.coef.derivative(param);
    if (!c.is_zero()) out.push_back({t.mono, std::move(c)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial clear_denominators(const Polynomial& f) {
  ParamPoly l = ParamPoly::constant(f.ring()->prime(), f.ring()->nparams(), 1);
  for (const auto& t : f.terms()) {
    const ParamPoly& d = t.coef.denominator();
    if (d.is_one() || d == l) continue;
    l = l * d.exact_quotient(gcd(l, d));
  }
  if (l.is_one()) return f;
  return f.scaled(Coefficient::from_poly(std::move(l)));
}

Polynomial diff(const Polynomial& f, std::string_view var) {
  if (auto i = f.ring()->var_index(var)) return diff_geometric(f, *i);
  if (auto i = f.ring()->param_index(var)) return diff_parameter(f, *i);
  throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
}

Polynomial substitute(const Polynomial& f, const Substitution& s) { return substitute(f, s, f.ring()); }

Polynomial substitute(const Polynomial& f, const Substitution& s, const Ring& target) {
  const Ring& src = f.ring();
  if (!src->same_parameters(*target)) throw RingMismatch("substitution target has different coefficients");
  const std::size_t n = src->nvars();

  std::vector<bool> used(n, false);
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || t.mono.exp[i] != 0;

  // Image of each variable: either a renamed target variable (fast path) or a
  // general polynomial.
  std::vector<std::optional<std::size_t>> rename(n);
  std::vector<std::optional<Polynomial>> image(n);
  std::vector<bool> to_one(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = src->var_names()[i];
    auto it = s.geometric.find(name);
    if (it != s.geometric.end()) {
      if (!compatible(it->second.ring(), target)) throw RingMismatch("substitution value for '" + name + "' in another ring");
      if (auto v = it->second.as_variable()) {
        rename[i] = v;
      } else if (it->second.is_constant() && it->second.constant_term().is_one()) {
        to_one[i] = true;
      } else {
        image[i] = it->second;
      }
    } else if (auto idx = target->var_index(name)) {
      rename[i] = idx;
    } else if (used[i]) {
      throw RingMismatch("variable '" + name + "' has no image in the target ring");
    }
  }
  for (const auto& [name, value] : s.parameters) {
    if (!src->param_index(name)) throw std::invalid_argument("unknown parameter '" + name + "'");
    if (value.prime() != src->prime() || value.nparams() != src->nparams())
      throw RingMismatch("parameter value from another field");
  }
  for (const auto& [name, value] : s.geometric)
    if (!src->var_index(name)) throw std::invalid_argument("unknown variable '" + name + "'");

  std::vector<std::optional<Coefficient>> param_values(src->nparams());
  bool any_param = false;
  for (std::size_t j = 0; j < src->nparams(); ++j) {
    auto it = s.parameters.find(src->param_names()[j]);
    if (it != s.parameters.end()) {
      param_values[j] = it->second;
      any_param = true;
    }
  }
  auto map_coef = [&](const Coefficient& c) {
    if (!any_param) return c;
    return compose(c.numerator(), param_values) / compose(c.denominator(), param_values);
  };

  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, image[i]->pow(e)).first;
    return it->second;
  };

  std::vector<Polynomial::Term> simple;
  Polynomial acc(target);
  for (const auto& t : f.terms()) {
    Monomial m;
    bool general = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (rename[i]) {
        std::uint32_t e = std::uint32_t{m.exp[*rename[i]]} + t.mono.exp[i];
        if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
        m.exp[*rename[i]] = static_cast<std::uint16_t>(e);
      } else if (image[i]) {
        general = true;
      }
    }
    Coefficient c = map_coef(t.coef);
    if (!general) {
      simple.push_back({m, std::move(c)});
      continue;
    }
    Polynomial term = Polynomial::monomial(target, m, c);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono.exp[i] != 0 && image[i]) term = term * power(i, t.mono.exp[i]);
    acc = acc + term;
  }
  return acc + Polynomial::from_terms(target, std::move(simple));
}

Polynomial embed(const Polynomial& f, const Ring& target) { return substitute(f, Substitution{}, target); }

std::vector<int> monomial_degree(const Ring& ring, const Monomial& m) {
  std::vector<int> d(ring->grading_rank(), 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) d[j] += static_cast<int>(m.exp[i]) * ring->weight(i)[j];
  return d;
}

WeightedDegree weighted_degree(const Polynomial& f) {
  WeightedDegree r;
  for (const auto& t : f.terms()) {
    auto d = monomial_degree(f.ring(), t.mono);
    if (r.kind == WeightedDegree::Kind::zero) {
      r.kind = WeightedDegree::Kind::homogeneous;
      r.degree = std::move(d);
    } else if (d != r.degree) {
      return WeightedDegree{WeightedDegree::Kind::inhomogeneous, {}};
    }
  }
  return r;
}

Polynomial dehomogenize(const Polynomial& f, std::string_view var) {
  return dehomogenize(f, var, f.ring()->without(var));
}

Polynomial dehomogenize(const Polynomial& f, std::string_view var, const Ring& target) {
  auto idx = f.ring()->var_index(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  const auto& w = f.ring()->weight(*idx);
  int total = 0, ones = 0;
  for (int x : w) {
    total += x;
    ones += x == 1;
  }
  if (total != 1 || ones != 1) throw std::invalid_argument("dehomogenize needs a weight-one variable, '" + std::string(var) + "' is not");
  if (weighted_degree(f).kind == WeightedDegree::Kind::inhomogeneous)
    throw std::invalid_argument("dehomogenize of a non-homogeneous polynomial");
  if (target->var_index(var)) throw RingMismatch("dehomogenization target still contains the variable");
  Substitution s;
  s.geometric.emplace(std::string(var), Polynomial::constant(target, 1));
  return substitute(f, s, target);
}

std::optional<Polynomial> pth_root(const Polynomial& f) {
  const std::uint32_t p = f.ring()->prime();
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] % p != 0) return std::nullopt;
      m.exp[i] = static_cast<std::uint16_t>(t.mono.exp[i] / p);
    }
    auto c = t.coef.pth_root();
    if (!c) return std::nullopt;
    out.push_back({m, *std::move(c)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

std::optional<std::uint32_t> evaluate(const Polynomial& f, std::span<const std::uint32_t> point,
                                      std::span<const std::uint32_t> params) {
  const std::uint32_t p = f.ring()->prime();
  std::uint32_t acc = 0;
  for (const auto& t : f.terms()) {
    auto c = t.coef.evaluate(params);
    if (!c) return std::nullopt;
    std::uint32_t v = *c;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
      if (t.mono.exp[i]) v = fp::mul(v, fp::pow(point[i], t.mono.exp[i], p), p);
    acc = fp::add(acc, v, p);
  }
  return acc;
}

}  // namespace dpv
