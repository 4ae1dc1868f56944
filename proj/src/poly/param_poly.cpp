#include "dpv/param_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dpv/prime_field.hpp"

namespace dpv {

namespace {

std::uint16_t checked_add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t s = a + b;
  if (s > std::numeric_limits<std::uint16_t>::max())
    throw std::overflow_error("parameter exponent overflow");
  return static_cast<std::uint16_t>(s);
}

ParamMonomial mono_mul(const ParamMonomial& a, const ParamMonomial& b, std::size_t n) {
  ParamMonomial r;
  for (std::size_t i = 0; i < n; ++i) r.exp[i] = checked_add(a.exp[i], b.exp[i]);
  return r;
}

bool greater_term(const ParamPoly::Term& a, const ParamPoly::Term& b) { return a.first > b.first; }

}  // namespace

std::uint32_t ParamMonomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool ParamMonomial::divides(const ParamMonomial& other) const {
  for (std::size_t i = 0; i < kMaxParams; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

ParamPoly::ParamPoly(std::uint32_t p, std::size_t nvars) : p_(p), n_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxParams) throw std::invalid_argument("too many parameter variables");
}

ParamPoly ParamPoly::constant(std::uint32_t p, std::size_t nvars, std::uint32_t c) {
  ParamPoly r(p, nvars);
  c %= p;
  if (c != 0) r.terms_.push_back({ParamMonomial{}, c});
  return r;
}

ParamPoly ParamPoly::variable(std::uint32_t p, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("parameter index");
  ParamPoly r(p, nvars);
  ParamMonomial m;
  m.exp[index] = 1;
  r.terms_.push_back({m, 1 % p});
  return r;
}

ParamPoly ParamPoly::from_terms(std::uint32_t p, std::size_t nvars, std::vector<Term> terms) {
  ParamPoly r(p, nvars);
  std::sort(terms.begin(), terms.end(), greater_term);
  for (auto& t : terms) {
    t.second %= p;
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second = fp::add(r.terms_.back().second, t.second, p);
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (t.second != 0) {
      r.terms_.push_back(t);
    }
  }
  return r;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == ParamMonomial{});
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == ParamMonomial{} && terms_[0].second == 1;
}

std::uint32_t ParamPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant");
  return terms_[0].second;
}

std::uint32_t ParamPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
  return terms_.front().second;
}

const ParamMonomial& ParamPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero");
  return terms_.front().first;
}

int ParamPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.exp[var]);
  return d;
}

int ParamPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.first.degree()));
  return d;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r(p_, n_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->first > j->first) {
      r.terms_.push_back(*i++);
    } else if (j->first > i->first) {
      r.terms_.push_back(*j++);
    } else {
      std::uint32_t c = fp::add(i->second, j->second, p_);
      if (c != 0) r.terms_.push_back({i->first, c});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, o.terms_.end());
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = fp::neg(t.second, p_);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::scaled(std::uint32_t c) const {
  c %= p_;
  ParamPoly r(p_, n_);
  if (c == 0) return r;
  r.terms_ = terms_;
  if (c != 1)
    for (auto& t : r.terms_) t.second = fp::mul(t.second, c, p_);
  return r;
}

ParamPoly ParamPoly::shifted(const ParamMonomial& m) const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.first = mono_mul(t.first, m, n_);
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  if (is_zero() || o.is_zero()) return ParamPoly(p_, n_);
  if (o.is_constant()) return scaled(o.constant_value());
  if (is_constant()) return o.scaled(constant_value());
  if (o.terms_.size() == 1) return shifted(o.terms_[0].first).scaled(o.terms_[0].second);
  if (terms_.size() == 1) return o.shifted(terms_[0].first).scaled(terms_[0].second);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({mono_mul(a.first, b.first, n_), fp::mul(a.second, b.second, p_)});
  return from_terms(p_, n_, std::move(prod));
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return ParamPoly(p_, n_);
  if (d.is_constant()) return scaled(fp::inv(d.constant_value(), p_));
  const ParamMonomial& lm = d.leading_monomial();
  const std::uint32_t lc_inv = fp::inv(d.leading_coefficient(), p_);
  ParamPoly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    if (!lm.divides(lt.first)) return std::nullopt;
    ParamMonomial q;
    for (std::size_t i = 0; i < n_; ++i) q.exp[i] = lt.first.exp[i] - lm.exp[i];
    std::uint32_t c = fp::mul(lt.second, lc_inv, p_);
    quot.push_back({q, c});
    ParamPoly step(p_, n_);
    step.terms_.push_back({q, c});
    rem = rem - d * step;
  }
  return from_terms(p_, n_, std::move(quot));
}

ParamPoly ParamPoly::exact_quotient(const ParamPoly& d) const {
  auto q = divide_exact(d);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *std::move(q);
}

ParamPoly ParamPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.first.exp[var];
    std::uint32_t c = fp::mul(t.second, e % p_, p_);
    if (c == 0) continue;
    ParamMonomial m = t.first;
    m.exp[var] = static_cast<std::uint16_t>(e - 1);
    out.push_back({m, c});
  }
  return from_terms(p_, n_, std::move(out));
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  std::uint32_t lc = leading_coefficient();
  if (lc == 1) return *this;
  return scaled(fp::inv(lc, p_));
}

std::uint32_t ParamPoly::evaluate(std::span<const std::uint32_t> point) const {
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.second;
    for (std::size_t i = 0; i < n_; ++i)
      if (t.first.exp[i] != 0) v = fp::mul(v, fp::pow(point[i], t.first.exp[i], p_), p_);
    acc = fp::add(acc, v, p_);
  }
  return acc;
}

std::optional<ParamPoly> ParamPoly::pth_root() const {
  ParamPoly r(p_, n_);
  for (const auto& t : terms_) {
    ParamMonomial m;
    for (std::size_t i = 0; i < n_; ++i) {
      if (t.first.exp[i] % p_ != 0) return std::nullopt;
      m.exp[i] = static_cast<std::uint16_t>(t.first.exp[i] / p_);
    }
    // Frobenius is the identity on F_p.
    r.terms_.push_back({m, t.second});
  }
  return r;
}

std::string ParamPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool constant = t.first == ParamMonomial{};
    bool wrote = false;
    if (t.second != 1 || constant) {
      os << t.second;
      wrote = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (t.first.exp[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (t.first.exp[i] > 1) os << '^' << t.first.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Multivariate gcd by recursive primitive pseudo-remainder sequences.

namespace {

using UPoly = std::vector<ParamPoly>;

UPoly to_univariate(const ParamPoly& f, std::size_t v) {
  int d = f.degree_in(v);
  std::vector<std::vector<ParamPoly::Term>> buckets(static_cast<std::size_t>(d + 1));
  for (const auto& t : f.terms()) {
    ParamMonomial m = t.first;
    std::size_t k = m.exp[v];
    m.exp[v] = 0;
    buckets[k].push_back({m, t.second});
  }
  UPoly u;
  u.reserve(buckets.size());
  for (auto& b : buckets) u.push_back(ParamPoly::from_terms(f.prime(), f.nvars(), std::move(b)));
  return u;
}

ParamPoly from_univariate(const UPoly& u, std::size_t v, std::uint32_t p, std::size_t n) {
  std::vector<ParamPoly::Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k)
    for (const auto& t : u[k].terms()) {
      ParamMonomial m = t.first;
      m.exp[v] = static_cast<std::uint16_t>(k);
      terms.push_back({m, t.second});
    }
  return ParamPoly::from_terms(p, n, std::move(terms));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

ParamPoly content(const UPoly& u, std::uint32_t p, std::size_t n) {
  ParamPoly g(p, n);
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

void divide_by(UPoly& u, const ParamPoly& c) {
  if (c.is_one()) return;
  for (auto& x : u) x = x.exact_quotient(c);
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const ParamPoly& lcb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() >= b.size()) {
    ParamPoly lca = a.back();
    std::size_t shift = a.size() - b.size();
    if (!lcb.is_one())
      for (auto& x : a) x = x * lcb;
    for (std::size_t j = 0; j < db; ++j) a[j + shift] = a[j + shift] - lca * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

ParamPoly monomial_gcd(const ParamPoly& mono, const ParamPoly& f) {
  ParamMonomial m = mono.leading_monomial();
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < kMaxParams; ++i) m.exp[i] = std::min(m.exp[i], t.first.exp[i]);
  ParamPoly r = ParamPoly::constant(f.prime(), f.nvars(), 1);
  return r.shifted(m);
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  const std::uint32_t p = a.prime();
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly::constant(p, n, 1);
  if (a.terms().size() == 1) return monomial_gcd(a, b);
  if (b.terms().size() == 1) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  std::size_t v = 0;
  int da = 0, db = 0;
  for (; v < n; ++v) {
    da = a.degree_in(v);
    db = b.degree_in(v);
    if (da > 0 || db > 0) break;
  }
  if (da == 0) return gcd(a, content(to_univariate(b, v), p, n));
  if (db == 0) return gcd(content(to_univariate(a, v), p, n), b);

  UPoly ua = to_univariate(a, v);
  UPoly ub = to_univariate(b, v);
  ParamPoly ca = content(ua, p, n);
  ParamPoly cb = content(ub, p, n);
  ParamPoly g = gcd(ca, cb);
  divide_by(ua, ca);
  divide_by(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    UPoly r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = UPoly{ParamPoly::constant(p, n, 1)};
      break;
    }
    divide_by(r, content(r, p, n));
    ua = std::move(ub);
    ub = std::move(r);
  }
  divide_by(ub, content(ub, p, n));
  return (g * from_univariate(ub, v, p, n)).monic();
}

}  // namespace dpv
