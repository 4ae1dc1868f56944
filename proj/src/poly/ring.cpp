#include "dpv/ring.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dpv/param_poly.hpp"
#include "dpv/prime_field.hpp"

namespace dpv {

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t{a.exp[i]} + b.exp[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (b.exp[i] > a.exp[i]) throw std::logic_error("monomial division is not exact");
    r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

Ring RingContext::make(std::uint32_t p, std::vector<std::string> vars, std::vector<std::vector<int>> weights,
                       std::vector<std::string> params) {
  if (p == 0 || !fp::is_prime(p)) throw std::invalid_argument("characteristic must be a prime, got " + std::to_string(p));
  if (vars.size() > kMaxVars) throw std::invalid_argument("too many geometric variables");
  if (params.size() > kMaxParams) throw std::invalid_argument("too many parameter variables");
  if (weights.size() != vars.size()) throw std::invalid_argument("one weight vector per variable is required");
  std::set<std::string> seen;
  for (const auto& n : vars)
    if (n.empty() || !seen.insert(n).second) throw std::invalid_argument("duplicate or empty variable name '" + n + "'");
  for (const auto& n : params)
    if (n.empty() || !seen.insert(n).second) throw std::invalid_argument("duplicate or empty variable name '" + n + "'");
  if (!weights.empty()) {
    const std::size_t rank = weights.front().size();
    if (rank == 0) throw std::invalid_argument("empty weight vector");
    for (const auto& w : weights) {
      if (w.size() != rank) throw std::invalid_argument("weight vectors must have equal length");
      bool positive = false;
      for (int x : w) {
        if (x < 0) throw std::invalid_argument("negative weight");
        positive = positive || x > 0;
      }
      if (!positive) throw std::invalid_argument("every variable needs a positive weight");
    }
  }
  auto r = std::shared_ptr<RingContext>(new RingContext());
  r->p_ = p;
  r->vars_ = std::move(vars);
  r->weights_ = std::move(weights);
  r->params_ = std::move(params);
  return r;
}

Ring RingContext::standard(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> params) {
  std::vector<std::vector<int>> w(vars.size(), std::vector<int>{1});
  return make(p, std::move(vars), std::move(w), std::move(params));
}

std::optional<std::size_t> RingContext::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> RingContext::param_index(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return i;
  return std::nullopt;
}

Ring RingContext::with_variables(std::vector<std::string> vars, std::vector<std::vector<int>> weights) const {
  return make(p_, std::move(vars), std::move(weights), params_);
}

Ring RingContext::without(std::string_view var) const {
  auto idx = var_index(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(var) + "'");
  std::vector<std::string> v;
  std::vector<std::vector<int>> w;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i == *idx) continue;
    v.push_back(vars_[i]);
    w.push_back(weights_[i]);
  }
  return with_variables(std::move(v), std::move(w));
}

Ring RingContext::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> v = vars_;
  std::vector<std::vector<int>> w = weights_;
  const std::size_t rank = grading_rank();
  for (const auto& e : extra) {
    v.push_back(e);
    std::vector<int> unit(rank, 0);
    unit[0] = 1;
    w.push_back(unit);
  }
  return with_variables(std::move(v), std::move(w));
}

std::string RingContext::fresh_name(std::string_view stem) const {
  auto taken = [&](const std::string& n) { return var_index(n).has_value() || param_index(n).has_value(); };
  std::string candidate(stem);
  for (int k = 1; taken(candidate); ++k) candidate = std::string(stem) + std::to_string(k);
  return candidate;
}

bool RingContext::same_parameters(const RingContext& o) const { return p_ == o.p_ && params_ == o.params_; }

bool RingContext::same_as(const RingContext& o) const {
  return same_parameters(o) && vars_ == o.vars_ && weights_ == o.weights_;
}

std::string RingContext::declaration() const {
  std::ostringstream os;
  os << "ring p=" << p_ << " geom";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    os << ' ' << vars_[i] << ':';
    for (std::size_t j = 0; j < weights_[i].size(); ++j) os << (j ? "," : "") << weights_[i][j];
  }
  if (!params_.empty()) {
    os << " params";
    for (const auto& s : params_) os << ' ' << s;
  }
  return os.str();
}

bool compatible(const Ring& a, const Ring& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace dpv
