#include "dpv/coefficient.hpp"

#include <stdexcept>

#include "dpv/prime_field.hpp"

namespace dpv {

Coefficient::Coefficient(std::uint32_t p, std::size_t nparams)
    : num_(p, nparams), den_(ParamPoly::constant(p, nparams, 1)) {}

Coefficient Coefficient::constant(std::uint32_t p, std::size_t nparams, long long c) {
  return Coefficient(ParamPoly::constant(p, nparams, fp::from_int(c, p)), ParamPoly::constant(p, nparams, 1));
}

Coefficient Coefficient::parameter(std::uint32_t p, std::size_t nparams, std::size_t index) {
  return Coefficient(ParamPoly::variable(p, nparams, index), ParamPoly::constant(p, nparams, 1));
}

Coefficient Coefficient::from_poly(ParamPoly num) {
  ParamPoly one = ParamPoly::constant(num.prime(), num.nvars(), 1);
  return Coefficient(std::move(num), std::move(one));
}

Coefficient Coefficient::normalized(ParamPoly num, ParamPoly den) {
  if (num.is_zero()) return Coefficient(den.prime(), den.nvars());
  std::uint32_t lc = den.leading_coefficient();
  if (lc != 1) {
    std::uint32_t li = fp::inv(lc, den.prime());
    num = num.scaled(li);
    den = den.scaled(li);
  }
  return Coefficient(std::move(num), std::move(den));
}

Coefficient Coefficient::fraction(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return Coefficient(den.prime(), den.nvars());
  ParamPoly g = gcd(num, den);
  if (g.is_one()) return normalized(num, den);
  return normalized(num.exact_quotient(g), den.exact_quotient(g));
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    ParamPoly n = num_ + o.num_;
    if (den_.is_one()) return Coefficient(std::move(n), den_);
    return fraction(n, den_);
  }
  if (den_.is_one()) return Coefficient(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return Coefficient(num_ + o.num_ * den_, den_);
  ParamPoly g = gcd(den_, o.den_);
  if (g.is_one()) return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  ParamPoly b1 = den_.exact_quotient(g);
  ParamPoly d1 = o.den_.exact_quotient(g);
  ParamPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return Coefficient(prime(), nparams());
  ParamPoly g2 = gcd(n, g);
  if (g2.is_one()) return normalized(std::move(n), b1 * o.den_);
  return normalized(n.exact_quotient(g2), b1 * o.den_.exact_quotient(g2));
}

Coefficient Coefficient::operator-() const { return Coefficient(-num_, den_); }

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (is_zero() || o.is_zero()) return Coefficient(prime(), nparams());
  if (den_.is_one() && o.den_.is_one()) return Coefficient(num_ * o.num_, den_);
  ParamPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    ParamPoly g = gcd(a, d);
    if (!g.is_one()) {
      a = a.exact_quotient(g);
      d = d.exact_quotient(g);
    }
  }
  if (!b.is_one()) {
    ParamPoly g = gcd(c, b);
    if (!g.is_one()) {
      c = c.exact_quotient(g);
      b = b.exact_quotient(g);
    }
  }
  return normalized(a * c, b * d);
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  return normalized(den_, num_);
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

Coefficient Coefficient::derivative(std::size_t index) const {
  ParamPoly dn = num_.derivative(index);
  if (den_.is_one()) return Coefficient(std::move(dn), den_);
  ParamPoly dd = den_.derivative(index);
  return fraction(dn * den_ - num_ * dd, den_ * den_);
}

std::optional<Coefficient> Coefficient::pth_root() const {
  auto n = num_.pth_root();
  auto d = den_.pth_root();
  if (!n || !d) return std::nullopt;
  return normalized(*std::move(n), *std::move(d));
}

std::optional<std::uint32_t> Coefficient::evaluate(std::span<const std::uint32_t> point) const {
  std::uint32_t d = den_.evaluate(point);
  if (d == 0) return std::nullopt;
  return fp::mul(num_.evaluate(point), fp::inv(d, prime()), prime());
}

std::string Coefficient::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  std::string d = den_.to_string(names);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace dpv
