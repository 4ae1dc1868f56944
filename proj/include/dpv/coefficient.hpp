#pragma once

#include <optional>
#include <span>
#include <string>

#include "dpv/param_poly.hpp"

namespace dpv {

/// Element of the rational function field F_p(s_0, ..., s_{n-1}).
///
/// Stored as numerator/denominator with gcd 1 and a monic denominator, so two
/// equal field elements always have identical representations.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(std::uint32_t p, std::size_t nparams);

  static Coefficient constant(std::uint32_t p, std::size_t nparams, long long c);
  static Coefficient parameter(std::uint32_t p, std::size_t nparams, std::size_t index);
  static Coefficient from_poly(ParamPoly num);
  /// Reduces num/den; throws std::domain_error when den is zero.
  static Coefficient fraction(const ParamPoly& num, const ParamPoly& den);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  std::uint32_t prime() const { return num_.prime(); }
  std::size_t nparams() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the element lies in F_p.
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  std::uint32_t constant_value() const { return num_.constant_value(); }

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient inverse() const;

  /// d/ds_index by the quotient rule.
  Coefficient derivative(std::size_t index) const;
  std::optional<Coefficient> pth_root() const;
  /// Value at a parameter point, or nullopt if the denominator vanishes there.
  std::optional<std::uint32_t> evaluate(std::span<const std::uint32_t> point) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Coefficient(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static Coefficient normalized(ParamPoly num, ParamPoly den);

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace dpv
