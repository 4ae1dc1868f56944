#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dpv {

/// Upper bound on the number of parameter variables in one ring.
inline constexpr std::size_t kMaxParams = 12;

/// Exponent vector in the parameter variables. Compared lexicographically,
/// parameter 0 being the most significant.
struct ParamMonomial {
  std::array<std::uint16_t, kMaxParams> exp{};

  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  std::uint32_t degree() const;
  bool divides(const ParamMonomial& other) const;
};

/// Sparse polynomial over F_p in the parameter variables s_0, ..., s_{n-1}.
/// Terms are stored by descending lex order with nonzero coefficients.
class ParamPoly {
 public:
  using Term = std::pair<ParamMonomial, std::uint32_t>;

  ParamPoly() = default;
  ParamPoly(std::uint32_t p, std::size_t nvars);

  static ParamPoly constant(std::uint32_t p, std::size_t nvars, std::uint32_t c);
  static ParamPoly variable(std::uint32_t p, std::size_t nvars, std::size_t index);

  std::uint32_t prime() const { return p_; }
  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  std::uint32_t constant_value() const;
  std::uint32_t leading_coefficient() const;
  const ParamMonomial& leading_monomial() const;

  int degree_in(std::size_t var) const;
  int total_degree() const;

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator-() const;
  ParamPoly scaled(std::uint32_t c) const;
  ParamPoly shifted(const ParamMonomial& m) const;

  /// Quotient when `d` divides this polynomial exactly, otherwise nullopt.
  std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;
  /// Like divide_exact but throws std::logic_error on a nonzero remainder.
  ParamPoly exact_quotient(const ParamPoly& d) const;

  ParamPoly derivative(std::size_t var) const;
  ParamPoly monic() const;
  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;
  /// q with q^p = *this, when every exponent is divisible by p.
  std::optional<ParamPoly> pth_root() const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static ParamPoly from_terms(std::uint32_t p, std::size_t nvars, std::vector<Term> terms);

 private:
  std::uint32_t p_ = 2;
  std::uint16_t n_ = 0;
  std::vector<Term> terms_;
};

/// Monic greatest common divisor in F_p[s_0, ..., s_{n-1}]. gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace dpv
