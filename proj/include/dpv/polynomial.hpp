#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpv/coefficient.hpp"
#include "dpv/ring.hpp"

namespace dpv {

/// Raised when operands live in incompatible rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial in the geometric variables of a ring with coefficients
/// in F_p(parameters). Terms are kept in descending lex order with no zero
/// coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Coefficient coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, const Coefficient& c);
  static Polynomial constant(Ring ring, long long c);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial parameter(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, const Monomial& m, const Coefficient& c);
  /// Combines repeated monomials and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True for elements of the coefficient field (including zero).
  bool is_constant() const;
  Coefficient constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// True when exactly one monomial, a single variable, with coefficient 1.
  std::optional<std::size_t> as_variable() const;

  Coefficient zero_coefficient() const { return Coefficient(ring_->prime(), ring_->nparams()); }
  Coefficient one_coefficient() const { return Coefficient::constant(ring_->prime(), ring_->nparams(), 1); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial pow(unsigned e) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return compatible(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };
Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op);

/// Formal partial derivative by a geometric or a parameter variable. Parameter
/// derivations act on coefficients by the quotient rule.
Polynomial diff(const Polynomial& f, std::string_view var);
Polynomial diff_geometric(const Polynomial& f, std::size_t var);
Polynomial diff_parameter(const Polynomial& f, std::size_t param);

/// f times the lcm of its coefficient denominators: same ideal, polynomial
/// coefficients.
Polynomial clear_denominators(const Polynomial& f);

/// Simultaneous assignment of geometric variables (to polynomials) and
/// parameters (to coefficient-field elements).
struct Substitution {
  std::map<std::string, Polynomial> geometric;
  std::map<std::string, Coefficient> parameters;
};

Polynomial substitute(const Polynomial& f, const Substitution& s);
/// Substitution whose values live in `target`; unassigned geometric variables
/// are carried over by name and must exist in `target`.
Polynomial substitute(const Polynomial& f, const Substitution& s, const Ring& target);
/// Maps f into `target` by variable name.
Polynomial embed(const Polynomial& f, const Ring& target);

/// Sets a weight-one variable to 1; f must be (multi)homogeneous.
Polynomial dehomogenize(const Polynomial& f, std::string_view var);
Polynomial dehomogenize(const Polynomial& f, std::string_view var, const Ring& target);

struct WeightedDegree {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  std::vector<int> degree;

  bool homogeneous() const { return kind == Kind::homogeneous; }
  friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;
};

std::vector<int> monomial_degree(const Ring& ring, const Monomial& m);
WeightedDegree weighted_degree(const Polynomial& f);

/// g with g^p = f, or nullopt when f is not a p-th power.
std::optional<Polynomial> pth_root(const Polynomial& f);

/// Value at a point of F_p^n with parameters specialised in F_p; nullopt if a
/// coefficient denominator vanishes.
std::optional<std::uint32_t> evaluate(const Polynomial& f, std::span<const std::uint32_t> point,
                                      std::span<const std::uint32_t> params);

}  // namespace dpv
