#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpv/polynomial.hpp"

namespace dpv {

/// Term order on the geometric variables. `perm` lists variable indices from
/// most to least significant. Block orders compare the first `split` entries
/// of `perm` lexicographically and break ties by grevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder block(std::size_t nvars, std::size_t split);
  static MonomialOrder make(Kind kind, std::vector<std::size_t> perm, std::size_t split = 0);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return perm_.size(); }
  std::size_t split() const { return split_; }
  const std::vector<std::size_t>& perm() const { return perm_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::grevlex;
  std::vector<std::size_t> perm_;
  std::size_t split_ = 0;
};

/// Raised when a Gröbner computation exceeds a configured budget. Not a
/// mathematical answer: callers report the affected check as inconclusive.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(std::string resource, std::uint64_t limit)
      : std::runtime_error(resource + " limit " + std::to_string(limit) + " exceeded"),
        resource_(std::move(resource)), limit_(limit) {}
  const std::string& resource() const { return resource_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::string resource_;
  std::uint64_t limit_;
};

struct GroebnerLimits {
  std::uint64_t max_pairs = default_pair_limit();
  std::uint32_t max_degree = 4096;
  std::uint64_t max_terms = 500000;

  /// 10^6 unless DPV_PAIR_LIMIT is set.
  static std::uint64_t default_pair_limit();
};

/// Work counters; deterministic for fixed input.
struct GroebnerStats {
  std::uint64_t bases = 0;
  std::uint64_t pairs = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;

  GroebnerStats& operator+=(const GroebnerStats& o);
};

struct GroebnerOptions {
  GroebnerLimits limits{};
  GroebnerStats* stats = nullptr;
};

/// Reduced Gröbner basis: monic generators with interreduced tails, sorted by
/// ascending leading monomial.
namespace detail {
struct BasisData;
}

class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }

  Monomial leading_monomial(std::size_t i) const;
  std::vector<Monomial> leading_monomials() const;

  /// Normal form of f.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<const detail::BasisData> data_;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});
/// Grevlex basis; `ring` is needed when gens may be empty.
GroebnerBasis groebner(const Ring& ring, const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});

Polynomial reduce(const Polynomial& f, const GroebnerBasis& g);
Polynomial leading_term(const Polynomial& f, const MonomialOrder& order);
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);
/// Every S-polynomial of a pair of generators reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

bool is_unit_ideal(const Ring& ring, const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});
/// g vanishes on V(gens) over the algebraic closure: 1 ∈ (gens, 1 - T*g).
bool radical_membership(const Polynomial& g, const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});
/// Generators of (gens : g^∞), by eliminating an auxiliary inverse of g.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& g,
                                 const GroebnerOptions& opts = {});
/// Krull dimension of V(gens); -1 for the unit ideal.
int dimension(const Ring& ring, const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});
int dimension(const GroebnerBasis& g);
/// Vector-space dimension of R/I when I is zero-dimensional.
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& g);
std::optional<std::uint64_t> quotient_dimension(const Ring& ring, const std::vector<Polynomial>& gens,
                                                const GroebnerOptions& opts = {});
/// Every element of `irrelevant` lies in √(gens). With the variables of a
/// weighted projective space this says V(gens) is empty there; for a product
/// of projective spaces pass the products of one variable per factor.
bool projective_is_empty(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& irrelevant,
                         const GroebnerOptions& opts = {});
bool projective_is_empty(const Ring& ring, const std::vector<Polynomial>& gens,
                         const std::vector<std::string>& irrelevant, const GroebnerOptions& opts = {});
/// Every generator of `b` lies in (a).
bool ideal_contains(const Ring& ring, const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                    const GroebnerOptions& opts = {});

}  // namespace dpv
