#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dpv::lattice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Named divisor classes with a symmetric integer intersection form.
class DivisorLattice {
 public:
  DivisorLattice(std::vector<std::string> basis, std::vector<std::vector<Integer>> gram,
                 std::vector<Integer> canonical = {});

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<std::vector<Integer>>& gram() const { return gram_; }
  /// Class of K; empty if not specified.
  const std::vector<Integer>& canonical() const { return canonical_; }
  std::optional<std::size_t> index(const std::string& label) const;

 private:
  std::vector<std::string> basis_;
  std::vector<std::vector<Integer>> gram_;
  std::vector<Integer> canonical_;
};

struct ClassVector {
  const DivisorLattice* lattice = nullptr;
  std::vector<Integer> coords;

  ClassVector operator+(const ClassVector& o) const;
  ClassVector operator-(const ClassVector& o) const;
  ClassVector operator*(const Integer& c) const;
};

ClassVector make_class(const DivisorLattice& l, std::vector<Integer> coords);
ClassVector basis_class(const DivisorLattice& l, const std::string& label);
ClassVector canonical_class(const DivisorLattice& l);

/// v^T gram w. Throws std::invalid_argument on a lattice or length mismatch.
Integer product(const DivisorLattice& l, const ClassVector& v, const ClassVector& w);
Integer product(const ClassVector& v, const ClassVector& w);

/// K^2 of a surface complete intersection of the given degrees in P(weights),
/// by adjunction; assumes X misses the singular points of P(weights).
Rational k2_weighted_ci(const std::vector<long long>& weights, const std::vector<long long>& degrees);

/// K^2 of a surface complete intersection in P^{n_1} x ... x P^{n_r};
/// degrees[i] is the multidegree of the i-th equation.
Integer k2_multiprojective(const std::vector<int>& dims, const std::vector<std::vector<long long>>& degrees);

/// K^2 of a double cover of P^1 x P^1 branched along a section of 2L,
/// L of bidegree (a, b): 2 (K + L)^2.
Integer k2_double_cover_p1p1(long long a, long long b);

Integer blowup_k2(const Integer& k2, const Integer& center_degree);

/// chi(O_X) + L.(L - K)/2.
Rational rr_chi(const Integer& chi0, const Integer& L2, const Integer& LK);

enum class IndexTwo { integral, non_integral };
struct IndexTwoResult {
  IndexTwo verdict;
  Rational value;
};
/// chi(H) - chi(O) under K = -rH.
IndexTwoResult index_two_check(const Integer& r, const Integer& H2);

enum class Divisibility { consistent, contradiction };
/// A curve with deg K_C = -2 cannot have all degrees in dY Z unless dY | 2.
Divisibility negcurve_divisibility(const Integer& dY);

struct ConicFibration {
  Integer b, c, k2;
};
/// -aK ~ 2F1 + 2F2 with F1.F2 = a forces aK^2 = 8; nullopt if 8/a is not integral.
std::optional<ConicFibration> conic_fibration(const Integer& a);

/// All a in [1, a_max] with a * k2 <= 4.
std::vector<Integer> conic_bundle_bound(const Integer& k2, const Integer& a_max);

/// K^2 = 8 (1 - h1) for a ruled surface over a conic.
Integer ruled_k2(const Integer& h1);

/// (mH - E)^4 on the blow-up of P^n (n = 4) along a curve of degree degC and genus g.
Integer secant_selfint(const Integer& m, const Integer& degC, const Integer& genus, const Integer& n);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace dpv::lattice
