#include "dpv/lattice.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dpv::lattice {

DivisorLattice::DivisorLattice(std::vector<std::string> basis, std::vector<std::vector<Integer>> gram,
                               std::vector<Integer> canonical)
    : basis_(std::move(basis)), gram_(std::move(gram)), canonical_(std::move(canonical)) {
  const std::size_t n = basis_.size();
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != n)
    throw std::invalid_argument("duplicate basis label");
  if (gram_.size() != n) throw std::invalid_argument("gram matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("gram matrix has wrong size");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
  }
  if (!canonical_.empty() && canonical_.size() != n) throw std::invalid_argument("canonical class has wrong length");
}

std::optional<std::size_t> DivisorLattice::index(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == label) return i;
  return std::nullopt;
}

namespace {

void check_same(const ClassVector& a, const ClassVector& b) {
  if (a.lattice != b.lattice || a.coords.size() != b.coords.size())
    throw std::invalid_argument("classes live in different lattices");
}

}  // namespace

ClassVector ClassVector::operator+(const ClassVector& o) const {
  check_same(*this, o);
  ClassVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

ClassVector ClassVector::operator-(const ClassVector& o) const {
  check_same(*this, o);
  ClassVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

ClassVector ClassVector::operator*(const Integer& c) const {
  ClassVector r = *this;
  for (auto& x : r.coords) x *= c;
  return r;
}

ClassVector make_class(const DivisorLattice& l, std::vector<Integer> coords) {
  if (coords.size() != l.rank()) throw std::invalid_argument("class vector has wrong length");
  return ClassVector{&l, std::move(coords)};
}

ClassVector basis_class(const DivisorLattice& l, const std::string& label) {
  auto i = l.index(label);
  if (!i) throw std::invalid_argument("unknown class '" + label + "'");
  std::vector<Integer> c(l.rank());
  c[*i] = 1;
  return ClassVector{&l, std::move(c)};
}

ClassVector canonical_class(const DivisorLattice& l) {
  if (l.canonical().empty()) throw std::invalid_argument("lattice has no canonical class");
  return ClassVector{&l, l.canonical()};
}

Integer product(const DivisorLattice& l, const ClassVector& v, const ClassVector& w) {
  const std::size_t n = l.rank();
  if (v.coords.size() != n || w.coords.size() != n) throw std::invalid_argument("dimension mismatch");
  if ((v.lattice && v.lattice != &l) || (w.lattice && w.lattice != &l))
    throw std::invalid_argument("classes live in a different lattice");
  Integer s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += v.coords[i] * l.gram()[i][j] * w.coords[j];
  }
  return s;
}

Integer product(const ClassVector& v, const ClassVector& w) {
  if (!v.lattice) throw std::invalid_argument("class without a lattice");
  return product(*v.lattice, v, w);
}

Rational k2_weighted_ci(const std::vector<long long>& weights, const std::vector<long long>& degrees) {
  if (weights.size() != degrees.size() + 3)
    throw std::invalid_argument("not a surface: " + std::to_string(weights.size()) + " weights, " +
                                std::to_string(degrees.size()) + " degrees");
  Integer sd = 0, sw = 0, pd = 1, pw = 1;
  for (long long d : degrees) {
    if (d <= 0) throw std::invalid_argument("degrees must be positive");
    sd += d;
    pd *= d;
  }
  for (long long w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    sw += w;
    pw *= w;
  }
  Integer a = sd - sw;
  return Rational(a * a * pd, pw);
}

namespace {

// Truncated Chow ring of a product of projective spaces: h_j^{n_j + 1} = 0.
struct Chow {
  std::vector<int> dims;
  std::map<std::vector<int>, Integer> terms;

  static Chow one(const std::vector<int>& dims) {
    Chow c{dims, {}};
    c.terms[std::vector<int>(dims.size(), 0)] = 1;
    return c;
  }

  Chow times_linear(const std::vector<Integer>& coeffs) const {
    Chow r{dims, {}};
    for (const auto& [e, c] : terms)
      for (std::size_t j = 0; j < dims.size(); ++j) {
        if (coeffs[j] == 0 || e[j] == dims[j]) continue;
        auto f = e;
        ++f[j];
        r.terms[f] += c * coeffs[j];
      }
    return r;
  }

  Integer top() const {
    auto it = terms.find(dims);
    return it == terms.end() ? Integer(0) : it->second;
  }
};

}  // namespace

Integer k2_multiprojective(const std::vector<int>& dims, const std::vector<std::vector<long long>>& degrees) {
  int total = std::accumulate(dims.begin(), dims.end(), 0);
  if (dims.empty() || static_cast<long long>(degrees.size()) != total - 2)
    throw std::invalid_argument("not a surface complete intersection");
  std::vector<Integer> k(dims.size());
  for (std::size_t j = 0; j < dims.size(); ++j) k[j] = -(dims[j] + 1);
  Chow c = Chow::one(dims);
  for (const auto& d : degrees) {
    if (d.size() != dims.size()) throw std::invalid_argument("multidegree has wrong length");
    std::vector<Integer> lin(d.begin(), d.end());
    for (std::size_t j = 0; j < dims.size(); ++j) k[j] += d[j];
    c = c.times_linear(lin);
  }
  c = c.times_linear(k).times_linear(k);
  return c.top();
}

Integer k2_double_cover_p1p1(long long a, long long b) {
  DivisorLattice l({"F1", "F2"}, {{0, 1}, {1, 0}}, {-2, -2});
  ClassVector kl = canonical_class(l) + make_class(l, {a, b});
  return 2 * product(kl, kl);
}

Integer blowup_k2(const Integer& k2, const Integer& center_degree) { return k2 - center_degree; }

Rational rr_chi(const Integer& chi0, const Integer& L2, const Integer& LK) {
  return Rational(chi0) + Rational(L2 - LK, 2);
}

IndexTwoResult index_two_check(const Integer& r, const Integer& H2) {
  // H.(H - K) = H^2 + r H^2.
  Rational v(H2 + r * H2, 2);
  return {denominator(v) == 1 ? IndexTwo::integral : IndexTwo::non_integral, v};
}

Divisibility negcurve_divisibility(const Integer& dY) {
  if (dY <= 0) throw std::invalid_argument("dY must be positive");
  return 2 % dY == 0 ? Divisibility::consistent : Divisibility::contradiction;
}

std::optional<ConicFibration> conic_fibration(const Integer& a) {
  if (a < 1) throw std::invalid_argument("a must be positive");
  // (2F1 + 2F2)^2 = 8 F1.F2 = 8a and (-aK)^2 = a^2 K^2, so a K^2 = 8.
  DivisorLattice l({"F1", "F2"}, {{0, a}, {a, 0}});
  ClassVector c = make_class(l, {2, 2});
  Integer lhs = product(c, c);
  if (lhs % (a * a) != 0) return std::nullopt;
  return ConicFibration{2, 2, lhs / (a * a)};
}

std::vector<Integer> conic_bundle_bound(const Integer& k2, const Integer& a_max) {
  if (k2 < 1) throw std::invalid_argument("k2 must be positive");
  std::vector<Integer> out;
  for (Integer a = 1; a <= a_max && a * k2 <= 4; ++a) out.push_back(a);
  return out;
}

Integer ruled_k2(const Integer& h1) { return 8 * (1 - h1); }

Integer secant_selfint(const Integer& m, const Integer& degC, const Integer& genus, const Integer& n) {
  if (n != 4) throw std::invalid_argument("only blow-ups of P^4 along curves are supported");
  if (degC < 1) throw std::invalid_argument("degC must be positive");
  // H^4 = 1, H^3 E = H^2 E^2 = 0, H E^3 = deg C, E^4 = deg N_{C/P^4}.
  Integer deg_n = (n + 1) * degC + 2 * genus - 2;
  return m * m * m * m - 4 * m * degC + deg_n;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

}  // namespace dpv::lattice
