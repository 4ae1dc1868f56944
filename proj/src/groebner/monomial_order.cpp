#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dpv/groebner.hpp"

namespace dpv {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& perm,
                               std::size_t lo, std::size_t hi) {
  for (std::size_t k = lo; k < hi; ++k) {
    auto v = perm[k];
    if (a.exp[v] != b.exp[v]) return a.exp[v] <=> b.exp[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& perm,
                                   std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a.exp[perm[k]];
    db += b.exp[perm[k]];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = hi; k-- > lo;) {
    auto v = perm[k];
    if (a.exp[v] != b.exp[v]) return b.exp[v] <=> a.exp[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return make(Kind::grevlex, identity(nvars)); }
MonomialOrder MonomialOrder::lex(std::size_t nvars) { return make(Kind::lex, identity(nvars)); }
MonomialOrder MonomialOrder::block(std::size_t nvars, std::size_t split) {
  return make(Kind::block, identity(nvars), split);
}

MonomialOrder MonomialOrder::make(Kind kind, std::vector<std::size_t> perm, std::size_t split) {
  if (perm.size() > kMaxVars) throw std::invalid_argument("monomial order: too many variables");
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity(perm.size())) throw std::invalid_argument("monomial order: not a permutation");
  if (kind == Kind::block && split > perm.size()) throw std::invalid_argument("monomial order: bad block split");
  MonomialOrder o;
  o.kind_ = kind;
  o.perm_ = std::move(perm);
  o.split_ = kind == Kind::block ? split : 0;
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      return lex_range(a, b, perm_, 0, perm_.size());
    case Kind::grevlex:
      return grevlex_range(a, b, perm_, 0, perm_.size());
    case Kind::block: {
      auto c = lex_range(a, b, perm_, 0, split_);
      if (c != 0) return c;
      return grevlex_range(a, b, perm_, split_, perm_.size());
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace dpv
