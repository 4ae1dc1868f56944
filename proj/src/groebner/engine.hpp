#pragma once

// Order-sorted term vectors and the normal-form routine shared by the
// Buchberger loop and GroebnerBasis::reduce.

#include <map>
#include <vector>

#include "dpv/groebner.hpp"

namespace dpv::detail {

struct OTerm {
  Monomial mono;
  Coefficient coef;
};

/// Terms in strictly descending order for a fixed MonomialOrder.
using OPoly = std::vector<OTerm>;

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

OPoly to_opoly(const Polynomial& f, const MonomialOrder& order);
Polynomial to_polynomial(const Ring& ring, const OPoly& f);
OPoly make_monic(OPoly f);

struct Reducer {
  const OPoly* poly;
  Monomial lead;
};

struct ReduceBudget {
  std::uint64_t max_terms = 0;  // 0: unlimited
  std::uint64_t* steps = nullptr;
};

/// Full normal form of f with respect to monic reducers (first divisor wins).
OPoly normal_form(const OPoly& f, const std::vector<Reducer>& reducers, const MonomialOrder& order,
                  const ReduceBudget& budget = {});

struct BasisData {
  std::vector<OPoly> polys;
  std::vector<Reducer> reducers;
};

}  // namespace dpv::detail
