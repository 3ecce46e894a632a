#pragma once

#include <vector>

#include "gstrata/equations.hpp"
#include "gstrata/family.hpp"
#include "gstrata/order.hpp"
#include "gstrata/staircase.hpp"
#include "json.hpp"

namespace gstrata {

// Linear weight ell on exponents driving the one-parameter substitution
// T_{a,b} -> t^{ell(a)-ell(b)} T_{a,b}.  ell separates every border row
// from every basis column below it in the order, so each surviving stratum
// coefficient picks up a strictly positive power of t.
struct DeformationData {
  StandardSet delta;
  std::vector<long> ell;  // one entry per axis

  long weight(const Exponent& a) const;
  nlohmann::json to_json() const;
};

DeformationData build_deformation(const StandardSet& delta,
                                  const TermOrder& order);

// Deformed presentation of a stratum (or minimal) equation set: variables
// already forced to zero by triangularity are substituted away first, then
// the shift multiplies every generator by a single power of t.  At t = 1
// the original presentation returns; at t = 0 only the monomial point
// survives.
struct DeformationResult {
  EquationSet eqs;
  std::vector<long> weights;  // parallel to eqs.gens, all > 0
  std::vector<int> killed;    // variable ids absorbed before the shift

  nlohmann::json to_json() const;
};

DeformationResult apply_deformation(const EquationSet& E,
                                    const DeformationData& D);

// Member-wise substitution on a marked family whose coefficients live in
// ring: the coefficient of x^b in the member at a gains t^{ell(a)-ell(b)}.
FamilyMap deform_family(const FamilyMap& family, const ParamRing& ring,
                        const DeformationData& D);

}  // namespace gstrata
