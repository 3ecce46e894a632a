#pragma once

#include <map>
#include <set>

#include "gstrata/poly.hpp"
#include "gstrata/staircase.hpp"

namespace gstrata {

using FamilyMap = std::map<Exponent, Poly, AdminLess>;

// Marked family over a staircase delta: polynomials x^alpha + (tail in delta)
// indexed by complement exponents.  Division by the family and on-demand
// extension from the corner members.  Extension terminates whenever the seed
// family is triangular for some term order (the usual case); a structural
// cycle in the mutual recursion is reported as an error.
class MarkedFamily {
 public:
  // seed: typically the corner members; each must be monic at its key with
  // all other support inside delta (throws std::invalid_argument otherwise).
  MarkedFamily(StandardSet delta, FamilyMap seed);

  const StandardSet& delta() const { return delta_; }
  // alpha outside delta; extends and memoizes
  const Poly& member(const Exponent& alpha);
  // unique normal form with support in delta
  Poly reduce(Poly f);

 private:
  StandardSet delta_;
  FamilyMap memo_;
  std::set<Exponent, AdminLess> in_progress_;
};

// One-shot wrappers matching the operation contracts.
Poly reduce(const Poly& f, const FamilyMap& family, const StandardSet& delta);
Poly extend_family(const FamilyMap& corner_family, const Exponent& alpha,
                   const StandardSet& delta);

}  // namespace gstrata
