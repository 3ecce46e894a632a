#pragma once

#include <string>

#include "gstrata/poly.hpp"

namespace gstrata {

// Plain-text grammar: terms joined by +/-, each monomial
//   c*x1^a1*...*xn^an*T[(r1,r2)|(c1,c2)]^e*t^w
// with unit pieces omitted.  Term order is canonical: x-part descending in
// the administrative order, then coefficient monomials ascending by
// (T-degree + t-degree, variable names).
std::string poly_text(const Poly& p, const ParamRing& ring);
std::string coef_text(const Coef& c, const ParamRing& ring);

// CAS-safe variable naming T_r1_r2__c1_c2
std::string var_cas(const ParamRing& ring, int id);
std::string poly_cas(const Poly& p, const ParamRing& ring);
std::string coef_cas(const Coef& c, const ParamRing& ring);

}  // namespace gstrata
