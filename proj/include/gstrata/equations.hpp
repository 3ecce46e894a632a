#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gstrata/family.hpp"
#include "gstrata/poly.hpp"
#include "gstrata/staircase.hpp"
#include "json.hpp"

namespace gstrata {

enum class Label { I1, I2, I3, I3e, Stratum, Minimal, Universal, Homog };
std::string label_str(Label l);

struct Provenance {
  std::optional<Exponent> alpha, lambda, alpha2, lambda2, beta;
  std::optional<Exponent> eps;            // edge classes
  std::optional<std::pair<int, int>> plane;  // 0-based coordinate plane
  bool principal = true;
  nlohmann::json to_json() const;
};

struct Generator {
  Label label;
  Provenance prov;
  Poly poly;  // constant in x for relation-type labels
};

// A qualifying (edge point, coordinate plane) pair.  Principal classes have
// support filling the plane (always, for n = 2); axis/origin planes are
// auxiliary but still subject to the commutation relations.
struct EdgeClass {
  Exponent eps;
  int i, j;
  bool principal;
};
std::vector<EdgeClass> edge_classes(const StandardSet& delta);

struct EquationSet {
  ParamRingPtr ring;
  StandardSet delta;
  StandardSet rows;  // N, with delta subset N
  std::optional<TermOrder> order;
  std::string mode;
  bool substitution = true;
  std::vector<Generator> gens;
  std::vector<std::pair<Label, Provenance>> classes;  // one per index class
  // minimal mode: derived coefficient expressions for non-corner border rows
  std::vector<std::tuple<Exponent, Exponent, Coef>> rewrites;
  std::vector<int> ambient_vars;  // minimal mode: ids of the surviving T's

  int count(Label l) const;
  int class_count(Label l, bool principal_only = true) const;
  nlohmann::json to_json() const;
  std::string to_cas() const;
};

// The defining ideals of the border-basis scheme and its variants.  With
// substitution on (the default), rows inside delta are rewritten to
// Kronecker deltas and identically-vanishing generators are dropped; the
// literal presentation is available with substitution = false.
EquationSet gen_I1(const StandardSet& delta, const StandardSet& rows,
                   bool substitution = true);
EquationSet gen_I2(const StandardSet& delta, const StandardSet& rows,
                   bool substitution = true);
EquationSet gen_I3(const StandardSet& delta, const StandardSet& rows,
                   bool substitution = true);
EquationSet gen_I3e(const StandardSet& delta, bool substitution = true);
// I2 + I3 (+ literal I1 when substitution is off)
EquationSet gen_full(const StandardSet& delta, const StandardSet& rows,
                     bool substitution = true);
// I2 + I3e, the reduced presentation
EquationSet gen_fewer(const StandardSet& delta, bool substitution = true);
// full presentation plus the triangularity conditions T_{a,b} = 0 for a < b;
// reduced = restrict the killed rows to the corners
EquationSet gen_stratum(const StandardSet& delta, const StandardSet& rows,
                        const TermOrder& order, bool reduced = false);
// minimal embedding: ambient variables T_{a,b} (a corner, a > b) only,
// derived expressions for the other border rows, relations rewritten
EquationSet gen_minimal(const StandardSet& delta, const TermOrder& order);
// universal family polynomials; border mode (rows = border) or reduced
// Groebner mode (rows = corners, tails below the marker)
EquationSet gen_universal(const StandardSet& delta, const StandardSet& rows,
                          bool groebner_mode,
                          const TermOrder* order = nullptr);
// vanishing of all weight-inhomogeneous coefficients
EquationSet gen_homogeneous_restriction(const StandardSet& delta,
                                        const std::vector<long>& ell);

// Marked corner family with symbolic coefficients: x^a - sum T_{a,b} x^b,
// tails restricted to b < a when an order is supplied.  Shares `ring`.
FamilyMap symbolic_corner_family(const StandardSet& delta, ParamRingPtr ring,
                                 const TermOrder* order = nullptr);

}  // namespace gstrata
