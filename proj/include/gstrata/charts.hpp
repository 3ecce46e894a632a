#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gstrata/order.hpp"
#include "gstrata/staircase.hpp"
#include "gstrata/tring.hpp"
#include "json.hpp"

namespace gstrata {

// Matrix of coefficient expressions whose rows and columns are addressed by
// exponents; triangularity and block structure are defined label-wise, so
// the physical ordering of rows never matters.
struct LabeledMatrix {
  std::vector<Exponent> row_labels, col_labels;
  std::vector<std::vector<Coef>> a;

  const Coef& at(const Exponent& row, const Exponent& col) const;
};

LabeledMatrix submatrix(const LabeledMatrix& m,
                        const std::vector<Exponent>& rows,
                        const std::vector<Exponent>& cols);

// Determinant and adjugate of a square coefficient matrix by cofactor
// expansion; empty matrix has determinant 1.
Coef sym_det(const std::vector<std::vector<Coef>>& m);
std::vector<std::vector<Coef>> sym_adjugate(
    const std::vector<std::vector<Coef>>& m);

// Two charts of the same punctual Hilbert scheme presented over a common row
// set: the union of the two standard sets together with its border.  Rows
// are partitioned into the shared basis (common), the part owned by each
// chart only, and the remainder rho.  tmat collects the delta-chart
// coefficients (identity on delta rows, one variable per other entry) and
// umat the eps-chart coefficients over a separate ring.
struct ChartBlocks {
  StandardSet delta, eps;
  StandardSet joint;           // delta union eps, again a standard set
  std::vector<Exponent> rows;  // joint plus its border
  std::vector<Exponent> common, delta_only, eps_only, rho;
  ParamRingPtr tring, uring;
  LabeledMatrix tmat, umat;

  nlohmann::json to_json() const;
};

ChartBlocks chart_blocks(const StandardSet& delta, const StandardSet& eps);

// Determinant of the block (T_{a,b}) with a in eps - delta and b in
// delta - eps; it is a unit exactly where the eps-chart overlaps the
// delta-chart.  Equal sets give the empty determinant 1.
Coef intersection_det(const ChartBlocks& cb);
Coef intersection_det(const StandardSet& delta, const StandardSet& eps);

// Change of chart: every eps-chart coefficient U_{a,xi} equals
// numer(a,xi) / det with det = intersection_det, so the substitution is
// regular wherever the determinant does not vanish.  tbox and ubox are the
// square basis-exchange matrices (eps-rows of tmat and delta-rows of umat);
// they are inverse to each other on the chart overlap.
struct GluingMap {
  ChartBlocks blocks;
  LabeledMatrix tbox, ubox;
  Coef det;
  std::map<std::pair<Exponent, Exponent>, Coef, PairAdminLess> numer;

  // Evaluates the substitution at a point of the delta-chart.  tvals must
  // provide a rational for every delta-chart variable, keyed by (row, col);
  // returns the eps-chart values, or nullopt when det vanishes there.
  std::optional<std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess>>
  specialize(const std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess>&
                 tvals) const;

  nlohmann::json to_json() const;
};

GluingMap gluing_map(const StandardSet& delta, const StandardSet& eps);

// Conditions carving the delta-stratum for the given order out of the
// eps-chart: the listed delta-chart coefficients must vanish (entries whose
// row label precedes the column label in the order) and det must be a unit.
struct StratumChartConditions {
  StandardSet delta, eps;
  TermOrder order;
  ParamRingPtr tring;  // ring of det and of the killed coefficients
  std::vector<std::pair<Exponent, Exponent>> kills;
  Coef det;

  nlohmann::json to_json() const;
};

StratumChartConditions stratum_in_chart(const StandardSet& delta,
                                        const StandardSet& eps,
                                        const TermOrder& order,
                                        bool reduced = false);

}  // namespace gstrata
