#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gstrata/equations.hpp"
#include "gstrata/family.hpp"
#include "json.hpp"

namespace gstrata {

// Dense exact rational matrix, just enough linear algebra for the
// verification paths: rank, determinant, solving, inversion.
class RatMat {
 public:
  RatMat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
  static RatMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[i * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * c_ + j]; }

  RatMat operator*(const RatMat& o) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  int rank() const;
  Rat det() const;  // square only
  // square; nullopt when singular
  std::optional<RatMat> inverse() const;
  // solve A x = b; nullopt when no unique solution
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

 private:
  int r_, c_;
  std::vector<Rat> a_;
};

// --- Groebner machinery over Q (coefficients must be plain rationals) ----
Poly normal_form(Poly f, const std::vector<Poly>& basis,
                 const TermOrder& order);
// the unique reduced Groebner basis, elements monic, sorted by leading
// exponent in the given order
std::vector<Poly> groebner_basis(std::vector<Poly> gens,
                                 const TermOrder& order);
bool ideal_equal(const std::vector<Poly>& A, const std::vector<Poly>& B,
                 const TermOrder& order);
// complement of the leading-exponent ideal; nullopt when infinite
std::optional<StandardSet> basis_standard_set(const std::vector<Poly>& basis,
                                              const TermOrder& order);

// Certificate-based membership: entry k reports whether targets[k] equals a
// combination sum_i u_i g_i whose monomial multipliers u_i all have total
// degree <= max_deg (found by sparse elimination, escalating the degree
// bound from 0).  A true entry is backed by an explicit certificate; false
// only means no certificate exists within the bound.  Supplying weights
// (one integer vector per polynomial coordinate) restricts the search to
// the graded component of each target, which requires every generator and
// target to be homogeneous for the induced grading.
std::vector<bool> bounded_membership(
    const std::vector<Poly>& gens, const std::vector<Poly>& targets,
    const std::vector<std::vector<int>>& weights = {}, int max_deg = 4);

// Equality of coefficient ideals in Q[T]: variables are matched by their
// (row, col) names across the two rings and become polynomial coordinates
// sorted by name.  Both containments are checked by the list shortcut (a
// generator appearing verbatim on the other side) and bounded_membership
// certificates under the row-minus-col grading, which every structural
// generator is homogeneous for.
bool coef_ideal_equal(const std::vector<Coef>& A, const ParamRing& ringA,
                      const std::vector<Coef>& B, const ParamRing& ringB,
                      int max_multiplier_degree = 4);

// --- point configurations ------------------------------------------------
struct PointConfiguration {
  std::vector<std::vector<Rat>> points;  // pairwise-distinct n-tuples

  int n() const { return points.empty() ? 0 : (int)points[0].size(); }
  int size() const { return (int)points.size(); }
  void validate() const;  // throws std::invalid_argument
  nlohmann::json to_json() const;
  // accepts coordinates as [num, den] pairs or exact decimal strings
  static PointConfiguration from_json(const nlohmann::json& j);
};

struct PointIdeal {
  StandardSet delta;
  // d_{alpha,beta} for alpha in B(delta), beta in delta:
  // x^alpha + sum_beta d_{alpha,beta} x^beta vanishes on the points
  std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess> d;
};

// Vanishing ideal of a finite point set by greedy column reduction of the
// evaluation matrix in increasing monomial order; #delta == #points.
PointIdeal point_ideal(const PointConfiguration& P, const TermOrder& order);

// Normal-form coefficients of the requested rows against the delta-basis of
// the coordinate ring of P: x^row = sum_b value(row, b) x^b on the points,
// for every row outside delta.  nullopt when delta fails to be a basis for
// P (singular evaluation matrix, i.e. P lies outside the delta-chart).
std::optional<std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess>>
chart_coefficients(const PointConfiguration& P, const StandardSet& delta,
                   const std::vector<Exponent>& rows);

// Does P lie on the Groebner stratum of eps?  True iff the eps-evaluation
// matrix is invertible and the border coefficients are triangular
// (d_{alpha,beta} = 0 whenever beta > alpha).
bool stratum_certifies(const PointConfiguration& P, const StandardSet& eps,
                       const TermOrder& order);

// The unique standard set whose stratum contains P; certifies the border
// coefficients against the commutation relations at T = -d and throws
// std::runtime_error on any failure.
StandardSet classify_stratum(const PointConfiguration& P,
                             const TermOrder& order);

// --- seeded test-point generators ---------------------------------------
PointConfiguration random_config(int n, int r, unsigned long seed);
// grid realization of eps: coordinate values injected per axis into
// pairwise-distinct rationals, one point per element of eps
PointConfiguration grid_config(const StandardSet& eps, unsigned long seed);

}  // namespace gstrata
