#pragma once

#include <set>
#include <vector>

#include "gstrata/exponent.hpp"
#include "json.hpp"

namespace gstrata {

// A standard set (staircase): finite downward-closed subset of N^n.
// Corners, border and edge points are computed once at construction.
class StandardSet {
 public:
  // Validates dimensions and downward closure; throws std::invalid_argument.
  StandardSet(int n, std::vector<Exponent> elements);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Exponent>& elements() const { return elems_; }  // admin order
  bool contains(const Exponent& e) const;

  // Minimal generators of the complement monomial ideal.
  const std::vector<Exponent>& corners() const { return corners_; }
  // B(delta): one unit step out of delta.
  const std::vector<Exponent>& border() const { return border_; }
  // delta^(k) for k >= 1; delta^(1) == border().
  std::vector<Exponent> iterated_border(int k) const;
  // Elements with two unit steps leaving delta inside a coordinate plane
  // containing their support; for n >= 3 the support must fill the plane.
  const std::vector<Exponent>& edge_points() const { return edges_; }

  nlohmann::json to_json() const;
  static StandardSet from_json(const nlohmann::json& j);

  bool operator==(const StandardSet& o) const {
    return n_ == o.n_ && elems_ == o.elems_;
  }

 private:
  int n_;
  std::vector<Exponent> elems_;
  std::set<Exponent, AdminLess> lookup_;
  std::vector<Exponent> corners_, border_, edges_;
};

bool is_standard_set(int n, const std::vector<Exponent>& elements);

// All standard sets of size r in N^n, in a canonical deterministic order.
// Throws std::runtime_error if the count would exceed the enumeration cap.
std::vector<StandardSet> enumerate_standard_sets(int n, int r);

inline constexpr long kEnumerationCap = 1000000;

}  // namespace gstrata
