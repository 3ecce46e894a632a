#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gstrata {

// Exponent vector in N^n.  n is carried by context (staircase, polynomial).
using Exponent = std::vector<int>;

// Hard cap on the ambient dimension; guards against pathological input.
inline constexpr int kMaxDim = 16;

int total_degree(const Exponent& a);

// Administrative total order used for all canonical listings and
// serialization: degree first, then lexicographic on the coordinate vector.
// Independent of any user-selected term order.
bool admin_less(const Exponent& a, const Exponent& b);

struct AdminLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return admin_less(a, b);
  }
};

struct PairAdminLess {
  bool operator()(const std::pair<Exponent, Exponent>& a,
                  const std::pair<Exponent, Exponent>& b) const {
    if (a.first != b.first) return admin_less(a.first, b.first);
    return admin_less(a.second, b.second);
  }
};

Exponent exp_add(const Exponent& a, const Exponent& b);
// a - b componentwise; empty when any coordinate would go negative.
std::optional<Exponent> exp_sub(const Exponent& a, const Exponent& b);
// componentwise a <= b (x^a divides x^b)
bool exp_divides(const Exponent& a, const Exponent& b);
Exponent exp_max(const Exponent& a, const Exponent& b);  // lcm of monomials
Exponent unit_exp(int n, int i);
int support_size(const Exponent& a);

std::string exp_str(const Exponent& a);  // "(a1,a2,...)" for messages/provenance

}  // namespace gstrata
