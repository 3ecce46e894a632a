#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gstrata/exponent.hpp"
#include "gstrata/rational.hpp"

namespace gstrata {

// Interning dictionary for the coefficient variables T_{row,col}.  Each
// generation context owns one ring; coefficient polynomials store variable
// ids relative to it.
class ParamRing {
 public:
  struct Name {
    Exponent row, col;
  };

  int var(const Exponent& row, const Exponent& col);  // intern
  std::optional<int> find(const Exponent& row, const Exponent& col) const;
  const Name& name(int id) const { return names_[id]; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<Name> names_;
  std::map<std::pair<Exponent, Exponent>, int, PairAdminLess> index_;
};

using ParamRingPtr = std::shared_ptr<ParamRing>;

// Monomial in the T-variables and the deformation variable t.
struct PMono {
  std::vector<std::pair<int, int>> t;  // (var id, exponent > 0), sorted by id
  int w = 0;                           // exponent of t
  bool operator==(const PMono& o) const = default;
};
bool pmono_less(const PMono& a, const PMono& b);

// Element of Q[T-variables, t]; plain rationals are the constant case.
class Coef {
 public:
  Coef() = default;  // zero
  static Coef rat(const Rat& r);
  static Coef one() { return rat(1); }
  static Coef var(int id);
  static Coef tpow(int w);
  static Coef term(PMono m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_rat() const;         // constant in T and t (zero counts)
  Rat as_rat() const;          // pre: is_rat()
  const std::vector<std::pair<PMono, Rat>>& terms() const { return terms_; }

  Coef operator+(const Coef& o) const;
  Coef operator-(const Coef& o) const;
  Coef operator*(const Coef& o) const;
  Coef operator-() const;
  Coef scale(const Rat& r) const;
  bool operator==(const Coef& o) const { return terms_ == o.terms_; }

  // multiply every occurrence of a variable id by t^{weight(id)}
  Coef shift_t(const std::function<long(int)>& weight) const;
  // replace listed variables by coefficient expressions (others untouched)
  Coef substitute(const std::map<int, Coef>& repl) const;
  Coef set_t(const Rat& tval) const;
  Rat eval(const std::vector<Rat>& var_vals, const Rat& tval) const;
  int tvar_degree() const;  // max total T-degree over terms (-1 for zero)

 private:
  // invariant: sorted by pmono_less, no zero coefficients
  std::vector<std::pair<PMono, Rat>> terms_;
  static Coef from_map(std::map<PMono, Rat, bool (*)(const PMono&, const PMono&)>&& m);
};

}  // namespace gstrata
