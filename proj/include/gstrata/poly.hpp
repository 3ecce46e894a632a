#pragma once

#include <functional>
#include <vector>

#include "gstrata/order.hpp"
#include "gstrata/tring.hpp"

namespace gstrata {

// Sparse polynomial in x_1..x_n with Coef coefficients (Q or Q[T,t]).
// Terms are kept in the administrative (degree-lex) order, ascending.
class Poly {
 public:
  explicit Poly(int n) : n_(n) {}
  static Poly term(Exponent e, Coef c);
  static Poly constant(int n, const Rat& r) {
    return term(Exponent(n, 0), Coef::rat(r));
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Exponent, Coef>>& terms() const {
    return terms_;
  }
  const Coef* coeff(const Exponent& e) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scale(const Coef& c) const;
  Poly mul_mono(const Exponent& m) const;  // multiply by x^m
  bool operator==(const Poly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  struct Lead {
    Exponent e;
    Coef c;
  };
  // throws std::domain_error on the zero polynomial
  Lead lead(const TermOrder& order) const;

  Poly map_coefs(const std::function<Coef(const Coef&)>& f) const;

 private:
  int n_;
  std::vector<std::pair<Exponent, Coef>> terms_;
};

}  // namespace gstrata
