#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gstrata/exponent.hpp"

namespace gstrata {

// Term order on monomials x^a of a fixed dimension n.  Supports lex, graded
// lex, graded reverse lex, and weight orders with a tiebreak, plus an
// optional variable priority permutation.
class TermOrder {
 public:
  enum class Kind { Lex, GrLex, GrevLex, Weighted };

  static TermOrder lex(int n);
  static TermOrder grlex(int n);
  static TermOrder grevlex(int n);
  // weights must be componentwise >= 0; tiebreak decides ties.
  static TermOrder weighted(std::vector<long> weights, TermOrder tiebreak);

  // priority[k] = 0-based variable index at significance rank k (most
  // significant first); must be a permutation of 0..n-1.
  TermOrder with_priority(std::vector<int> priority) const;

  int n() const { return n_; }
  Kind kind() const { return kind_; }

  // sign of the comparison of x^a vs x^b: -1 if x^a < x^b, 0 if equal.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Exponent& a, const Exponent& b) const {
    return compare(a, b) > 0;
  }

  // CLI syntax: lex | grlex | grevlex | w:<c1,...,cn>:<tiebreak>
  std::string to_string() const;
  // vars: comma list of 1-based variable indices, most significant first
  // (empty = identity).
  static TermOrder parse(const std::string& spec, int n,
                         const std::string& vars = "");
  std::string vars_string() const;  // "" when identity

 private:
  TermOrder(Kind k, int n) : kind_(k), n_(n) {}
  Kind kind_;
  int n_;
  std::vector<long> weights_;
  std::shared_ptr<const TermOrder> tie_;
  std::vector<int> prio_;  // empty = identity
};

// Deterministic search for an integer weight vector l >= 0 with
// sum(l*(a-b)) > 0 for every pair (a,b).  Tries all-ones, then exhaustive
// boxes of growing side (n <= 4), then scaled geometric candidates.
std::optional<std::vector<long>> find_separating_weight(
    int n, const std::vector<std::pair<Exponent, Exponent>>& pairs);

}  // namespace gstrata
