#include "gstrata/family.hpp"

#include <stdexcept>

namespace gstrata {

namespace {
void check_marked(const Exponent& key, const Poly& f, const StandardSet& d) {
  if (d.contains(key))
    throw std::invalid_argument("family key " + exp_str(key) +
                                " lies inside the staircase");
  const Coef* lead = f.coeff(key);
  if (!lead || !lead->is_rat() || lead->as_rat() != 1)
    throw std::invalid_argument("family member at " + exp_str(key) +
                                " is not monic at its marker");
  for (const auto& [e, c] : f.terms())
    if (e != key && !d.contains(e))
      throw std::invalid_argument("family member at " + exp_str(key) +
                                  " has support outside the staircase");
}
}  // namespace

MarkedFamily::MarkedFamily(StandardSet delta, FamilyMap seed)
    : delta_(std::move(delta)), memo_(std::move(seed)) {
  for (const auto& [key, f] : memo_) check_marked(key, f, delta_);
}

const Poly& MarkedFamily::member(const Exponent& alpha) {
  if (delta_.contains(alpha))
    throw std::invalid_argument("member " + exp_str(alpha) +
                                " lies inside the staircase");
  auto it = memo_.find(alpha);
  if (it != memo_.end()) return it->second;
  if (in_progress_.count(alpha))
    throw std::runtime_error(
        "family extension does not terminate: cyclic dependency at " +
        exp_str(alpha) + " (seed family is not order-triangular)");
  in_progress_.insert(alpha);

  int nu = -1;
  for (int i = 0; i < delta_.n(); ++i)
    if (alpha[i] > 0) {
      Exponent down = alpha;
      --down[i];
      if (!delta_.contains(down)) {
        nu = i;
        break;
      }
    }
  if (nu < 0)
    throw std::invalid_argument("corner " + exp_str(alpha) +
                                " missing from the seed family");
  Exponent down = alpha;
  --down[nu];
  Poly lifted = member(down).mul_mono(unit_exp(delta_.n(), nu));
  // reduce the tail only; the marker x^alpha itself stays
  Poly tail = lifted - Poly::term(alpha, Coef::one());
  Poly result = Poly::term(alpha, Coef::one()) + reduce(std::move(tail));
  in_progress_.erase(alpha);
  auto [ins, fresh] = memo_.emplace(alpha, std::move(result));
  return ins->second;
}

Poly MarkedFamily::reduce(Poly f) {
  while (true) {
    // admin-largest exponent outside delta
    const std::pair<Exponent, Coef>* worst = nullptr;
    for (const auto& t : f.terms())
      if (!delta_.contains(t.first)) worst = &t;  // terms are admin ascending
    if (!worst) return f;
    Exponent e = worst->first;
    Coef c = worst->second;
    f = f - member(e).scale(c);
  }
}

Poly reduce(const Poly& f, const FamilyMap& family, const StandardSet& delta) {
  MarkedFamily fam(delta, family);
  return fam.reduce(f);
}

Poly extend_family(const FamilyMap& corner_family, const Exponent& alpha,
                   const StandardSet& delta) {
  MarkedFamily fam(delta, corner_family);
  return fam.member(alpha);
}

}  // namespace gstrata
