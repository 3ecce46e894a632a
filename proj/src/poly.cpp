#include "gstrata/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gstrata {

namespace {
using XMap = std::map<Exponent, Coef, AdminLess>;

void add_into(XMap& m, const Exponent& e, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.emplace(e, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}
}  // namespace

Poly Poly::term(Exponent e, Coef c) {
  Poly p(static_cast<int>(e.size()));
  if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

const Coef* Poly::coeff(const Exponent& e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const auto& t, const Exponent& k) { return admin_less(t.first, k); });
  if (it == terms_.end() || it->first != e) return nullptr;
  return &it->second;
}

Poly Poly::operator+(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  XMap m;
  for (const auto& [e, c] : terms_) add_into(m, e, c);
  for (const auto& [e, c] : o.terms_) add_into(m, e, c);
  Poly p(n_);
  p.terms_.assign(m.begin(), m.end());
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  XMap m;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) add_into(m, exp_add(ea, eb), ca * cb);
  Poly p(n_);
  p.terms_.assign(m.begin(), m.end());
  return p;
}

Poly Poly::scale(const Coef& c) const {
  if (c.is_zero()) return Poly(n_);
  XMap m;
  for (const auto& [e, v] : terms_) add_into(m, e, v * c);
  Poly p(n_);
  p.terms_.assign(m.begin(), m.end());
  return p;
}

Poly Poly::mul_mono(const Exponent& mono) const {
  Poly p(n_);
  p.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) p.terms_.push_back({exp_add(e, mono), c});
  return p;  // admin order is translation invariant
}

Poly::Lead Poly::lead(const TermOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading data of zero");
  const auto* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.greater(t.first, best->first)) best = &t;
  return Lead{best->first, best->second};
}

Poly Poly::map_coefs(const std::function<Coef(const Coef&)>& f) const {
  Poly p(n_);
  for (const auto& [e, c] : terms_) {
    Coef nc = f(c);
    if (!nc.is_zero()) p.terms_.push_back({e, std::move(nc)});
  }
  return p;
}

}  // namespace gstrata
