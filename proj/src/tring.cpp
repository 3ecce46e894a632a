#include "gstrata/tring.hpp"

#include <sstream>
#include <stdexcept>

namespace gstrata {

Rat rat_parse(const std::string& s) {
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits = digits.substr(1);
    }
    if (digits.empty()) throw std::invalid_argument("bad rational: " + s);
    mpz_class num(digits, 10), den(1);
    for (size_t i = 0; i < frac; ++i) den *= 10;
    Rat r(neg ? -num : num, den);
    r.canonicalize();
    return r;
  }
  Rat r(s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int ParamRing::var(const Exponent& row, const Exponent& col) {
  auto key = std::make_pair(row, col);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(names_.size());
  names_.push_back(Name{row, col});
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<int> ParamRing::find(const Exponent& row,
                                   const Exponent& col) const {
  auto it = index_.find(std::make_pair(row, col));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool pmono_less(const PMono& a, const PMono& b) {
  if (a.t != b.t) return a.t < b.t;
  return a.w < b.w;
}

Coef Coef::rat(const Rat& r) {
  Coef c;
  if (r != 0) c.terms_.push_back({PMono{}, r});
  return c;
}

Coef Coef::var(int id) {
  Coef c;
  c.terms_.push_back({PMono{{{id, 1}}, 0}, Rat(1)});
  return c;
}

Coef Coef::tpow(int w) {
  Coef c;
  c.terms_.push_back({PMono{{}, w}, Rat(1)});
  return c;
}

Coef Coef::term(PMono m, const Rat& c0) {
  Coef c;
  if (c0 != 0) c.terms_.push_back({std::move(m), c0});
  return c;
}

bool Coef::is_rat() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].first.t.empty() &&
         terms_[0].first.w == 0;
}

Rat Coef::as_rat() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rat()) throw std::domain_error("coefficient is not rational");
  return terms_[0].second;
}

namespace {
using TermMap = std::map<PMono, Rat, bool (*)(const PMono&, const PMono&)>;

TermMap make_map() { return TermMap(pmono_less); }

void add_into(TermMap& m, const PMono& mono, const Rat& c) {
  auto [it, fresh] = m.emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

PMono mul_mono(const PMono& a, const PMono& b) {
  PMono r;
  r.w = a.w + b.w;
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    if (a.t[i].first == b.t[j].first) {
      r.t.push_back({a.t[i].first, a.t[i].second + b.t[j].second});
      ++i, ++j;
    } else if (a.t[i].first < b.t[j].first) {
      r.t.push_back(a.t[i++]);
    } else {
      r.t.push_back(b.t[j++]);
    }
  }
  while (i < a.t.size()) r.t.push_back(a.t[i++]);
  while (j < b.t.size()) r.t.push_back(b.t[j++]);
  return r;
}
}  // namespace

Coef Coef::from_map(TermMap&& m) {
  Coef c;
  c.terms_.assign(m.begin(), m.end());
  return c;
}

Coef Coef::operator+(const Coef& o) const {
  auto m = make_map();
  for (const auto& [mono, c] : terms_) add_into(m, mono, c);
  for (const auto& [mono, c] : o.terms_) add_into(m, mono, c);
  return from_map(std::move(m));
}

Coef Coef::operator-(const Coef& o) const { return *this + (-o); }

Coef Coef::operator-() const {
  Coef c = *this;
  for (auto& [mono, v] : c.terms_) v = -v;
  return c;
}

Coef Coef::scale(const Rat& r) const {
  if (r == 0) return Coef();
  Coef c = *this;
  for (auto& [mono, v] : c.terms_) v *= r;
  return c;
}

Coef Coef::operator*(const Coef& o) const {
  auto m = make_map();
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) add_into(m, mul_mono(ma, mb), ca * cb);
  return from_map(std::move(m));
}

Coef Coef::shift_t(const std::function<long(int)>& weight) const {
  Coef c = *this;
  for (auto& [mono, v] : c.terms_) {
    long extra = 0;
    for (const auto& [id, e] : mono.t) extra += weight(id) * e;
    if (mono.w + extra < 0)
      throw std::domain_error("negative t-exponent in deformation");
    mono.w += static_cast<int>(extra);
  }
  // t-shifts preserve distinctness of monomials with distinct T-parts
  auto m = make_map();
  for (const auto& [mono, v] : c.terms_) add_into(m, mono, v);
  return from_map(std::move(m));
}

Coef Coef::substitute(const std::map<int, Coef>& repl) const {
  Coef total;
  for (const auto& [mono, c] : terms_) {
    Coef prod = Coef::term(PMono{{}, mono.w}, c);
    for (const auto& [id, e] : mono.t) {
      auto it = repl.find(id);
      Coef base = it == repl.end() ? Coef::var(id) : it->second;
      for (int k = 0; k < e; ++k) prod = prod * base;
    }
    total = total + prod;
  }
  return total;
}

Coef Coef::set_t(const Rat& tval) const {
  auto m = make_map();
  for (const auto& [mono, c] : terms_) {
    Rat scaled = c;
    for (int k = 0; k < mono.w; ++k) scaled *= tval;
    if (scaled == 0) continue;
    PMono stripped{mono.t, 0};
    add_into(m, stripped, scaled);
  }
  return from_map(std::move(m));
}

Rat Coef::eval(const std::vector<Rat>& var_vals, const Rat& tval) const {
  Rat total(0);
  for (const auto& [mono, c] : terms_) {
    Rat v = c;
    for (const auto& [id, e] : mono.t) {
      if (id >= static_cast<int>(var_vals.size()))
        throw std::out_of_range("missing variable value");
      for (int k = 0; k < e; ++k) v *= var_vals[id];
    }
    for (int k = 0; k < mono.w; ++k) v *= tval;
    total += v;
  }
  return total;
}

int Coef::tvar_degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) {
    int td = 0;
    for (const auto& [id, e] : mono.t) td += e;
    d = std::max(d, td);
  }
  return d;
}

}  // namespace gstrata
