#include "gstrata/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gstrata {

TermOrder TermOrder::lex(int n) { return TermOrder(Kind::Lex, n); }
TermOrder TermOrder::grlex(int n) { return TermOrder(Kind::GrLex, n); }
TermOrder TermOrder::grevlex(int n) { return TermOrder(Kind::GrevLex, n); }

TermOrder TermOrder::weighted(std::vector<long> weights, TermOrder tiebreak) {
  int n = static_cast<int>(weights.size());
  if (tiebreak.n() != n)
    throw std::invalid_argument("weight/tiebreak dimension mismatch");
  for (long w : weights)
    if (w < 0) throw std::invalid_argument("weights must be >= 0");
  TermOrder o(Kind::Weighted, n);
  o.weights_ = std::move(weights);
  o.tie_ = std::make_shared<const TermOrder>(std::move(tiebreak));
  return o;
}

TermOrder TermOrder::with_priority(std::vector<int> priority) const {
  if (static_cast<int>(priority.size()) != n_)
    throw std::invalid_argument("priority size mismatch");
  std::vector<bool> seen(n_, false);
  for (int v : priority) {
    if (v < 0 || v >= n_ || seen[v])
      throw std::invalid_argument("priority is not a permutation");
    seen[v] = true;
  }
  TermOrder o = *this;
  bool identity = true;
  for (int k = 0; k < n_; ++k)
    if (priority[k] != k) identity = false;
  o.prio_ = identity ? std::vector<int>{} : std::move(priority);
  if (o.tie_) {
    TermOrder t = o.tie_->with_priority(o.prio_.empty()
                                            ? [this] {
                                                std::vector<int> id(n_);
                                                std::iota(id.begin(), id.end(), 0);
                                                return id;
                                              }()
                                            : o.prio_);
    o.tie_ = std::make_shared<const TermOrder>(std::move(t));
  }
  return o;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
    throw std::invalid_argument("exponent dimension mismatch");
  auto var = [this](int rank) { return prio_.empty() ? rank : prio_[rank]; };
  switch (kind_) {
    case Kind::Lex:
      for (int k = 0; k < n_; ++k) {
        int i = var(k);
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::GrLex: {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      for (int k = 0; k < n_; ++k) {
        int i = var(k);
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::GrevLex: {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      for (int k = n_ - 1; k >= 0; --k) {
        int i = var(k);
        // smaller exponent in the least significant variable wins
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Weighted: {
      long wa = 0, wb = 0;
      for (int i = 0; i < n_; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return tie_->compare(a, b);
    }
  }
  return 0;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrLex:
      return "grlex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Weighted: {
      std::string s = "w:";
      for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
      }
      return s + ":" + tie_->to_string();
    }
  }
  return "";
}

std::string TermOrder::vars_string() const {
  if (prio_.empty()) return "";
  std::string s;
  for (size_t k = 0; k < prio_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(prio_[k] + 1);
  }
  return s;
}

TermOrder TermOrder::parse(const std::string& spec, int n,
                           const std::string& vars) {
  TermOrder base = [&]() -> TermOrder {
    if (spec == "lex") return lex(n);
    if (spec == "grlex") return grlex(n);
    if (spec == "grevlex") return grevlex(n);
    if (spec.rfind("w:", 0) == 0) {
      auto rest = spec.substr(2);
      auto colon = rest.rfind(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("weighted order needs a tiebreak: " + spec);
      std::string tiespec = rest.substr(colon + 1);
      std::string wlist = rest.substr(0, colon);
      std::vector<long> w;
      std::stringstream ss(wlist);
      std::string tok;
      while (std::getline(ss, tok, ',')) w.push_back(std::stol(tok));
      if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight count != n in: " + spec);
      if (tiespec != "lex" && tiespec != "grlex" && tiespec != "grevlex")
        throw std::invalid_argument("unknown tiebreak: " + tiespec);
      return weighted(std::move(w), parse(tiespec, n));
    }
    throw std::invalid_argument("unknown order: " + spec);
  }();
  if (vars.empty()) return base;
  std::vector<int> prio;
  std::stringstream ss(vars);
  std::string tok;
  while (std::getline(ss, tok, ',')) prio.push_back(std::stoi(tok) - 1);
  return base.with_priority(std::move(prio));
}

namespace {

bool separates(const std::vector<long>& l,
               const std::vector<std::pair<Exponent, Exponent>>& pairs) {
  for (const auto& [a, b] : pairs) {
    long d = 0;
    for (size_t i = 0; i < l.size(); ++i) d += l[i] * (a[i] - b[i]);
    if (d <= 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<long>> find_separating_weight(
    int n, const std::vector<std::pair<Exponent, Exponent>>& pairs) {
  std::vector<long> ones(n, 1);
  if (separates(ones, pairs)) return ones;
  if (n <= 4) {
    for (long box = 1; box <= 64; box *= 2) {
      // iterate {0..box}^n lexicographically; only vectors touching the new
      // box boundary, so earlier boxes are not revisited
      std::vector<long> l(n, 0);
      while (true) {
        if (*std::max_element(l.begin(), l.end()) == box &&
            separates(l, pairs))
          return l;
        int i = n - 1;
        while (i >= 0 && l[i] == box) l[i--] = 0;
        if (i < 0) break;
        ++l[i];
      }
    }
    return std::nullopt;
  }
  // large n: scaled geometric families in both variable directions
  for (long base = 2; base <= 1 << 20; base *= 2) {
    std::vector<long> g(n), r(n);
    long p = 1;
    for (int i = n - 1; i >= 0; --i) {
      g[i] = p;
      r[n - 1 - i] = p;
      if (p > (1L << 40)) break;
      p *= base;
    }
    for (const auto& cand : {g, r}) {
      if (separates(cand, pairs)) return cand;
      std::vector<long> shifted(n);
      for (int i = 0; i < n; ++i) shifted[i] = cand[i] + 1;
      if (separates(shifted, pairs)) return shifted;
    }
  }
  return std::nullopt;
}

}  // namespace gstrata
