#include "gstrata/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace gstrata {

int total_degree(const Exponent& a) {
  int d = 0;
  for (int c : a) d += c;
  return d;
}

bool admin_less(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::optional<Exponent> exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) return std::nullopt;
  }
  return r;
}

bool exp_divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_max(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent unit_exp(int n, int i) {
  Exponent r(n, 0);
  r[i] = 1;
  return r;
}

int support_size(const Exponent& a) {
  int s = 0;
  for (int c : a)
    if (c != 0) ++s;
  return s;
}

std::string exp_str(const Exponent& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

bool is_standard_set(int n, const std::vector<Exponent>& elements) {
  if (n < 1 || n > kMaxDim) return false;
  std::set<Exponent, AdminLess> s;
  for (const auto& e : elements) {
    if (static_cast<int>(e.size()) != n) return false;
    for (int c : e)
      if (c < 0) return false;
    if (!s.insert(e).second) return false;  // duplicate
  }
  for (const auto& e : s)
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) {
        Exponent p = e;
        --p[i];
        if (!s.count(p)) return false;
      }
  return true;
}

StandardSet::StandardSet(int n, std::vector<Exponent> elements) : n_(n) {
  if (!is_standard_set(n, elements))
    throw std::invalid_argument("not a standard set in dimension " +
                                std::to_string(n));
  std::sort(elements.begin(), elements.end(), AdminLess{});
  elems_ = std::move(elements);
  lookup_.insert(elems_.begin(), elems_.end());

  // corners: alpha outside delta with every alpha - e_i inside delta or
  // outside N^n
  std::set<Exponent, AdminLess> cand;
  if (elems_.empty()) {
    cand.insert(Exponent(n_, 0));
  } else {
    for (const auto& e : elems_)
      for (int i = 0; i < n_; ++i) {
        Exponent up = e;
        ++up[i];
        if (!lookup_.count(up)) cand.insert(up);
      }
  }
  for (const auto& a : cand) {
    bool corner = true;
    for (int i = 0; i < n_ && corner; ++i)
      if (a[i] > 0) {
        Exponent p = a;
        --p[i];
        if (!lookup_.count(p)) corner = false;
      }
    if (corner) corners_.push_back(a);
  }
  // border: delta + unit steps, minus delta
  std::set<Exponent, AdminLess> b;
  for (const auto& e : elems_)
    for (int i = 0; i < n_; ++i) {
      Exponent up = e;
      ++up[i];
      if (!lookup_.count(up)) b.insert(up);
    }
  border_.assign(b.begin(), b.end());

  // edge points: eps in delta with a coordinate plane {i,j} containing
  // supp(eps) and both eps+e_i, eps+e_j outside delta.  For n >= 3 only
  // planes filled by the support count here (axis/origin planes are
  // enumerated separately where the commutation relations need them).
  for (const auto& e : elems_) {
    bool edge = false;
    if (n_ == 2) {
      Exponent u1 = e, u2 = e;
      ++u1[0];
      ++u2[1];
      edge = !lookup_.count(u1) && !lookup_.count(u2);
    } else if (support_size(e) == 2) {
      int i = -1, j = -1;
      for (int k = 0; k < n_; ++k)
        if (e[k] != 0) (i < 0 ? i : j) = k;
      Exponent ui = e, uj = e;
      ++ui[i];
      ++uj[j];
      edge = !lookup_.count(ui) && !lookup_.count(uj);
    }
    if (edge) edges_.push_back(e);
  }
}

bool StandardSet::contains(const Exponent& e) const {
  return lookup_.count(e) > 0;
}

std::vector<Exponent> StandardSet::iterated_border(int k) const {
  if (k < 1) throw std::invalid_argument("iterated_border: k must be >= 1");
  std::set<Exponent, AdminLess> acc(lookup_);
  std::vector<Exponent> layer;
  for (int step = 0; step < k; ++step) {
    std::set<Exponent, AdminLess> next;
    for (const auto& e : acc)
      for (int i = 0; i < n_; ++i) {
        Exponent up = e;
        ++up[i];
        if (!acc.count(up)) next.insert(up);
      }
    layer.assign(next.begin(), next.end());
    acc.insert(next.begin(), next.end());
  }
  return layer;
}

nlohmann::json StandardSet::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["elements"] = nlohmann::json::array();
  for (const auto& e : elems_) j["elements"].push_back(e);
  return j;
}

StandardSet StandardSet::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Exponent> elems;
  for (const auto& e : j.at("elements")) elems.push_back(e.get<Exponent>());
  return StandardSet(n, std::move(elems));
}

namespace {

// Downward-closed subsets of size r of the downward-closed `within` (in
// N^(n-1) context); within is admin-sorted.
void enumerate_within(int n, int r, const std::vector<Exponent>& within,
                      std::vector<std::vector<Exponent>>& out, long cap);

// Enumerate by slices along the last coordinate: delta = union_k delta_k x {k}
// with delta_0 superset delta_1 superset ...
void slices(int n, int remaining, int k,
            const std::vector<Exponent>& prev_slice,
            std::vector<Exponent>& acc,
            std::vector<std::vector<Exponent>>& out, long cap) {
  if (remaining == 0) {
    out.push_back(acc);
    if (static_cast<long>(out.size()) > cap)
      throw std::runtime_error("standard-set enumeration exceeds cap");
    return;
  }
  int limit = k == 0 ? remaining : std::min<int>(remaining, prev_slice.size());
  for (int sz = limit; sz >= 1; --sz) {
    std::vector<std::vector<Exponent>> subs;
    if (k == 0) {
      std::vector<Exponent> all;  // unconstrained first slice
      enumerate_within(n - 1, sz, all, subs, cap);
    } else {
      enumerate_within(n - 1, sz, prev_slice, subs, cap);
    }
    for (auto& sub : subs) {
      size_t mark = acc.size();
      for (const auto& e : sub) {
        Exponent full = e;
        full.push_back(k);
        acc.push_back(full);
      }
      slices(n, remaining - sz, k + 1, sub, acc, out, cap);
      acc.resize(mark);
    }
  }
}

void enumerate_within(int n, int r, const std::vector<Exponent>& within,
                      std::vector<std::vector<Exponent>>& out, long cap) {
  if (n == 1) {
    // {0,...,r-1}; constrained case requires it to fit in `within`
    if (!within.empty() && r > static_cast<int>(within.size())) return;
    std::vector<Exponent> s;
    for (int i = 0; i < r; ++i) s.push_back(Exponent{i});
    out.push_back(s);
    return;
  }
  std::vector<std::vector<Exponent>> all;
  std::vector<Exponent> acc;
  slices(n, r, 0, {}, acc, all, cap);
  if (within.empty()) {
    out = std::move(all);
    return;
  }
  std::set<Exponent, AdminLess> w(within.begin(), within.end());
  for (auto& s : all) {
    bool ok = true;
    for (const auto& e : s)
      if (!w.count(e)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<StandardSet> enumerate_standard_sets(int n, int r) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("bad dimension");
  if (r < 0) throw std::invalid_argument("bad size");
  if (r == 0) return {StandardSet(n, {})};
  std::vector<std::vector<Exponent>> raw;
  enumerate_within(n, r, {}, raw, kEnumerationCap);
  for (auto& s : raw) std::sort(s.begin(), s.end(), AdminLess{});
  std::sort(raw.begin(), raw.end(),
            [](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end(), AdminLess{});
            });
  std::vector<StandardSet> out;
  out.reserve(raw.size());
  for (auto& s : raw) out.emplace_back(n, std::move(s));
  return out;
}

}  // namespace gstrata
