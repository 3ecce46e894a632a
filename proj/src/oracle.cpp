#include "gstrata/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gstrata {

namespace {

Rat rat_pow(const Rat& base, int e) {
  Rat out(1);
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

struct OrdLess {
  const TermOrder* o;
  bool operator()(const Exponent& a, const Exponent& b) const {
    return o->less(a, b);
  }
};

}  // namespace

// --- RatMat --------------------------------------------------------------

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  RatMat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
  if ((int)v.size() != c_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rat> out(r_, Rat(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

int RatMat::rank() const {
  RatMat m = *this;
  int rank = 0;
  for (int col = 0; col < c_ && rank < r_; ++col) {
    int piv = -1;
    for (int i = rank; i < r_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < c_; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    Rat inv = 1 / m.at(rank, col);
    for (int j = col; j < c_; ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < r_; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rat RatMat::det() const {
  if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
  RatMat m = *this;
  Rat out(1);
  for (int col = 0; col < c_; ++col) {
    int piv = -1;
    for (int i = col; i < r_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < c_; ++j) std::swap(m.at(col, j), m.at(piv, j));
      out = -out;
    }
    out *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < r_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return out;
}

std::optional<RatMat> RatMat::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
  RatMat m = *this;
  RatMat inv = identity(r_);
  for (int col = 0; col < c_; ++col) {
    int piv = -1;
    for (int i = col; i < r_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < c_; ++j) {
        std::swap(m.at(col, j), m.at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
    Rat s = 1 / m.at(col, col);
    for (int j = 0; j < c_; ++j) {
      m.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (int i = 0; i < r_; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < c_; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
  if ((int)b.size() != r_) throw std::invalid_argument("vector length mismatch");
  auto inv = inverse();
  if (!inv) return std::nullopt;
  return inv->apply(b);
}

// --- Groebner machinery --------------------------------------------------

Poly normal_form(Poly f, const std::vector<Poly>& basis,
                 const TermOrder& order) {
  Poly rem(f.n());
  while (!f.is_zero()) {
    auto lt = f.lead(order);
    bool hit = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      auto gl = g.lead(order);
      if (!exp_divides(gl.e, lt.e)) continue;
      Rat q = lt.c.as_rat() / gl.c.as_rat();
      f = f - g.mul_mono(*exp_sub(lt.e, gl.e)).scale(Coef::rat(q));
      hit = true;
      break;
    }
    if (!hit) {
      Poly head = Poly::term(lt.e, lt.c);
      rem = rem + head;
      f = f - head;
    }
  }
  return rem;
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens,
                                 const TermOrder& order) {
  std::vector<Poly> G;
  // (lcm -> basis index pair), processed smallest lcm first
  std::multimap<Exponent, std::pair<int, int>, OrdLess> queue{OrdLess{&order}};
  auto push = [&](Poly h) {
    h = normal_form(std::move(h), G, order);
    if (h.is_zero()) return;
    h = h.scale(Coef::rat(1 / h.lead(order).c.as_rat()));
    int k = (int)G.size();
    for (int i = 0; i < k; ++i) {
      Exponent l = exp_max(G[i].lead(order).e, h.lead(order).e);
      queue.insert({l, {i, k}});
    }
    G.push_back(std::move(h));
  };
  for (auto& g : gens) push(std::move(g));
  while (!queue.empty()) {
    auto it = queue.begin();
    auto [i, j] = it->second;
    Exponent lcm = it->first;
    queue.erase(it);
    Exponent li = G[i].lead(order).e;
    Exponent lj = G[j].lead(order).e;
    if (lcm == exp_add(li, lj)) continue;  // coprime leading monomials
    Poly s = G[i].mul_mono(*exp_sub(lcm, li)) - G[j].mul_mono(*exp_sub(lcm, lj));
    push(std::move(s));
  }
  // inter-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < G.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < G.size(); ++j)
        if (j != i && !G[j].is_zero()) others.push_back(G[j]);
      Poly h = normal_form(G[i], others, order);
      if (!(h == G[i])) {
        changed = true;
        if (!h.is_zero()) h = h.scale(Coef::rat(1 / h.lead(order).c.as_rat()));
        G[i] = std::move(h);
      }
    }
  }
  std::erase_if(G, [](const Poly& g) { return g.is_zero(); });
  std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
    return order.less(a.lead(order).e, b.lead(order).e);
  });
  return G;
}

namespace {

std::vector<Poly> monic_list(const std::vector<Poly>& gens,
                             const TermOrder& order) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Poly m = g.scale(Coef::rat(1 / g.lead(order).c.as_rat()));
    if (std::find(out.begin(), out.end(), m) == out.end())
      out.push_back(std::move(m));
  }
  return out;
}

// every element of X lies in the ideal generated by Y
bool ideal_contains(const std::vector<Poly>& Y, const std::vector<Poly>& X,
                    const TermOrder& order) {
  auto xs = monic_list(X, order);
  auto ys = monic_list(Y, order);
  std::vector<Poly> rest;
  for (const auto& x : xs)
    if (std::find(ys.begin(), ys.end(), x) == ys.end()) rest.push_back(x);
  if (rest.empty()) return true;  // generator lists coincide
  auto gb = groebner_basis(ys, order);
  for (Poly x : rest)
    if (!normal_form(std::move(x), gb, order).is_zero()) return false;
  return true;
}

}  // namespace

bool ideal_equal(const std::vector<Poly>& A, const std::vector<Poly>& B,
                 const TermOrder& order) {
  return ideal_contains(B, A, order) && ideal_contains(A, B, order);
}

// --- bounded-degree membership certificates ------------------------------

namespace {

// sparse row over Q: (column, value) pairs sorted by column, pivot at back
using SparseRow = std::vector<std::pair<int, Rat>>;

struct SparseEchelon {
  std::map<int, SparseRow> rows;  // pivot column -> row, pivot value 1

  SparseRow reduce(SparseRow r) const {
    while (!r.empty()) {
      auto it = rows.find(r.back().first);
      if (it == rows.end()) return r;
      Rat f = r.back().second;
      const SparseRow& p = it->second;
      SparseRow out;
      size_t i = 0, j = 0;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
          out.push_back({p[j].first, -f * p[j].second});
          ++j;
        } else {
          Rat v = r[i].second - f * p[j].second;
          if (v != 0) out.push_back({r[i].first, std::move(v)});
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
    return r;
  }

  void insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return;
    Rat inv = 1 / r.back().second;
    for (auto& [c, v] : r) v *= inv;
    rows.emplace(r.back().first, std::move(r));
  }
};

}  // namespace

std::vector<bool> bounded_membership(
    const std::vector<Poly>& gens, const std::vector<Poly>& targets,
    const std::vector<std::vector<int>>& weights, int max_deg) {
  std::vector<bool> out(targets.size(), false);
  int m = 0;
  for (const auto& p : targets)
    if (!p.is_zero()) m = p.n();
  for (const auto& p : gens)
    if (!p.is_zero()) m = p.n();
  size_t rank = weights.empty() ? 0 : weights.front().size();
  auto mdeg = [&](const Exponent& e) {
    std::vector<int> w(rank, 0);
    for (int k = 0; k < m; ++k)
      if (e[k])
        for (size_t i = 0; i < rank; ++i) w[i] += e[k] * weights[k][i];
    return w;
  };
  auto check_homogeneous = [&](const Poly& p) {
    if (p.is_zero()) return;
    auto w0 = mdeg(p.terms().front().first);
    for (const auto& [e, c] : p.terms())
      if (mdeg(e) != w0)
        throw std::invalid_argument(
            "bounded_membership: input not homogeneous for the weights");
  };
  std::vector<Poly> gs;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      check_homogeneous(g);
      gs.push_back(g);
    }
  for (const auto& f : targets) check_homogeneous(f);

  // monomial multipliers of each total degree, grouped by graded degree;
  // levels are built on demand as the degree bound escalates
  std::vector<std::map<std::vector<int>, std::vector<Exponent>>> bydeg(
      max_deg + 1);
  bydeg[0][std::vector<int>(rank, 0)] = {Exponent(m, 0)};
  int built = 0;
  auto build_to = [&](int K) {
    for (; built < K; ++built)
      for (const auto& [w, monos] : bydeg[built])
        for (const auto& u : monos) {
          int last = 0;
          for (int k = m - 1; k >= 0; --k)
            if (u[k]) {
              last = k;
              break;
            }
          for (int v = last; v < m; ++v) {
            Exponent u2 = u;
            ++u2[v];
            std::vector<int> w2 = w;
            for (size_t i = 0; i < rank; ++i) w2[i] += weights[v][i];
            bydeg[built + 1][std::move(w2)].push_back(std::move(u2));
          }
        }
  };

  for (size_t ti = 0; ti < targets.size(); ++ti) {
    const Poly& f = targets[ti];
    if (f.is_zero()) {
      out[ti] = true;
      continue;
    }
    auto W = mdeg(f.terms().front().first);
    for (int K = 0; K <= max_deg && !out[ti]; ++K) {
      build_to(K);
      std::vector<std::map<Exponent, Rat, AdminLess>> raw;
      for (const auto& g : gs) {
        auto wg = mdeg(g.terms().front().first);
        std::vector<int> need(rank);
        for (size_t i = 0; i < rank; ++i) need[i] = W[i] - wg[i];
        for (int k = 0; k <= K; ++k) {
          auto it = bydeg[k].find(need);
          if (it == bydeg[k].end()) continue;
          for (const auto& u : it->second) {
            std::map<Exponent, Rat, AdminLess> row;
            for (const auto& [e, c] : g.terms())
              row[exp_add(e, u)] = c.as_rat();
            raw.push_back(std::move(row));
          }
        }
      }
      std::map<Exponent, int, AdminLess> colid;
      for (const auto& row : raw)
        for (const auto& [e, c] : row) colid.emplace(e, 0);
      for (const auto& [e, c] : f.terms()) colid.emplace(e, 0);
      int id = 0;
      for (auto& [e, k] : colid) k = id++;
      SparseEchelon ech;
      for (const auto& row : raw) {
        SparseRow s;
        for (const auto& [e, c] : row) s.push_back({colid.at(e), c});
        ech.insert(std::move(s));
      }
      SparseRow s;
      for (const auto& [e, c] : f.terms())
        s.push_back({colid.at(e), c.as_rat()});
      out[ti] = ech.reduce(std::move(s)).empty();
    }
  }
  return out;
}

std::optional<StandardSet> basis_standard_set(const std::vector<Poly>& basis,
                                              const TermOrder& order) {
  if (basis.empty()) return std::nullopt;  // zero ideal: infinite quotient
  int n = basis.front().n();
  std::vector<Exponent> leads;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    leads.push_back(g.lead(order).e);
    if (total_degree(leads.back()) == 0)
      return StandardSet(n, {});  // unit ideal
  }
  std::vector<int> bound(n, -1);
  for (const auto& l : leads) {
    for (int i = 0; i < n; ++i) {
      if (support_size(l) == 1 && l[i] > 0)
        bound[i] = bound[i] < 0 ? l[i] : std::min(bound[i], l[i]);
    }
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;  // no pure power: infinite quotient
  std::vector<Exponent> elems;
  Exponent cur(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      for (const auto& l : leads)
        if (exp_divides(l, cur)) return;
      elems.push_back(cur);
      return;
    }
    for (int v = 0; v < bound[pos]; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
  return StandardSet(n, std::move(elems));
}

bool coef_ideal_equal(const std::vector<Coef>& A, const ParamRing& ringA,
                      const std::vector<Coef>& B, const ParamRing& ringB,
                      int max_multiplier_degree) {
  std::map<std::pair<Exponent, Exponent>, int, PairAdminLess> coord;
  for (const ParamRing* ring : {&ringA, &ringB})
    for (int id = 0; id < ring->size(); ++id) {
      const auto& nm = ring->name(id);
      coord.emplace(std::make_pair(nm.row, nm.col), 0);
    }
  int m = 0;
  for (auto& [name, idx] : coord) idx = m++;
  auto convert = [&](const Coef& c, const ParamRing& ring) {
    Poly p(m);
    for (const auto& [mono, r] : c.terms()) {
      if (mono.w != 0)
        throw std::invalid_argument("deformation variable in ideal comparison");
      Exponent e(m, 0);
      for (const auto& [id, ex] : mono.t) {
        const auto& nm = ring.name(id);
        e[coord.at({nm.row, nm.col})] = ex;
      }
      p = p + Poly::term(std::move(e), Coef::rat(r));
    }
    return p;
  };
  if (m == 0) {  // no variables at all: only constant generators possible
    auto unit = [](const std::vector<Coef>& v) {
      return std::any_of(v.begin(), v.end(),
                         [](const Coef& c) { return !c.is_zero(); });
    };
    return unit(A) == unit(B);
  }
  // the variable T_{row,col} carries the multidegree row - col; every
  // structural generator is homogeneous for this grading, which keeps the
  // certificate matrices small
  std::vector<std::vector<int>> wt(m);
  {
    int k = 0;
    for (const auto& [name, idx] : coord) {
      int n = (int)name.first.size();
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = name.first[i] - name.second[i];
      wt[k++] = std::move(w);
    }
  }
  TermOrder ord = TermOrder::grevlex(m);
  std::vector<Poly> pa, pb;
  for (const auto& c : A) pa.push_back(convert(c, ringA));
  for (const auto& c : B) pb.push_back(convert(c, ringB));
  pa = monic_list(pa, ord);
  pb = monic_list(pb, ord);
  auto contains = [&](const std::vector<Poly>& Y, const std::vector<Poly>& X) {
    std::vector<Poly> rest;
    for (const auto& x : X)
      if (std::find(Y.begin(), Y.end(), x) == Y.end()) rest.push_back(x);
    if (rest.empty()) return true;
    auto res = bounded_membership(Y, rest, wt, max_multiplier_degree);
    return std::all_of(res.begin(), res.end(), [](bool b) { return b; });
  };
  return contains(pb, pa) && contains(pa, pb);
}

// --- point configurations ------------------------------------------------

void PointConfiguration::validate() const {
  if (points.empty()) throw std::invalid_argument("empty point configuration");
  size_t dim = points[0].size();
  if (dim == 0) throw std::invalid_argument("zero-dimensional points");
  for (const auto& p : points)
    if (p.size() != dim)
      throw std::invalid_argument("inconsistent point dimensions");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("points are not pairwise distinct");
}

nlohmann::json PointConfiguration::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p)
      row.push_back({(long)mpz_get_si(c.get_num_mpz_t()),
                     (long)mpz_get_si(c.get_den_mpz_t())});
    pts.push_back(std::move(row));
  }
  return nlohmann::json{{"points", pts}};
}

PointConfiguration PointConfiguration::from_json(const nlohmann::json& j) {
  const nlohmann::json& pts = j.contains("points") ? j.at("points") : j;
  PointConfiguration P;
  for (const auto& row : pts) {
    std::vector<Rat> p;
    for (const auto& c : row) {
      if (c.is_array()) {
        if (c.size() != 2) throw std::invalid_argument("coordinate must be [num, den]");
        p.push_back(Rat(c[0].get<long>(), c[1].get<long>()));
        p.back().canonicalize();
      } else if (c.is_string()) {
        p.push_back(rat_parse(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        p.push_back(Rat(c.get<long>()));
      } else {
        throw std::invalid_argument("unsupported coordinate format");
      }
    }
    P.points.push_back(std::move(p));
  }
  P.validate();
  return P;
}

namespace {

std::vector<Rat> eval_column(const PointConfiguration& P, const Exponent& e) {
  std::vector<Rat> v;
  v.reserve(P.size());
  for (const auto& p : P.points) {
    Rat prod(1);
    for (size_t i = 0; i < p.size(); ++i) prod *= rat_pow(p[i], e[i]);
    v.push_back(std::move(prod));
  }
  return v;
}

// incremental column-space membership by sequential elimination
struct ColumnSpace {
  std::vector<std::vector<Rat>> cols;  // normalized at their pivots
  std::vector<int> pivots;

  // reduces v in place; true when v lies in the current span
  bool contains(std::vector<Rat>& v) const {
    for (size_t k = 0; k < cols.size(); ++k) {
      const Rat& f = v[pivots[k]];
      if (f == 0) continue;
      Rat fc = f;
      for (size_t i = 0; i < v.size(); ++i) v[i] -= fc * cols[k][i];
    }
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }

  void insert(std::vector<Rat> v) {  // pre: already reduced, nonzero
    int piv = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        piv = (int)i;
        break;
      }
    Rat inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    cols.push_back(std::move(v));
    pivots.push_back(piv);
  }
};

}  // namespace

PointIdeal point_ideal(const PointConfiguration& P, const TermOrder& order) {
  P.validate();
  const int n = P.n();
  const int r = P.size();
  std::set<Exponent, OrdLess> candidates{OrdLess{&order}};
  candidates.insert(Exponent(n, 0));
  std::vector<Exponent> delta_elems, leads;
  ColumnSpace space;
  while (!candidates.empty()) {
    Exponent a = *candidates.begin();
    candidates.erase(candidates.begin());
    bool pruned = false;
    for (const auto& l : leads)
      if (exp_divides(l, a)) {
        pruned = true;
        break;
      }
    if (pruned) continue;
    std::vector<Rat> v = eval_column(P, a);
    if (space.contains(v)) {
      leads.push_back(a);
    } else {
      space.insert(std::move(v));
      delta_elems.push_back(a);
      for (int i = 0; i < n; ++i) candidates.insert(exp_add(a, unit_exp(n, i)));
    }
  }
  StandardSet delta(n, std::move(delta_elems));
  if (delta.size() != r)
    throw std::logic_error("point ideal standard set has wrong size");
  RatMat M(r, r);
  for (int j = 0; j < r; ++j) {
    auto col = eval_column(P, delta.elements()[j]);
    for (int i = 0; i < r; ++i) M.at(i, j) = col[i];
  }
  auto Minv = M.inverse();
  if (!Minv) throw std::logic_error("evaluation matrix unexpectedly singular");
  PointIdeal out{std::move(delta), {}};
  for (const auto& a : out.delta.border()) {
    std::vector<Rat> v = eval_column(P, a);
    for (auto& x : v) x = -x;
    std::vector<Rat> d = Minv->apply(v);
    for (int j = 0; j < r; ++j)
      out.d[{a, out.delta.elements()[j]}] = d[j];
  }
  return out;
}

std::optional<std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess>>
chart_coefficients(const PointConfiguration& P, const StandardSet& delta,
                   const std::vector<Exponent>& rows) {
  P.validate();
  if (delta.n() != P.n() || delta.size() != P.size())
    throw std::invalid_argument("basis candidate does not match point count");
  const int r = P.size();
  RatMat M(r, r);
  for (int j = 0; j < r; ++j) {
    auto col = eval_column(P, delta.elements()[j]);
    for (int i = 0; i < r; ++i) M.at(i, j) = col[i];
  }
  auto Minv = M.inverse();
  if (!Minv) return std::nullopt;
  std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess> out;
  for (const auto& a : rows) {
    if (delta.contains(a)) continue;
    std::vector<Rat> d = Minv->apply(eval_column(P, a));
    for (int j = 0; j < r; ++j) out[{a, delta.elements()[j]}] = d[j];
  }
  return out;
}

bool stratum_certifies(const PointConfiguration& P, const StandardSet& eps,
                       const TermOrder& order) {
  P.validate();
  if (eps.n() != P.n() || eps.size() != P.size()) return false;
  const int r = P.size();
  RatMat M(r, r);
  for (int j = 0; j < r; ++j) {
    auto col = eval_column(P, eps.elements()[j]);
    for (int i = 0; i < r; ++i) M.at(i, j) = col[i];
  }
  auto Minv = M.inverse();
  if (!Minv) return false;
  for (const auto& a : eps.border()) {
    std::vector<Rat> v = eval_column(P, a);
    for (auto& x : v) x = -x;
    std::vector<Rat> d = Minv->apply(v);
    for (int j = 0; j < r; ++j)
      if (d[j] != 0 && !order.less(eps.elements()[j], a)) return false;
  }
  return true;
}

StandardSet classify_stratum(const PointConfiguration& P,
                             const TermOrder& order) {
  PointIdeal pi = point_ideal(P, order);
  if (!stratum_certifies(P, pi.delta, order))
    throw std::runtime_error("stratum certification failed: triangularity");
  EquationSet es = gen_fewer(pi.delta);
  std::vector<Rat> vals(es.ring->size(), Rat(0));
  for (int id = 0; id < es.ring->size(); ++id) {
    const auto& nm = es.ring->name(id);
    auto it = pi.d.find({nm.row, nm.col});
    if (it == pi.d.end())
      throw std::runtime_error("stratum certification failed: missing border row");
    vals[id] = -it->second;
  }
  Exponent origin(pi.delta.n(), 0);
  for (const auto& g : es.gens) {
    const Coef* c = g.poly.coeff(origin);
    if (!c) continue;
    if (c->eval(vals, Rat(1)) != 0) {
      std::ostringstream msg;
      msg << "stratum certification failed: relation " << label_str(g.label)
          << " does not vanish on the border coefficients";
      throw std::runtime_error(msg.str());
    }
  }
  return pi.delta;
}

// --- seeded generators ---------------------------------------------------

namespace {

Rat draw_rat(std::mt19937_64& gen) {
  long num = (long)(gen() % 19) - 9;
  long den = 1 + (long)(gen() % 3);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

PointConfiguration random_config(int n, int r, unsigned long seed) {
  if (n < 1 || r < 1) throw std::invalid_argument("bad configuration size");
  std::mt19937_64 gen(seed);
  PointConfiguration P;
  std::set<std::vector<Rat>> seen;
  int guard = 0;
  while ((int)P.points.size() < r) {
    if (++guard > 100000)
      throw std::runtime_error("random configuration generation stalled");
    std::vector<Rat> p;
    for (int i = 0; i < n; ++i) p.push_back(draw_rat(gen));
    if (seen.count(p)) continue;
    seen.insert(p);
    P.points.push_back(std::move(p));
  }
  return P;
}

PointConfiguration grid_config(const StandardSet& eps, unsigned long seed) {
  if (eps.size() == 0) throw std::invalid_argument("empty standard set");
  const int n = eps.n();
  std::mt19937_64 gen(seed);
  std::vector<int> height(n, 0);
  for (const auto& e : eps.elements())
    for (int i = 0; i < n; ++i) height[i] = std::max(height[i], e[i] + 1);
  std::vector<std::vector<Rat>> inject(n);
  for (int i = 0; i < n; ++i) {
    std::set<Rat> used;
    int guard = 0;
    while ((int)inject[i].size() < height[i]) {
      if (++guard > 100000)
        throw std::runtime_error("grid injection generation stalled");
      Rat q = draw_rat(gen);
      if (used.count(q)) continue;
      used.insert(q);
      inject[i].push_back(q);
    }
  }
  PointConfiguration P;
  for (const auto& e : eps.elements()) {
    std::vector<Rat> p(n);
    for (int i = 0; i < n; ++i) p[i] = inject[i][e[i]];
    P.points.push_back(std::move(p));
  }
  P.validate();
  return P;
}

}  // namespace gstrata
