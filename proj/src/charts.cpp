#include "gstrata/charts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gstrata/textio.hpp"

namespace gstrata {

namespace {

StandardSet union_set(const StandardSet& a, const StandardSet& b) {
  std::set<Exponent, AdminLess> u(a.elements().begin(), a.elements().end());
  u.insert(b.elements().begin(), b.elements().end());
  return StandardSet(a.n(), {u.begin(), u.end()});
}

size_t locate(const std::vector<Exponent>& labels, const Exponent& x) {
  auto it = std::find(labels.begin(), labels.end(), x);
  if (it == labels.end()) throw std::invalid_argument("label not present");
  return static_cast<size_t>(it - labels.begin());
}

nlohmann::json pair_json(const std::pair<Exponent, Exponent>& p) {
  return nlohmann::json::array({p.first, p.second});
}

}  // namespace

const Coef& LabeledMatrix::at(const Exponent& row, const Exponent& col) const {
  return a[locate(row_labels, row)][locate(col_labels, col)];
}

LabeledMatrix submatrix(const LabeledMatrix& m,
                        const std::vector<Exponent>& rows,
                        const std::vector<Exponent>& cols) {
  LabeledMatrix out{rows, cols, {}};
  out.a.reserve(rows.size());
  for (const auto& r : rows) {
    const auto& line = m.a[locate(m.row_labels, r)];
    std::vector<Coef> picked;
    picked.reserve(cols.size());
    for (const auto& c : cols) picked.push_back(line[locate(m.col_labels, c)]);
    out.a.push_back(std::move(picked));
  }
  return out;
}

Coef sym_det(const std::vector<std::vector<Coef>>& m) {
  const size_t s = m.size();
  if (s == 0) return Coef::one();
  if (s == 1) return m[0][0];
  Coef out;
  std::vector<std::vector<Coef>> minor(s - 1, std::vector<Coef>(s - 1));
  for (size_t i = 0; i < s; ++i) {
    if (m[i][0].is_zero()) continue;
    for (size_t r = 0, rr = 0; r < s; ++r) {
      if (r == i) continue;
      for (size_t c = 1; c < s; ++c) minor[rr][c - 1] = m[r][c];
      ++rr;
    }
    Coef term = m[i][0] * sym_det(minor);
    out = (i % 2 == 0) ? out + term : out - term;
  }
  return out;
}

std::vector<std::vector<Coef>> sym_adjugate(
    const std::vector<std::vector<Coef>>& m) {
  const size_t s = m.size();
  std::vector<std::vector<Coef>> adj(s, std::vector<Coef>(s));
  if (s == 0) return adj;
  if (s == 1) {
    adj[0][0] = Coef::one();
    return adj;
  }
  std::vector<std::vector<Coef>> minor(s - 1, std::vector<Coef>(s - 1));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      for (size_t r = 0, rr = 0; r < s; ++r) {
        if (r == i) continue;
        for (size_t c = 0, cc = 0; c < s; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = m[r][c];
        }
        ++rr;
      }
      Coef d = sym_det(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

ChartBlocks chart_blocks(const StandardSet& delta, const StandardSet& eps) {
  if (delta.n() != eps.n())
    throw std::invalid_argument("charts live in different dimensions");
  if (delta.size() != eps.size())
    throw std::invalid_argument("charts have different lengths");
  StandardSet joint = union_set(delta, eps);
  std::vector<Exponent> rows = joint.elements();
  for (const auto& b : joint.border()) rows.push_back(b);
  std::sort(rows.begin(), rows.end(), admin_less);
  std::vector<Exponent> common, donly, eonly, rho;
  for (const auto& a : rows) {
    const bool din = delta.contains(a), ein = eps.contains(a);
    auto& part = din && ein ? common : din ? donly : ein ? eonly : rho;
    part.push_back(a);
  }
  auto tring = std::make_shared<ParamRing>();
  auto uring = std::make_shared<ParamRing>();
  auto build = [&rows](const StandardSet& base, const ParamRingPtr& ring) {
    LabeledMatrix m{rows, base.elements(), {}};
    for (const auto& a : rows) {
      std::vector<Coef> line;
      line.reserve(m.col_labels.size());
      for (const auto& b : m.col_labels) {
        if (base.contains(a))
          line.push_back(a == b ? Coef::one() : Coef());
        else
          line.push_back(Coef::var(ring->var(a, b)));
      }
      m.a.push_back(std::move(line));
    }
    return m;
  };
  LabeledMatrix tm = build(delta, tring);
  LabeledMatrix um = build(eps, uring);
  return ChartBlocks{delta,
                     eps,
                     std::move(joint),
                     std::move(rows),
                     std::move(common),
                     std::move(donly),
                     std::move(eonly),
                     std::move(rho),
                     std::move(tring),
                     std::move(uring),
                     std::move(tm),
                     std::move(um)};
}

nlohmann::json ChartBlocks::to_json() const {
  nlohmann::json j;
  j["delta"] = delta.to_json();
  j["eps"] = eps.to_json();
  j["rows"] = rows;
  j["common"] = common;
  j["delta_only"] = delta_only;
  j["eps_only"] = eps_only;
  j["rho"] = rho;
  return j;
}

Coef intersection_det(const ChartBlocks& cb) {
  return sym_det(submatrix(cb.tmat, cb.eps_only, cb.delta_only).a);
}

Coef intersection_det(const StandardSet& delta, const StandardSet& eps) {
  return intersection_det(chart_blocks(delta, eps));
}

GluingMap gluing_map(const StandardSet& delta, const StandardSet& eps) {
  ChartBlocks cb = chart_blocks(delta, eps);

  std::vector<Exponent> eps_rows = cb.common, delta_cols = cb.common;
  eps_rows.insert(eps_rows.end(), cb.eps_only.begin(), cb.eps_only.end());
  delta_cols.insert(delta_cols.end(), cb.delta_only.begin(),
                    cb.delta_only.end());
  LabeledMatrix tbox = submatrix(cb.tmat, eps_rows, delta_cols);
  LabeledMatrix ubox = submatrix(cb.umat, delta_cols, eps_rows);

  LabeledMatrix t32 = submatrix(cb.tmat, cb.eps_only, cb.delta_only);
  LabeledMatrix t31 = submatrix(cb.tmat, cb.eps_only, cb.common);
  Coef det = sym_det(t32.a);
  // adj has rows labeled by delta_only and columns by eps_only, because the
  // adjugate transposes the index roles of t32.
  auto adj = sym_adjugate(t32.a);
  const size_t k = cb.delta_only.size();
  const size_t nc = cb.common.size();

  // adj * t31: rows delta_only, columns common.
  std::vector<std::vector<Coef>> adj_t31(k, std::vector<Coef>(nc));
  for (size_t b = 0; b < k; ++b)
    for (size_t c = 0; c < nc; ++c) {
      Coef s;
      for (size_t e = 0; e < k; ++e) s = s + adj[b][e] * t31.a[e][c];
      adj_t31[b][c] = std::move(s);
    }

  // U * det = T * Q with Q = det * inverse(tbox); blockwise this needs only
  // the adjugate of the small exchange block t32.
  std::map<std::pair<Exponent, Exponent>, Coef, PairAdminLess> numer;
  for (const auto& arow : cb.rows) {
    if (cb.eps.contains(arow)) continue;
    const auto& tline = cb.tmat.a[locate(cb.rows, arow)];
    auto tcol = [&](const Exponent& b) -> const Coef& {
      return tline[locate(cb.tmat.col_labels, b)];
    };
    for (size_t c = 0; c < nc; ++c) {
      Coef s = det * tcol(cb.common[c]);
      for (size_t b = 0; b < k; ++b)
        s = s - tcol(cb.delta_only[b]) * adj_t31[b][c];
      numer[{arow, cb.common[c]}] = std::move(s);
    }
    for (size_t e = 0; e < cb.eps_only.size(); ++e) {
      Coef s;
      for (size_t b = 0; b < k; ++b)
        s = s + tcol(cb.delta_only[b]) * adj[b][e];
      numer[{arow, cb.eps_only[e]}] = std::move(s);
    }
  }
  return GluingMap{std::move(cb), std::move(tbox), std::move(ubox),
                   std::move(det), std::move(numer)};
}

std::optional<std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess>>
GluingMap::specialize(
    const std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess>& tvals)
    const {
  std::vector<Rat> vals(blocks.tring->size(), Rat(0));
  for (int id = 0; id < blocks.tring->size(); ++id) {
    const auto& nm = blocks.tring->name(id);
    auto it = tvals.find({nm.row, nm.col});
    if (it == tvals.end())
      throw std::invalid_argument("missing value for a chart coefficient");
    vals[id] = it->second;
  }
  Rat d = det.eval(vals, Rat(1));
  if (d == 0) return std::nullopt;
  std::map<std::pair<Exponent, Exponent>, Rat, PairAdminLess> out;
  for (const auto& [key, num] : numer) out[key] = num.eval(vals, Rat(1)) / d;
  return out;
}

nlohmann::json GluingMap::to_json() const {
  nlohmann::json j;
  j["delta"] = blocks.delta.to_json();
  j["eps"] = blocks.eps.to_json();
  j["determinant"] = coef_text(det, *blocks.tring);
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& [key, num] : numer) {
    nlohmann::json entry;
    entry["u_var"] = pair_json(key);
    entry["expression"] = coef_text(num, *blocks.tring);
    subs.push_back(std::move(entry));
  }
  j["substitutions"] = std::move(subs);
  return j;
}

StratumChartConditions stratum_in_chart(const StandardSet& delta,
                                        const StandardSet& eps,
                                        const TermOrder& order, bool reduced) {
  ChartBlocks cb = chart_blocks(delta, eps);
  Coef det = intersection_det(cb);
  std::vector<Exponent> killrows;
  if (reduced) {
    killrows = delta.corners();
  } else {
    for (const auto& a : cb.rows)
      if (!delta.contains(a)) killrows.push_back(a);
  }
  std::vector<std::pair<Exponent, Exponent>> kills;
  for (const auto& a : killrows)
    for (const auto& b : delta.elements())
      if (order.less(a, b)) kills.push_back({a, b});
  return StratumChartConditions{delta,           eps,
                                order,           cb.tring,
                                std::move(kills), std::move(det)};
}

nlohmann::json StratumChartConditions::to_json() const {
  nlohmann::json j;
  j["delta"] = delta.to_json();
  j["eps"] = eps.to_json();
  j["order"] = order.to_string();
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& p : kills) ks.push_back(pair_json(p));
  j["kills"] = std::move(ks);
  j["determinant"] = coef_text(det, *tring);
  return j;
}

}  // namespace gstrata
