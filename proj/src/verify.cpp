#include "gstrata/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gstrata/charts.hpp"
#include "gstrata/deform.hpp"
#include "gstrata/equations.hpp"
#include "gstrata/oracle.hpp"
#include "gstrata/textio.hpp"

namespace gstrata {

namespace {

std::string set_str(const StandardSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += exp_str(s.elements()[i]);
  }
  return out + "}";
}

const Coef& relation_coef(const Poly& p) {
  if (p.terms().size() != 1)
    throw std::logic_error("relation polynomial is not constant in x");
  return p.terms().begin()->second;
}

std::vector<Coef> relation_coefs(const EquationSet& es) {
  std::vector<Coef> out;
  out.reserve(es.gens.size());
  for (const auto& g : es.gens) out.push_back(relation_coef(g.poly));
  return out;
}

}  // namespace

void SuiteReport::fail(std::string msg) {
  pass = false;
  failures.push_back(std::move(msg));
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass;
  j["cases"] = cases;
  j["failures"] = failures;
  return j;
}

SuiteReport suite_golden() {
  SuiteReport rep{"golden"};
  StandardSet d(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EquationSet es = gen_full(d, d);
  auto v = [&](int r1, int r2, int c1, int c2) {
    auto id = es.ring->find({r1, r2}, {c1, c2});
    if (!id) throw std::logic_error("reference variable missing from ring");
    return Coef::var(*id);
  };
  // clang-format off
  std::vector<Coef> want_i2 = {
    v(1,2,0,0) - v(0,2,1,0)*v(2,0,0,0) - v(0,2,1,1)*v(2,1,0,0),
    v(1,2,1,0) - v(0,2,1,0)*v(2,0,1,0) - v(0,2,1,1)*v(2,1,1,0) - v(0,2,0,0),
    v(1,2,0,1) - v(0,2,1,0)*v(2,0,0,1) - v(0,2,1,1)*v(2,1,0,1),
    v(1,2,1,1) - v(0,2,1,0)*v(2,0,1,1) - v(0,2,1,1)*v(2,1,1,1) - v(0,2,0,1),
    v(2,1,0,0) - v(2,0,0,1)*v(0,2,0,0) - v(2,0,1,1)*v(1,2,0,0),
    v(2,1,1,0) - v(2,0,0,1)*v(0,2,1,0) - v(2,0,1,1)*v(1,2,1,0),
    v(2,1,0,1) - v(2,0,0,1)*v(0,2,0,1) - v(2,0,1,1)*v(1,2,0,1) - v(2,0,0,0),
    v(2,1,1,1) - v(2,0,0,1)*v(0,2,1,1) - v(2,0,1,1)*v(1,2,1,1) - v(2,0,1,0),
  };
  std::vector<Coef> want_i3 = {
    v(1,2,1,0)*v(2,0,0,0) + v(1,2,1,1)*v(2,1,0,0)
        - v(2,1,0,1)*v(0,2,0,0) - v(2,1,1,1)*v(1,2,0,0),
    v(1,2,1,0)*v(2,0,1,0) + v(1,2,1,1)*v(2,1,1,0) + v(1,2,0,0)
        - v(2,1,0,1)*v(0,2,1,0) - v(2,1,1,1)*v(1,2,1,0),
    v(1,2,1,0)*v(2,0,0,1) + v(1,2,1,1)*v(2,1,0,1)
        - v(2,1,0,1)*v(0,2,0,1) - v(2,1,1,1)*v(1,2,0,1) - v(2,1,0,0),
    v(1,2,1,0)*v(2,0,1,1) + v(1,2,1,1)*v(2,1,1,1) + v(1,2,0,1)
        - v(2,1,0,1)*v(0,2,1,1) - v(2,1,1,1)*v(1,2,1,1) - v(2,1,1,0),
  };
  // clang-format on
  auto check = [&](Label l, const std::vector<Coef>& want, const char* tag) {
    std::multiset<std::string> got_t, want_t;
    for (const auto& g : es.gens)
      if (g.label == l)
        got_t.insert(coef_text(relation_coef(g.poly), *es.ring));
    for (const auto& c : want) want_t.insert(coef_text(c, *es.ring));
    ++rep.cases;
    if (got_t == want_t) return;
    std::ostringstream msg;
    msg << tag << ": generated " << got_t.size() << " vs reference "
        << want_t.size();
    for (const auto& s : got_t)
      if (!want_t.count(s)) msg << "; extra " << s;
    for (const auto& s : want_t)
      if (!got_t.count(s)) msg << "; missing " << s;
    rep.fail(msg.str());
  };
  check(Label::I2, want_i2, "propagation");
  check(Label::I3, want_i3, "collision");
  return rep;
}

SuiteReport suite_fewer(int max_n, int max_r) {
  SuiteReport rep{"fewer"};
  auto run = [&](int n, int rmax) {
    for (int r = 1; r <= rmax; ++r)
      for (const auto& d : enumerate_standard_sets(n, r)) {
        EquationSet A = gen_full(d, d);
        EquationSet B = gen_fewer(d);
        ++rep.cases;
        if (!coef_ideal_equal(relation_coefs(A), *A.ring, relation_coefs(B),
                              *B.ring))
          rep.fail("ideals differ for " + set_str(d));
      }
  };
  run(2, std::min(max_r, 6));
  if (max_n >= 3) run(3, std::min(max_r, 5));
  return rep;
}

SuiteReport suite_gluing(int count, unsigned long seed) {
  SuiteReport rep{"gluing"};
  std::map<int, std::vector<StandardSet>> sets;
  std::map<std::tuple<int, size_t, size_t>, GluingMap> maps;
  for (int k = 0; k < count; ++k) {
    const int r = 2 + (k % 3);
    if (!sets.count(r)) sets.emplace(r, enumerate_standard_sets(2, r));
    const auto& cat = sets.at(r);
    PointConfiguration P = random_config(2, r, seed + (unsigned long)k);
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = 0; j < cat.size(); ++j) {
        if (i == j) continue;
        auto key = std::make_tuple(r, i, j);
        if (!maps.count(key)) maps.emplace(key, gluing_map(cat[i], cat[j]));
        const GluingMap& g = maps.at(key);
        auto tv = chart_coefficients(P, cat[i], g.blocks.rows);
        if (!tv) continue;
        auto direct = chart_coefficients(P, cat[j], g.blocks.rows);
        auto pushed = g.specialize(*tv);
        ++rep.cases;
        std::ostringstream id;
        id << "seed " << seed + (unsigned long)k << " " << set_str(cat[i])
           << " -> " << set_str(cat[j]);
        if (direct.has_value() != pushed.has_value()) {
          rep.fail(id.str() + ": determinant and chart membership disagree");
          continue;
        }
        if (!pushed) continue;
        for (const auto& [cell, val] : *pushed)
          if (direct->at(cell) != val) {
            rep.fail(id.str() + ": coefficient mismatch at (" +
                     exp_str(cell.first) + "," + exp_str(cell.second) + ")");
            break;
          }
      }
  }
  return rep;
}

SuiteReport suite_deform(int max_r) {
  SuiteReport rep{"deform"};
  TermOrder order = TermOrder::lex(2);
  const Exponent origin(2, 0);
  for (int r = 1; r <= std::min(max_r, 5); ++r)
    for (const auto& d : enumerate_standard_sets(2, r)) {
      ++rep.cases;
      try {
        DeformationData D = build_deformation(d, order);
        EquationSet S = gen_stratum(d, d, order);
        DeformationResult R = apply_deformation(S, D);
        std::map<int, Coef> zero;
        for (int id : R.killed) zero.emplace(id, Coef());
        size_t idx = 0;
        for (const auto& g : S.gens) {
          if (g.label == Label::Stratum) continue;
          Poly killed = g.poly.map_coefs(
              [&](const Coef& c) { return c.substitute(zero); });
          if (killed.terms().empty()) continue;
          const Poly& dg = R.eqs.gens.at(idx).poly;
          Poly at1 = dg.map_coefs(
              [&](const Coef& c) { return c.set_t(Rat(1)); });
          if (!(at1 == killed))
            rep.fail("t=1 does not restore a generator for " + set_str(d));
          Poly at0 = dg.map_coefs(
              [&](const Coef& c) { return c.set_t(Rat(0)); });
          if (!at0.terms().empty())
            rep.fail("t=0 leaves a generator alive for " + set_str(d));
          ++idx;
        }
        if (idx != R.eqs.gens.size())
          rep.fail("deformed generator count mismatch for " + set_str(d));
      } catch (const std::exception& e) {
        rep.fail(set_str(d) + ": " + e.what());
      }
    }
  return rep;
}

SuiteReport suite_strata(int count, int max_r, unsigned long seed) {
  SuiteReport rep{"strata"};
  TermOrder order = TermOrder::grevlex(2);
  std::map<int, std::vector<StandardSet>> sets;
  for (int k = 0; k < count; ++k) {
    const int r = 2 + (k % 4);
    if (!sets.count(r)) sets.emplace(r, enumerate_standard_sets(2, r));
    PointConfiguration P = random_config(2, r, seed + 1000 + (unsigned long)k);
    ++rep.cases;
    try {
      StandardSet d = classify_stratum(P, order);
      int hits = 0;
      for (const auto& eps : sets.at(r))
        if (stratum_certifies(P, eps, order)) {
          ++hits;
          if (!(eps == d))
            rep.fail("certified against a foreign stratum, seed " +
                     std::to_string(seed + 1000 + k));
        }
      if (hits != 1)
        rep.fail("certified " + std::to_string(hits) +
                 " strata, seed " + std::to_string(seed + 1000 + k));
    } catch (const std::exception& e) {
      rep.fail("seed " + std::to_string(seed + 1000 + k) + ": " + e.what());
    }
  }
  for (int r = 1; r <= std::min(max_r, 5); ++r)
    for (const auto& eps : enumerate_standard_sets(2, r)) {
      ++rep.cases;
      PointConfiguration P = grid_config(eps, seed);
      PointIdeal pi = point_ideal(P, order);
      if (!(pi.delta == eps))
        rep.fail("grid of " + set_str(eps) + " classified as " +
                 set_str(pi.delta));
    }
  return rep;
}

SuiteReport run_suite(const std::string& name, int max_n, int max_r,
                      unsigned long seed) {
  if (name == "golden") return suite_golden();
  if (name == "fewer") return suite_fewer(max_n, max_r);
  if (name == "gluing") return suite_gluing(20, seed);
  if (name == "deform") return suite_deform(max_r);
  if (name == "strata") return suite_strata(100, max_r, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gstrata
