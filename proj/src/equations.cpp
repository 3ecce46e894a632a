#include "gstrata/equations.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gstrata/textio.hpp"

namespace gstrata {

std::string label_str(Label l) {
  switch (l) {
    case Label::I1: return "I1";
    case Label::I2: return "I2";
    case Label::I3: return "I3";
    case Label::I3e: return "I3e";
    case Label::Stratum: return "STRATUM";
    case Label::Minimal: return "MINIMAL";
    case Label::Universal: return "UNIVERSAL";
    case Label::Homog: return "HOMOG";
  }
  return "?";
}

nlohmann::json Provenance::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (alpha) j["alpha"] = *alpha;
  if (lambda) j["lambda"] = *lambda;
  if (alpha2) j["alpha2"] = *alpha2;
  if (lambda2) j["lambda2"] = *lambda2;
  if (beta) j["beta"] = *beta;
  if (eps) j["eps"] = *eps;
  if (plane) j["plane"] = {plane->first + 1, plane->second + 1};
  if (!principal) j["principal"] = false;
  return j;
}

namespace {

// coefficient accessor: (row, col) -> Coef
using Cf = std::function<Coef(const Exponent&, const Exponent&)>;

Cf make_cf(const StandardSet& delta, ParamRingPtr ring, bool substitution) {
  return [&delta, ring, substitution](const Exponent& row,
                                      const Exponent& col) -> Coef {
    if (substitution && delta.contains(row))
      return row == col ? Coef::one() : Coef();
    return Coef::var(ring->var(row, col));
  };
}

Poly relation_poly(int n, const Coef& c) {
  return Poly::term(Exponent(n, 0), c);
}

// T_{a+l,b} - sum_g T_{a,g} T_{g+l,b}
Coef i2_combo(const StandardSet& delta, const Exponent& a, const Exponent& l,
              const Exponent& b, const Cf& cf) {
  Coef total = cf(exp_add(a, l), b);
  for (const auto& g : delta.elements())
    total = total - cf(a, g) * cf(exp_add(g, l), b);
  return total;
}

// sum_g T_{a,g} T_{g+l,b} - sum_g T_{a2,g} T_{g+l2,b}
Coef i3_combo(const StandardSet& delta, const Exponent& a, const Exponent& l,
              const Exponent& a2, const Exponent& l2, const Exponent& b,
              const Cf& cf) {
  Coef total;
  for (const auto& g : delta.elements()) {
    total = total + cf(a, g) * cf(exp_add(g, l), b);
    total = total - cf(a2, g) * cf(exp_add(g, l2), b);
  }
  return total;
}

EquationSet base_set(const StandardSet& delta, const StandardSet& rows,
                     std::string mode, bool substitution) {
  if (delta.n() != rows.n())
    throw std::invalid_argument("row set dimension mismatch");
  for (const auto& e : delta.elements())
    if (!rows.contains(e))
      throw std::invalid_argument("row set does not contain the staircase");
  EquationSet es{std::make_shared<ParamRing>(), delta, rows, std::nullopt,
                 std::move(mode),  substitution,  {},   {},   {},
                 {}};
  return es;
}

void append_I2(EquationSet& es, const Cf& cf) {
  const auto& d = es.delta;
  const auto& rows = es.rows;
  std::set<Exponent, AdminLess> pool(rows.elements().begin(),
                                     rows.elements().end());
  for (const auto& b : rows.border()) pool.insert(b);
  for (const auto& a : pool) {
    if (es.substitution && d.contains(a)) continue;  // trivialized by I1
    for (int i = 0; i < d.n(); ++i) {
      Exponent l = unit_exp(d.n(), i);
      Exponent al = exp_add(a, l);
      if (!pool.count(al)) continue;
      Provenance cls;
      cls.alpha = a;
      cls.lambda = l;
      es.classes.push_back({Label::I2, cls});
      for (const auto& b : d.elements()) {
        Coef g = i2_combo(d, a, l, b, cf);
        if (g.is_zero()) continue;
        Provenance p = cls;
        p.beta = b;
        es.gens.push_back({Label::I2, std::move(p), relation_poly(d.n(), g)});
      }
    }
  }
}

void append_I3(EquationSet& es, const Cf& cf) {
  const auto& d = es.delta;
  auto n1 = es.rows.border();
  std::set<Exponent, AdminLess> n1set(n1.begin(), n1.end());
  auto n2 = es.rows.iterated_border(2);
  for (const auto& target : n2) {
    // representations target = a + e_i with a in N^(1)
    std::vector<std::pair<Exponent, Exponent>> reps;  // (a, lambda)
    for (int i = 0; i < d.n(); ++i) {
      auto a = exp_sub(target, unit_exp(d.n(), i));
      if (a && n1set.count(*a)) reps.push_back({*a, unit_exp(d.n(), i)});
    }
    for (size_t u = 0; u < reps.size(); ++u)
      for (size_t v = u + 1; v < reps.size(); ++v) {
        // canonical orientation: admin-smaller row first, positive
        auto [a, l] = reps[u];
        auto [a2, l2] = reps[v];
        if (admin_less(a2, a)) {
          std::swap(a, a2);
          std::swap(l, l2);
        }
        Provenance cls;
        cls.alpha = a;
        cls.lambda = l;
        cls.alpha2 = a2;
        cls.lambda2 = l2;
        es.classes.push_back({Label::I3, cls});
        for (const auto& b : d.elements()) {
          Coef g = i3_combo(d, a, l, a2, l2, b, cf);
          if (g.is_zero()) continue;
          Provenance p = cls;
          p.beta = b;
          es.gens.push_back({Label::I3, std::move(p), relation_poly(d.n(), g)});
        }
      }
  }
}

void append_I3e(EquationSet& es, const Cf& cf) {
  const auto& d = es.delta;
  for (const auto& ec : edge_classes(d)) {
    Exponent l = unit_exp(d.n(), ec.i);   // lambda
    Exponent l2 = unit_exp(d.n(), ec.j);  // lambda'
    Exponent a = exp_add(ec.eps, l2);     // first (admin-smaller) row
    Exponent a2 = exp_add(ec.eps, l);
    Provenance cls;
    cls.eps = ec.eps;
    cls.plane = std::make_pair(ec.i, ec.j);
    cls.principal = ec.principal;
    cls.alpha = a;
    cls.lambda = l;
    cls.alpha2 = a2;
    cls.lambda2 = l2;
    es.classes.push_back({Label::I3e, cls});
    for (const auto& b : d.elements()) {
      Coef g = i3_combo(d, a, l, a2, l2, b, cf);
      if (g.is_zero()) continue;
      Provenance p = cls;
      p.beta = b;
      es.gens.push_back({Label::I3e, std::move(p), relation_poly(d.n(), g)});
    }
  }
}

}  // namespace

std::vector<EdgeClass> edge_classes(const StandardSet& delta) {
  // One commutation class per root eps in delta and axis pair i<j whose two
  // unit steps both leave delta.  A class is principal when the support of
  // eps fills the plane of the pair (for n = 2 that is every class);
  // principal classes are exactly the ones indexed by edge points.  The
  // auxiliary classes cannot be dropped for n >= 3: for
  // delta = {0,e1,e2,e3} the point with T_{2e1,e1} = T_{e2+e3,e1} = 1 and
  // every other coordinate zero satisfies every plane-supported relation yet
  // breaks commutativity of the e1- and e2-multiplications at the row e3,
  // so the relation rooted there is not implied.
  std::vector<EdgeClass> out;
  int n = delta.n();
  for (const auto& e : delta.elements())
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Exponent ui = e, uj = e;
        ++ui[i];
        ++uj[j];
        if (delta.contains(ui) || delta.contains(uj)) continue;
        bool principal = n == 2 || (e[i] > 0 && e[j] > 0);
        for (int k = 0; k < n; ++k)
          if (e[k] != 0 && k != i && k != j) principal = false;
        out.push_back({e, i, j, principal});
      }
  return out;
}

EquationSet gen_I1(const StandardSet& delta, const StandardSet& rows,
                   bool substitution) {
  EquationSet es = base_set(delta, rows, "I1", substitution);
  for (const auto& a : rows.elements())
    for (const auto& b : delta.elements()) {
      Coef val = a == b ? Coef::one() : Coef();
      if (substitution) {
        es.rewrites.push_back({a, b, val});
      } else {
        Coef g = Coef::var(es.ring->var(a, b)) - val;
        Provenance p;
        p.alpha = a;
        p.beta = b;
        es.gens.push_back({Label::I1, std::move(p), relation_poly(delta.n(), g)});
      }
    }
  return es;
}

EquationSet gen_I2(const StandardSet& delta, const StandardSet& rows,
                   bool substitution) {
  EquationSet es = base_set(delta, rows, "I2", substitution);
  append_I2(es, make_cf(delta, es.ring, substitution));
  return es;
}

EquationSet gen_I3(const StandardSet& delta, const StandardSet& rows,
                   bool substitution) {
  EquationSet es = base_set(delta, rows, "I3", substitution);
  append_I3(es, make_cf(delta, es.ring, substitution));
  return es;
}

EquationSet gen_I3e(const StandardSet& delta, bool substitution) {
  EquationSet es = base_set(delta, delta, "I3e", substitution);
  append_I3e(es, make_cf(delta, es.ring, substitution));
  return es;
}

EquationSet gen_full(const StandardSet& delta, const StandardSet& rows,
                     bool substitution) {
  EquationSet es = base_set(delta, rows, "full", substitution);
  Cf cf = make_cf(delta, es.ring, substitution);
  if (!substitution) {
    for (const auto& a : rows.elements())
      for (const auto& b : delta.elements()) {
        Coef g = Coef::var(es.ring->var(a, b)) -
                 (a == b ? Coef::one() : Coef());
        Provenance p;
        p.alpha = a;
        p.beta = b;
        es.gens.push_back({Label::I1, std::move(p), relation_poly(delta.n(), g)});
      }
  }
  append_I2(es, cf);
  append_I3(es, cf);
  return es;
}

EquationSet gen_fewer(const StandardSet& delta, bool substitution) {
  EquationSet es = base_set(delta, delta, "fewer", substitution);
  Cf cf = make_cf(delta, es.ring, substitution);
  append_I2(es, cf);
  append_I3e(es, cf);
  return es;
}

EquationSet gen_stratum(const StandardSet& delta, const StandardSet& rows,
                        const TermOrder& order, bool reduced) {
  EquationSet es = base_set(delta, rows, reduced ? "stratum-reduced" : "stratum",
                            true);
  es.order = order;
  Cf cf = make_cf(delta, es.ring, true);
  append_I2(es, cf);
  append_I3(es, cf);
  std::vector<Exponent> killrows;
  if (reduced) {
    killrows = delta.corners();
  } else {
    std::set<Exponent, AdminLess> pool(rows.elements().begin(),
                                       rows.elements().end());
    for (const auto& b : rows.border()) pool.insert(b);
    for (const auto& a : pool)
      if (!delta.contains(a)) killrows.push_back(a);
  }
  for (const auto& a : killrows)
    for (const auto& b : delta.elements()) {
      if (!order.less(a, b)) continue;
      Provenance p;
      p.alpha = a;
      p.beta = b;
      es.gens.push_back({Label::Stratum, std::move(p),
                         relation_poly(delta.n(), Coef::var(es.ring->var(a, b)))});
    }
  return es;
}

EquationSet gen_minimal(const StandardSet& delta, const TermOrder& order) {
  EquationSet es = base_set(delta, delta, "minimal", true);
  es.order = order;
  const int n = delta.n();
  std::set<Exponent, AdminLess> corners(delta.corners().begin(),
                                        delta.corners().end());
  std::set<Exponent, AdminLess> borderset(delta.border().begin(),
                                          delta.border().end());
  // ambient variables: corner rows, strictly above their column
  for (const auto& a : delta.corners())
    for (const auto& b : delta.elements())
      if (order.greater(a, b)) es.ambient_vars.push_back(es.ring->var(a, b));

  std::map<std::pair<Exponent, Exponent>, Coef, PairAdminLess> expr;
  for (const auto& a : delta.corners())
    for (const auto& b : delta.elements())
      expr[{a, b}] =
          order.greater(a, b) ? Coef::var(*es.ring->find(a, b)) : Coef();

  std::vector<Exponent> gamma;
  for (const auto& a : delta.border())
    if (!corners.count(a)) gamma.push_back(a);
  std::sort(gamma.begin(), gamma.end(),
            [&](const Exponent& x, const Exponent& y) {
              return order.less(x, y);
            });
  for (const auto& a : gamma) {
    int nu = -1;
    for (int i = 0; i < n; ++i) {
      auto down = exp_sub(a, unit_exp(n, i));
      if (down && borderset.count(*down)) {
        nu = i;
        break;
      }
    }
    if (nu < 0)
      throw std::logic_error("border element without border predecessor");
    Exponent step = unit_exp(n, nu);
    Exponent down = *exp_sub(a, step);
    for (const auto& b : delta.elements()) {
      Coef total;
      for (const auto& g : delta.elements()) {
        Exponent gs = exp_add(g, step);
        const Coef& fa = expr.at({down, g});  // T_{a-nu, g}
        if (fa.is_zero()) continue;
        if (delta.contains(gs)) {
          if (gs == b) total = total + fa;  // Kronecker clause
          continue;
        }
        if (!order.greater(gs, b)) continue;
        const Coef& fb = expr.at({gs, b});
        if (fb.is_zero()) continue;
        total = total + fa * fb;
      }
      expr[{a, b}] = total;
      es.rewrites.push_back({a, b, total});
    }
  }

  Cf cf = [&delta, &expr](const Exponent& row, const Exponent& col) -> Coef {
    if (delta.contains(row)) return row == col ? Coef::one() : Coef();
    return expr.at({row, col});
  };
  append_I2(es, cf);
  append_I3e(es, cf);
  for (auto& g : es.gens)
    g.label = Label::Minimal;
  return es;
}

EquationSet gen_universal(const StandardSet& delta, const StandardSet& rows,
                          bool groebner_mode, const TermOrder* order) {
  if (groebner_mode && !order)
    throw std::invalid_argument("groebner mode requires a term order");
  EquationSet es = base_set(delta, rows, groebner_mode ? "universal-groebner"
                                                       : "universal-border",
                            true);
  if (order) es.order = *order;
  std::vector<Exponent> heads;
  if (groebner_mode) {
    heads = delta.corners();
  } else {
    std::set<Exponent, AdminLess> pool(rows.elements().begin(),
                                       rows.elements().end());
    for (const auto& b : rows.border()) pool.insert(b);
    for (const auto& a : pool)
      if (!delta.contains(a)) heads.push_back(a);
  }
  for (const auto& a : heads) {
    Poly g = Poly::term(a, Coef::one());
    for (const auto& b : delta.elements()) {
      if (groebner_mode && !order->less(b, a)) continue;
      g = g - Poly::term(b, Coef::var(es.ring->var(a, b)));
    }
    Provenance p;
    p.alpha = a;
    es.gens.push_back({Label::Universal, std::move(p), std::move(g)});
  }
  return es;
}

EquationSet gen_homogeneous_restriction(const StandardSet& delta,
                                        const std::vector<long>& ell) {
  if (static_cast<int>(ell.size()) != delta.n())
    throw std::invalid_argument("weight vector dimension mismatch");
  EquationSet es = base_set(delta, delta, "homog", true);
  auto weight = [&ell](const Exponent& e) {
    long w = 0;
    for (size_t i = 0; i < ell.size(); ++i) w += ell[i] * e[i];
    return w;
  };
  for (const auto& a : delta.border())
    for (const auto& b : delta.elements()) {
      if (weight(a) == weight(b)) continue;
      Provenance p;
      p.alpha = a;
      p.beta = b;
      es.gens.push_back({Label::Homog, std::move(p),
                         relation_poly(delta.n(), Coef::var(es.ring->var(a, b)))});
    }
  return es;
}

FamilyMap symbolic_corner_family(const StandardSet& delta, ParamRingPtr ring,
                                 const TermOrder* order) {
  FamilyMap fam;
  for (const auto& a : delta.corners()) {
    Poly g = Poly::term(a, Coef::one());
    for (const auto& b : delta.elements()) {
      if (order && !order->less(b, a)) continue;
      g = g - Poly::term(b, Coef::var(ring->var(a, b)));
    }
    fam.emplace(a, std::move(g));
  }
  return fam;
}

int EquationSet::count(Label l) const {
  int c = 0;
  for (const auto& g : gens)
    if (g.label == l) ++c;
  return c;
}

int EquationSet::class_count(Label l, bool principal_only) const {
  int c = 0;
  for (const auto& [lab, p] : classes)
    if (lab == l && (!principal_only || p.principal)) ++c;
  return c;
}

nlohmann::json EquationSet::to_json() const {
  nlohmann::json j;
  j["delta"] = delta.to_json();
  if (order) {
    j["order"] = order->to_string();
    auto v = order->vars_string();
    if (!v.empty()) j["vars"] = v;
  } else {
    j["order"] = nullptr;
  }
  j["mode"] = mode;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : gens) {
    nlohmann::json item;
    item["label"] = label_str(g.label);
    item["provenance"] = g.prov.to_json();
    item["poly"] = poly_text(g.poly, *ring);
    j["generators"].push_back(std::move(item));
  }
  if (!classes.empty()) {
    j["classes"] = nlohmann::json::array();
    for (const auto& [lab, p] : classes) {
      nlohmann::json item;
      item["label"] = label_str(lab);
      item["provenance"] = p.to_json();
      j["classes"].push_back(std::move(item));
    }
  }
  if (!rewrites.empty()) {
    j["rewrites"] = nlohmann::json::array();
    for (const auto& [a, b, c] : rewrites) {
      nlohmann::json item;
      item["t_var"] = {a, b};
      item["expression"] = coef_text(c, *ring);
      j["rewrites"].push_back(std::move(item));
    }
  }
  if (!ambient_vars.empty()) {
    j["ambient_vars"] = nlohmann::json::array();
    for (int id : ambient_vars) {
      const auto& nm = ring->name(id);
      j["ambient_vars"].push_back({nm.row, nm.col});
    }
  }
  return j;
}

std::string EquationSet::to_cas() const {
  // collect variables appearing in the generators, name-sorted
  std::set<int> used;
  for (const auto& g : gens)
    for (const auto& [e, c] : g.poly.terms())
      for (const auto& [mono, r] : c.terms())
        for (const auto& [id, ex] : mono.t) used.insert(id);
  std::vector<int> ids(used.begin(), used.end());
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const auto& na = ring->name(a);
    const auto& nb = ring->name(b);
    if (na.row != nb.row) return admin_less(na.row, nb.row);
    return admin_less(na.col, nb.col);
  });
  std::string out = "-- " + mode + " equations, staircase of size " +
                    std::to_string(delta.size()) + "\n";
  if (ids.empty()) {
    out += "-- no parameter variables; generator list:\n";
  } else {
    out += "R = QQ[";
    for (size_t k = 0; k < ids.size(); ++k) {
      if (k) out += ", ";
      out += var_cas(*ring, ids[k]);
    }
    out += "]\n";
  }
  out += "I = ideal(\n";
  bool first = true;
  for (const auto& g : gens) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + poly_cas(g.poly, *ring);
  }
  if (first) out += "  0";
  out += "\n)\n";
  return out;
}

}  // namespace gstrata
