#include "gstrata/deform.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "gstrata/textio.hpp"

namespace gstrata {

namespace {

// id of the single variable of a triangularity generator, nullopt otherwise
std::optional<int> kill_var(const Poly& p) {
  if (p.terms().size() != 1) return std::nullopt;
  const Coef& c = p.terms().begin()->second;
  if (c.terms().size() != 1) return std::nullopt;
  const auto& [mono, r] = c.terms()[0];
  if (mono.w != 0 || mono.t.size() != 1 || mono.t[0].second != 1)
    return std::nullopt;
  return mono.t[0].first;
}

// the single t-power of a coefficient polynomial; nullopt when mixed
std::optional<int> uniform_tpow(const Poly& p, std::optional<int> seen) {
  for (const auto& [xe, c] : p.terms())
    for (const auto& [mono, r] : c.terms()) {
      if (seen && *seen != mono.w) return std::nullopt;
      seen = mono.w;
    }
  return seen ? seen : std::optional<int>(0);
}

}  // namespace

long DeformationData::weight(const Exponent& a) const {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += ell[i] * a[i];
  return s;
}

nlohmann::json DeformationData::to_json() const {
  nlohmann::json j;
  j["delta"] = delta.to_json();
  j["ell"] = ell;
  return j;
}

DeformationData build_deformation(const StandardSet& delta,
                                  const TermOrder& order) {
  std::vector<std::pair<Exponent, Exponent>> pairs;
  for (const auto& a : delta.border())
    for (const auto& b : delta.elements())
      if (order.greater(a, b)) pairs.push_back({a, b});
  auto ell = find_separating_weight(delta.n(), pairs);
  if (!ell)
    throw std::logic_error(
        "no separating weight found for an order-induced pair set");
  return DeformationData{delta, std::move(*ell)};
}

DeformationResult apply_deformation(const EquationSet& E,
                                    const DeformationData& D) {
  if (!(E.delta == D.delta))
    throw std::invalid_argument("deformation built for a different set");
  const ParamRing& ring = *E.ring;

  std::map<int, Coef> zero;
  std::vector<int> killed;
  for (const auto& g : E.gens) {
    if (g.label != Label::Stratum) continue;
    auto id = kill_var(g.poly);
    if (!id) throw std::logic_error("triangularity generator has extra terms");
    zero.emplace(*id, Coef());
    killed.push_back(*id);
  }
  auto shift = [&](int id) {
    const auto& nm = ring.name(id);
    return D.weight(nm.row) - D.weight(nm.col);
  };

  EquationSet out = E;
  out.mode = "deformed-" + E.mode;
  out.gens.clear();
  std::vector<long> weights;
  for (const auto& g : E.gens) {
    if (g.label == Label::Stratum) continue;
    Poly p = g.poly.map_coefs(
        [&](const Coef& c) { return c.substitute(zero); });
    if (p.terms().empty()) continue;
    if (p.terms().size() != 1 || p.terms().begin()->first !=
                                     Exponent(E.delta.n(), 0))
      throw std::invalid_argument(
          "deformation weights apply to relation presentations only");
    p = p.map_coefs([&](const Coef& c) { return c.shift_t(shift); });
    auto w = uniform_tpow(p, std::nullopt);
    if (!w)
      throw std::logic_error("generator is not weighted homogeneous");
    if (*w <= 0)
      throw std::logic_error("deformation weight is not positive");
    out.gens.push_back({g.label, g.prov, std::move(p)});
    weights.push_back(*w);
  }
  for (auto& [a, b, c] : out.rewrites)
    c = c.substitute(zero).shift_t(shift);
  return DeformationResult{std::move(out), std::move(weights),
                           std::move(killed)};
}

FamilyMap deform_family(const FamilyMap& family, const ParamRing& ring,
                        const DeformationData& D) {
  auto shift = [&](int id) {
    const auto& nm = ring.name(id);
    return D.weight(nm.row) - D.weight(nm.col);
  };
  FamilyMap out;
  for (const auto& [a, p] : family)
    out.emplace(a, p.map_coefs([&](const Coef& c) { return c.shift_t(shift); }));
  return out;
}

nlohmann::json DeformationResult::to_json() const {
  nlohmann::json j;
  j["delta"] = eqs.delta.to_json();
  nlohmann::json ks = nlohmann::json::array();
  for (int id : killed) {
    const auto& nm = eqs.ring->name(id);
    ks.push_back(nlohmann::json::array({nm.row, nm.col}));
  }
  j["killed"] = std::move(ks);
  nlohmann::json gens = nlohmann::json::array();
  for (size_t i = 0; i < eqs.gens.size(); ++i) {
    nlohmann::json e;
    e["label"] = label_str(eqs.gens[i].label);
    e["weight"] = weights[i];
    e["poly"] = poly_text(eqs.gens[i].poly, *eqs.ring);
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace gstrata
