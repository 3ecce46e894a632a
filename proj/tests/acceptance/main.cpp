// Acceptance gate: every release criterion runs here, one line per check.
// Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gstrata/equations.hpp"
#include "gstrata/order.hpp"
#include "gstrata/staircase.hpp"
#include "gstrata/verify.hpp"

namespace {

using namespace gstrata;

int failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void criterion(const std::string& name, long budget_ms,
               const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (budget_ms > 0 && ms > budget_ms) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over ") +
                  std::to_string(budget_ms) + " ms budget";
  }
  std::printf("%s  %-28s %s(%ld ms)\n", out.ok ? "PASS" : "FAIL", name.c_str(),
              out.detail.empty() ? "" : (out.detail + " ").c_str(), ms);
  if (!out.ok) ++failures;
}

Outcome from_report(const SuiteReport& r) {
  std::string d = std::to_string(r.cases) + " cases";
  if (!r.pass) {
    d += "; first failure: " + (r.failures.empty() ? "?" : r.failures[0]);
  }
  return {r.pass, d};
}

StandardSet columns2(const std::vector<int>& h) {
  std::vector<Exponent> elems;
  for (int x = 0; x < (int)h.size(); ++x)
    for (int y = 0; y < h[x]; ++y) elems.push_back({x, y});
  return StandardSet(2, std::move(elems));
}

}  // namespace

int main() {
  // the printed presentation of the 2x2 square is reproduced symbolically
  criterion("square-presentation", 1000,
            [] { return from_report(suite_golden()); });

  // full and reduced relation ideals agree over the whole small catalog
  criterion("reduced-relations-catalog", 600000,
            [] { return from_report(suite_fewer(3, 6)); });

  // minimal embedding of an axis segment is an affine cell: r*n ambient
  // coordinates, no relations
  criterion("axis-affine-cell", 60000, [] {
    int checked = 0;
    for (int n = 1; n <= 3; ++n) {
      std::string rev;
      for (int v = n; v >= 1; --v) rev += (rev.empty() ? "" : ",") + std::to_string(v);
      TermOrder order = TermOrder::parse("lex", n, rev);
      for (int r = 1; r <= 4; ++r) {
        std::vector<Exponent> elems;
        for (int i = 0; i < r; ++i) {
          Exponent e(n, 0);
          e[0] = i;
          elems.push_back(e);
        }
        EquationSet es = gen_minimal(StandardSet(n, std::move(elems)), order);
        if ((int)es.ambient_vars.size() != r * n)
          return Outcome{false, "ambient count off at n=" + std::to_string(n) +
                                    " r=" + std::to_string(r)};
        if (!es.gens.empty())
          return Outcome{false, "relations left at n=" + std::to_string(n) +
                                    " r=" + std::to_string(r)};
        ++checked;
      }
    }
    return Outcome{true, std::to_string(checked) + " cases"};
  });

  // reduced class counts of the two reference sets with edge points
  criterion("edge-class-counts", 0, [] {
    EquationSet wide = gen_fewer(columns2({5, 5, 2, 2, 2}));
    if (wide.class_count(Label::I2) != 6)
      return Outcome{false, "wide set: expected 6 propagation classes, got " +
                                std::to_string(wide.class_count(Label::I2))};
    if (wide.class_count(Label::I3e) != 2)
      return Outcome{false, "wide set: expected 2 edge classes, got " +
                                std::to_string(wide.class_count(Label::I3e))};
    std::vector<Exponent> elems;
    auto col = [&](int x, int y, int h) {
      for (int z = 0; z < h; ++z) elems.push_back({x, y, z});
    };
    col(0, 0, 7); col(0, 1, 2); col(0, 2, 2); col(0, 3, 2); col(0, 4, 2);
    col(0, 5, 1); col(0, 6, 1); col(1, 0, 5); col(1, 1, 1);
    EquationSet tall = gen_fewer(StandardSet(3, std::move(elems)));
    if (tall.class_count(Label::I2) != 30)
      return Outcome{false, "tall set: expected 30 propagation classes, got " +
                                std::to_string(tall.class_count(Label::I2))};
    if (tall.class_count(Label::I3e) != 3)
      return Outcome{false, "tall set: expected 3 edge classes, got " +
                                std::to_string(tall.class_count(Label::I3e))};
    return Outcome{true, "2 cases"};
  });

  // chart coefficients pushed through the gluing substitution match the
  // directly computed ones on seeded configurations
  criterion("chart-gluing-roundtrip", 60000,
            [] { return from_report(suite_gluing(20, 7)); });

  // every deformed stratum generator is weighted homogeneous with positive
  // weight; t = 1 and t = 0 behave as the two ends of the degeneration
  criterion("deformation-homogeneity", 0,
            [] { return from_report(suite_deform(5)); });

  // random points certify against exactly one stratum; grid realizations
  // recover their defining staircase
  criterion("point-stratification", 0,
            [] { return from_report(suite_strata(100, 5, 7)); });

  // staircase enumeration matches the partition numbers in the plane and
  // the brute-force count in space
  criterion("staircase-enumeration", 0, [] {
    const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int r = 1; r <= 10; ++r)
      if ((int)enumerate_standard_sets(2, r).size() != expected[r - 1])
        return Outcome{false, "plane count off at r=" + std::to_string(r)};
    if (enumerate_standard_sets(3, 3).size() != 6)
      return Outcome{false, "space count off at r=3"};
    return Outcome{true, "11 cases"};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS",
              failures);
  return failures ? 1 : 0;
}
