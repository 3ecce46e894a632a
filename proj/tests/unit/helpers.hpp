#pragma once

#include <map>
#include <vector>

#include "gstrata/staircase.hpp"

namespace gstrata::testutil {

// n = 2 staircase from column heights h[x] (height 0 columns must be absent).
inline StandardSet columns2(const std::vector<int>& h) {
  std::vector<Exponent> elems;
  for (int x = 0; x < static_cast<int>(h.size()); ++x)
    for (int y = 0; y < h[x]; ++y) elems.push_back({x, y});
  return StandardSet(2, std::move(elems));
}

// n = 3 staircase from column heights over base positions (x1, x2).
inline StandardSet columns3(const std::map<std::pair<int, int>, int>& h) {
  std::vector<Exponent> elems;
  for (const auto& [xy, height] : h)
    for (int z = 0; z < height; ++z)
      elems.push_back({xy.first, xy.second, z});
  return StandardSet(3, std::move(elems));
}

inline StandardSet square() { return columns2({2, 2}); }

// 16-element set with corners (2,2), (0,5), (5,0) and edge points (1,4), (4,1)
inline StandardSet wide16() { return columns2({5, 5, 2, 2, 2}); }

// 23-element n = 3 set with edge points (1,1,0), (0,4,1), (1,0,4)
inline StandardSet tall23() {
  return columns3({{{0, 0}, 7},
                   {{0, 1}, 2},
                   {{0, 2}, 2},
                   {{0, 3}, 2},
                   {{0, 4}, 2},
                   {{0, 5}, 1},
                   {{0, 6}, 1},
                   {{1, 0}, 5},
                   {{1, 1}, 1}});
}

inline StandardSet tetrahedron() {
  return StandardSet(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

// segment {0, ..., r-1} on the line
inline StandardSet segment(int r) {
  std::vector<Exponent> elems;
  for (int i = 0; i < r; ++i) elems.push_back({i});
  return StandardSet(1, std::move(elems));
}

// axis-aligned set {0, e_1, 2 e_1, ..., (r-1) e_1} in N^n
inline StandardSet axis(int n, int r) {
  std::vector<Exponent> elems;
  for (int i = 0; i < r; ++i) {
    Exponent e(n, 0);
    e[0] = i;
    elems.push_back(e);
  }
  return StandardSet(n, std::move(elems));
}

}  // namespace gstrata::testutil
