#pragma once

#include <gmpxx.h>

#include <string>

namespace gstrata {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "a", "a/b", or decimal "1.25" (converted exactly).
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace gstrata
