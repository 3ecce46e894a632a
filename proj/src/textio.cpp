#include "gstrata/textio.hpp"

#include <algorithm>
#include <tuple>

namespace gstrata {

namespace {

struct Piece {
  Exponent xe;
  PMono mono;
  Rat c;
};

// name-based sort key for a T-monomial: degree, then (row,col,exp) sequence
using MonoKey = std::pair<int, std::vector<std::tuple<Exponent, Exponent, int>>>;

MonoKey mono_key(const PMono& m, const ParamRing& ring) {
  std::vector<std::tuple<Exponent, Exponent, int>> seq;
  int deg = m.w;
  for (const auto& [id, e] : m.t) {
    const auto& nm = ring.name(id);
    seq.push_back({nm.row, nm.col, e});
    deg += e;
  }
  std::sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b))
      return admin_less(std::get<0>(a), std::get<0>(b));
    if (std::get<1>(a) != std::get<1>(b))
      return admin_less(std::get<1>(a), std::get<1>(b));
    return std::get<2>(a) < std::get<2>(b);
  });
  return {deg, std::move(seq)};
}

bool mono_key_less(const MonoKey& a, const MonoKey& b) {
  if (a.first != b.first) return a.first < b.first;
  const auto& sa = a.second;
  const auto& sb = b.second;
  return std::lexicographical_compare(
      sa.begin(), sa.end(), sb.begin(), sb.end(),
      [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y))
          return admin_less(std::get<0>(x), std::get<0>(y));
        if (std::get<1>(x) != std::get<1>(y))
          return admin_less(std::get<1>(x), std::get<1>(y));
        return std::get<2>(x) < std::get<2>(y);
      });
}

std::string tuple_str(const Exponent& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string render(const std::vector<Piece>& pieces, const ParamRing& ring,
                   bool cas) {
  if (pieces.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < pieces.size(); ++k) {
    const auto& p = pieces[k];
    bool neg = p.c < 0;
    Rat mag = neg ? Rat(-p.c) : p.c;
    if (k == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::vector<std::string> factors;
    bool unit_mono = true;
    for (size_t i = 0; i < p.xe.size(); ++i)
      if (p.xe[i] > 0) {
        unit_mono = false;
        std::string f = "x" + std::to_string(i + 1);
        if (p.xe[i] > 1) f += "^" + std::to_string(p.xe[i]);
        factors.push_back(f);
      }
    // T-variables in name order
    std::vector<std::pair<int, int>> tv = p.mono.t;
    std::sort(tv.begin(), tv.end(), [&](const auto& a, const auto& b) {
      const auto& na = ring.name(a.first);
      const auto& nb = ring.name(b.first);
      if (na.row != nb.row) return admin_less(na.row, nb.row);
      return admin_less(na.col, nb.col);
    });
    for (const auto& [id, e] : tv) {
      unit_mono = false;
      const auto& nm = ring.name(id);
      std::string f;
      if (cas) {
        f = "T";
        for (int c : nm.row) f += "_" + std::to_string(c);
        f += "_";
        for (int c : nm.col) f += "_" + std::to_string(c);
      } else {
        f = "T[" + tuple_str(nm.row) + "|" + tuple_str(nm.col) + "]";
      }
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    if (p.mono.w > 0) {
      unit_mono = false;
      std::string f = "t";
      if (p.mono.w > 1) f += "^" + std::to_string(p.mono.w);
      factors.push_back(f);
    }
    std::string body;
    if (unit_mono) {
      body = mag.get_str();
    } else {
      if (mag != 1) body = mag.get_str() + "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) body += "*";
        body += factors[i];
      }
    }
    out += body;
  }
  return out;
}

std::string serialize(const Poly& p, const ParamRing& ring, bool cas) {
  std::vector<Piece> pieces;
  for (const auto& [xe, coef] : p.terms())
    for (const auto& [mono, c] : coef.terms())
      pieces.push_back(Piece{xe, mono, c});
  std::stable_sort(pieces.begin(), pieces.end(),
                   [&](const Piece& a, const Piece& b) {
                     if (a.xe != b.xe) return admin_less(b.xe, a.xe);  // desc
                     return mono_key_less(mono_key(a.mono, ring),
                                          mono_key(b.mono, ring));
                   });
  return render(pieces, ring, cas);
}

}  // namespace

std::string poly_text(const Poly& p, const ParamRing& ring) {
  return serialize(p, ring, false);
}

std::string coef_text(const Coef& c, const ParamRing& ring) {
  return serialize(Poly::term({}, c), ring, false);
}

std::string var_cas(const ParamRing& ring, int id) {
  const auto& nm = ring.name(id);
  std::string f = "T";
  for (int c : nm.row) f += "_" + std::to_string(c);
  f += "_";
  for (int c : nm.col) f += "_" + std::to_string(c);
  return f;
}

std::string poly_cas(const Poly& p, const ParamRing& ring) {
  return serialize(p, ring, true);
}

std::string coef_cas(const Coef& c, const ParamRing& ring) {
  return serialize(Poly::term({}, c), ring, true);
}

}  // namespace gstrata
