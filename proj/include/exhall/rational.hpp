#pragma once

#include <boost/rational.hpp>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace exhall {

// All coefficient arithmetic is exact. Numerators and denominators stay tiny at
// the scales this library targets, so a machine-word rational is enough.
using Rat = boost::rational<long long>;

inline std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// base^k for integer k of either sign (base != 0 when k < 0).
inline Rat rat_pow(long long base, int k) {
  Rat out{1};
  const Rat b = k >= 0 ? Rat{base} : Rat{1, base};
  for (int i = std::abs(k); i > 0; --i) out *= b;
  return out;
}

inline Rat rat_pow(const Rat& base, int k) {
  Rat out{1};
  const Rat b = k >= 0 ? base : Rat{base.denominator(), base.numerator()};
  for (int i = std::abs(k); i > 0; --i) out *= b;
  return out;
}

// --- dense polynomials -------------------------------------------------------
//
// coefficient i is the coefficient of x^i; trailing zeros trimmed so that
// equality of vectors is equality of polynomials.

using Poly = std::vector<Rat>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == Rat{0}) f.pop_back();
}

inline Poly poly_add(const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), Rat{0});
  for (size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  poly_trim(out);
  return out;
}

inline Poly poly_scale(const Poly& f, const Rat& s) {
  if (s == Rat{0}) return {};
  Poly out = f;
  for (auto& c : out) c *= s;
  return out;
}

inline Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, Rat{0});
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  poly_trim(out);
  return out;
}

inline Rat poly_eval(const Poly& f, const Rat& x) {
  Rat out{0};
  for (size_t i = f.size(); i-- > 0;) out = out * x + f[i];
  return out;
}

// Unique polynomial of degree < pts.size() through the given points
// (pairwise distinct x values required).
inline Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
  Poly out;
  for (size_t i = 0; i < pts.size(); ++i) {
    Poly basis{Rat{1}};
    Rat denom{1};
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, Poly{-pts[j].first, Rat{1}});
      denom *= pts[i].first - pts[j].first;
    }
    out = poly_add(out, poly_scale(basis, pts[i].second / denom));
  }
  return out;
}

// --- Laurent polynomials -----------------------------------------------------
//
// Exponent -> coefficient, zero coefficients pruned. The variable symbol is
// supplied at print time, so the same type serves both q and the twist
// parameter (whose square is q).

struct Laurent {
  std::map<int, Rat> c;

  static Laurent term(const Rat& v, int e) {
    Laurent out;
    out.add(e, v);
    return out;
  }

  void add(int e, const Rat& v) {
    if (v == Rat{0}) return;
    auto it = c.find(e);
    if (it == c.end()) {
      c.emplace(e, v);
    } else {
      it->second += v;
      if (it->second == Rat{0}) c.erase(it);
    }
  }

  bool is_zero() const { return c.empty(); }
  bool operator==(const Laurent&) const = default;

  Laurent operator+(const Laurent& o) const {
    Laurent out = *this;
    for (const auto& [e, v] : o.c) out.add(e, v);
    return out;
  }

  Laurent operator-(const Laurent& o) const {
    Laurent out = *this;
    for (const auto& [e, v] : o.c) out.add(e, -v);
    return out;
  }

  Laurent operator*(const Laurent& o) const {
    Laurent out;
    for (const auto& [e1, v1] : c)
      for (const auto& [e2, v2] : o.c) out.add(e1 + e2, v1 * v2);
    return out;
  }

  Laurent operator*(const Rat& s) const {
    Laurent out;
    for (const auto& [e, v] : c) out.add(e, v * s);
    return out;
  }

  // substitute x -> x^k (k >= 1)
  Laurent stretch(int k) const {
    Laurent out;
    for (const auto& [e, v] : c) out.add(e * k, v);
    return out;
  }

  // multiply by x^k
  Laurent shift(int k) const {
    Laurent out;
    for (const auto& [e, v] : c) out.add(e + k, v);
    return out;
  }

  Rat eval(const Rat& x) const {
    Rat out{0};
    for (const auto& [e, v] : c) out += v * rat_pow(x, e);
    return out;
  }

  std::string str(const std::string& sym) const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const auto& [e, v] = *it;
      Rat av = v < Rat{0} ? -v : v;
      out += first ? (v < Rat{0} ? "-" : "") : (v < Rat{0} ? " - " : " + ");
      first = false;
      const bool show_coeff = av != Rat{1} || e == 0;
      if (show_coeff) {
        out += std::to_string(av.numerator());
        if (av.denominator() != 1) out += "/" + std::to_string(av.denominator());
      }
      if (e != 0) {
        if (show_coeff) out += "*";
        out += sym;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }
};

inline Laurent laurent_from_poly(const Poly& f) {
  Laurent out;
  for (size_t i = 0; i < f.size(); ++i) out.add(int(i), f[i]);
  return out;
}

}  // namespace exhall
