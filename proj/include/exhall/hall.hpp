#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exhall/exact.hpp"
#include "exhall/fqrep.hpp"
#include "exhall/rational.hpp"

namespace exhall {

inline bool coeff_is_zero(const Rat& r) { return r == Rat(0); }
inline bool coeff_is_zero(const Laurent& l) { return l.is_zero(); }

template <typename C>
struct CoeffOps;

template <>
struct CoeffOps<Rat> {
  static Rat one() { return Rat(1); }
  static std::string str(const Rat& r) { return rat_str(r); }
};

template <>
struct CoeffOps<Laurent> {
  static Laurent one() { return Laurent::term(Rat(1), 0); }
  static std::string str(const Laurent& l) { return l.str("v"); }
};

// A Hall algebra element: finite rational (or Laurent, in the symbolic mode)
// combination of isomorphism classes. Zero coefficients are pruned eagerly so
// equality is plain member comparison.
template <typename C>
struct HallElt {
  std::map<ObjClass, C> terms;

  bool operator==(const HallElt&) const = default;
  bool is_zero() const { return terms.empty(); }

  void add(const ObjClass& cls, const C& coeff) {
    if (coeff_is_zero(coeff)) return;
    auto [it, fresh] = terms.try_emplace(cls, coeff);
    if (!fresh) {
      it->second = it->second + coeff;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  void add_scaled(const HallElt& other, const C& k) {
    for (const auto& [cls, coeff] : other.terms) add(cls, k * coeff);
  }
};

using QElt = HallElt<Rat>;
using NuElt = HallElt<Laurent>;

template <typename C>
HallElt<C> hall_unit(const Catalog& cat) {
  HallElt<C> out;
  out.add(zero_class(cat.n), CoeffOps<C>::one());
  return out;
}

template <typename C>
HallElt<C> hall_class(const Catalog& cat, const ObjClass& cls) {
  HallElt<C> out;
  out.add(cls, CoeffOps<C>::one());
  return out;
}

template <typename C>
std::string hall_str(const Catalog& cat, const HallElt<C>& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [cls, coeff] : x.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + CoeffOps<C>::str(coeff) + ")[" + class_label(cat, cls) + "]";
  }
  return out;
}

// [a] ⋄ [c] in H(E) at q = p: the coefficient of [b] is
// |Ext¹(a,c)_b| / |Hom(a,c)| for the middles whose conflation c ↣ b ↠ a lies
// in the structure. Split middles have zero defect, so the split term always
// survives the membership filter.
inline QElt multiply(const Catalog& cat, const ExactStructure& e, const ObjClass& a,
                     const ObjClass& c, int p) {
  const Rat inv_hom = rat_pow((long long)p, -hom_dim_class(cat, a, c));
  QElt out;
  for (const auto& [b, cnt] : ext_table(cat, a, c, p))
    if (conflation_in(cat, e, c, b, a)) out.add(b, Rat((long long)cnt) * inv_hom);
  return out;
}

inline Rat coefficient(const Catalog& cat, const ExactStructure& e, const ObjClass& a,
                       const ObjClass& c, const ObjClass& b, int p) {
  const QElt prod = multiply(cat, e, a, c, p);
  auto it = prod.terms.find(b);
  return it == prod.terms.end() ? Rat(0) : it->second;
}

// Bilinear extension of ⋄ to elements.
inline QElt product(const Catalog& cat, const ExactStructure& e, const QElt& x,
                    const QElt& y, int p) {
  QElt out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [c, cc] : y.terms) out.add_scaled(multiply(cat, e, a, c, p), ca * cc);
  return out;
}

inline constexpr std::array<int, 6> kInterpolationPrimes = {2, 3, 5, 7, 11, 13};

namespace detail {

// Interpolate f through value(prime) for growing prefixes of the prime list,
// stopping when two consecutive interpolants coincide.
template <typename F>
std::optional<Poly> stabilized_interpolation(F&& value) {
  std::vector<std::pair<Rat, Rat>> pts;
  std::optional<Poly> prev;
  for (int p : kInterpolationPrimes) {
    pts.emplace_back(Rat(p), value(p));
    Poly cur = lagrange_interpolate(pts);
    if (prev && cur == *prev) return cur;
    prev = std::move(cur);
  }
  return std::nullopt;
}

}  // namespace detail

// The structure constant of [b] in [a]⋄[c] as a polynomial in q, found by
// evaluating at successive primes until the interpolation stabilizes. Returns
// nullopt when no polynomial emerges within the prime budget — so for genuinely
// Laurent coefficients such as split middles with |Hom| > 1.
inline std::optional<Poly> interpolate_polynomial(const Catalog& cat, const ExactStructure& e,
                                                  const ObjClass& a, const ObjClass& c,
                                                  const ObjClass& b) {
  return detail::stabilized_interpolation(
      [&](int p) { return coefficient(cat, e, a, c, b, p); });
}

// |Ext¹(a,c)_b| as a polynomial in q. Extension counts over a representation-
// finite hereditary category are honest polynomials, so non-stabilization is an
// internal failure, not an input condition.
inline Poly ext_count_polynomial(const Catalog& cat, const ObjClass& a, const ObjClass& c,
                                 const ObjClass& b) {
  auto poly = detail::stabilized_interpolation(
      [&](int p) { return Rat((long long)ext_count(cat, a, c, b, p)); });
  if (!poly) throw std::logic_error("extension counts did not interpolate to a polynomial");
  return *poly;
}

// [a] ⋄ [c] with a symbolic field size: coefficients are Laurent polynomials in
// ν with q = ν². Each coefficient is E_b(ν²)·ν^{−2h}, E_b the extension-count
// polynomial and h = dim Hom(a,c).
inline NuElt multiply_laurent(const Catalog& cat, const ExactStructure& e, const ObjClass& a,
                              const ObjClass& c) {
  const int h = hom_dim_class(cat, a, c);
  // union of supports over several primes, so a count vanishing at one prime
  // cannot hide a term
  std::map<ObjClass, bool> support;
  for (int p : {2, 3, 5})
    for (const auto& [b, cnt] : ext_table(cat, a, c, p))
      if (conflation_in(cat, e, c, b, a)) support[b] = true;
  NuElt out;
  for (const auto& entry : support) {
    const ObjClass& b = entry.first;
    Laurent coeff = laurent_from_poly(ext_count_polynomial(cat, a, c, b)).stretch(2).shift(-2 * h);
    out.add(b, coeff);
  }
  return out;
}

// Twisted multiplication [a] * [c] = ν^{⟨a,c⟩}·([a] ⋄ [c]), with ⟨,⟩ the
// Euler form of the ambient hereditary structure on dimension vectors.
inline NuElt multiply_twisted(const Catalog& cat, const ExactStructure& e, const ObjClass& a,
                              const ObjClass& c) {
  const long long twist = euler_form(cat.q, cat.dimvec(a), cat.dimvec(c));
  NuElt prod = multiply_laurent(cat, e, a, c);
  NuElt out;
  for (const auto& [b, coeff] : prod.terms) out.add(b, coeff.shift(int(twist)));
  return out;
}

inline NuElt twisted_product(const Catalog& cat, const ExactStructure& e, const NuElt& x,
                             const NuElt& y) {
  NuElt out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [c, cc] : y.terms)
      out.add_scaled(multiply_twisted(cat, e, a, c), ca * cc);
  return out;
}

struct AssocReport {
  unsigned long long checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline void check_triple(const Catalog& cat, const ExactStructure& e, const ObjClass& a,
                         const ObjClass& b, const ObjClass& c, int p, AssocReport& report) {
  const QElt lhs = product(cat, e, multiply(cat, e, a, b, p), hall_class<Rat>(cat, c), p);
  const QElt rhs = product(cat, e, hall_class<Rat>(cat, a), multiply(cat, e, b, c, p), p);
  ++report.checked;
  if (lhs == rhs) return;
  report.failures.push_back("([" + class_label(cat, a) + "]*[" + class_label(cat, b) +
                            "])*[" + class_label(cat, c) + "] = " + hall_str(cat, lhs) +
                            "  vs  " + hall_str(cat, rhs) + "  (structure " +
                            structure_name(e) + ", q=" + std::to_string(p) + ")");
}

// Associativity over every ordered triple of classes with total dimension sum
// within the bound.
inline AssocReport check_associativity(const Catalog& cat, const ExactStructure& e, int p,
                                       int max_total_dim) {
  AssocReport report;
  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  std::vector<int> tot(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) tot[i] = cat.total_dim(classes[i]);
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j) {
      if (tot[i] + tot[j] > max_total_dim) continue;
      for (size_t k = 0; k < classes.size(); ++k) {
        if (tot[i] + tot[j] + tot[k] > max_total_dim) continue;
        check_triple(cat, e, classes[i], classes[j], classes[k], p, report);
      }
    }
  return report;
}

}  // namespace exhall
