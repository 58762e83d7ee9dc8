#pragma once

#include <string>
#include <vector>

#include "exhall/exact.hpp"
#include "exhall/hall.hpp"

namespace exhall {

// A non-negative weight per indecomposable, extended additively to classes.
struct Valuation {
  std::vector<int> w;

  long long value(const ObjClass& cls) const {
    long long out = 0;
    for (size_t i = 0; i < w.size(); ++i) out += (long long)w[i] * cls.m[i];
    return out;
  }
};

inline Valuation zero_valuation(const Catalog& cat) {
  return Valuation{std::vector<int>(cat.n, 0)};
}

// Value of w on the class of mesh u: w(tau_end) + w(end) − w(middle).
inline long long mesh_value(const Catalog& cat, const Valuation& val, int u) {
  const Mesh& mesh = cat.ar.meshes[u];
  long long out = (long long)val.w[mesh.tau_end] + val.w[mesh.end];
  for (const auto& [mid, mult] : mesh.middle) out -= (long long)val.w[mid] * mult;
  return out;
}

enum class ValuationKind { NotQuasi, Valuation };

struct ValuationClass {
  ValuationKind kind = ValuationKind::NotQuasi;
  // when kind == Valuation: the substructure of e on whose meshes w vanishes;
  // w is characteristic for it
  ExactStructure characteristic_for;
  // offending mesh for NotQuasi, else -1
  int negative_mesh = -1;
};

// Classify w against the structure e. Conflations of e decompose into the
// meshes of S, so w is an e-(quasi-)valuation exactly when its value on every
// admitted mesh class is ≥ 0, and it is then characteristic for the
// substructure S′ = {U ∈ S : value 0} — strictly positive on S \ S′.
inline ValuationClass classify_valuation(const Catalog& cat, const Valuation& val,
                                         const ExactStructure& e) {
  ValuationClass out;
  out.characteristic_for = ExactStructure{0, e.mesh_count};
  for (int u : e.meshes()) {
    const long long v = mesh_value(cat, val, u);
    if (v < 0) {
      out.kind = ValuationKind::NotQuasi;
      out.negative_mesh = u;
      return out;
    }
    if (v == 0) out.characteristic_for.mask |= 1u << u;
  }
  out.kind = ValuationKind::Valuation;
  return out;
}

// The canonical weight function for a comparable pair e′ ≤ e:
//   w = Σ_P dim Hom(P, −) over P projective in e′ but not in e.
// It is an e-valuation, characteristic for e′.
inline Valuation weight_function(const Catalog& cat, const ExactStructure& e,
                                 const ExactStructure& eprime) {
  if (!structure_leq(eprime, e))
    throw InputError("weight function requires comparable structures (expected e' <= e)");
  std::vector<bool> in_e(cat.n, false);
  for (int i : projectives(cat, e)) in_e[i] = true;
  Valuation out = zero_valuation(cat);
  for (int pr : projectives(cat, eprime)) {
    if (in_e[pr]) continue;
    for (int j = 0; j < cat.n; ++j) out.w[j] += cat.hom[pr][j];
  }
  return out;
}

// Top-degree truncation of [a]⋄[c] for the filtration induced by an
// e-valuation w: keep the terms [b] with w(b) = w(a) + w(c). The split term
// always has top degree, so the result is never zero.
inline QElt graded_multiply(const Catalog& cat, const ExactStructure& e, const Valuation& val,
                            const ObjClass& a, const ObjClass& c, int p) {
  if (classify_valuation(cat, val, e).kind != ValuationKind::Valuation)
    throw InputError("weights do not form a valuation for this structure");
  const long long top = val.value(a) + val.value(c);
  QElt out;
  for (const auto& [b, coeff] : multiply(cat, e, a, c, p).terms)
    if (val.value(b) == top) out.add(b, coeff);
  return out;
}

struct TableReport {
  unsigned long long pairs = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// The degeneration statement at fixed q: the associated graded of H(e) under
// the canonical weight function of (e, e′) has the multiplication table of
// H(e′), checked on every pair with total dimension sum within the bound.
inline TableReport verify_degeneration(const Catalog& cat, const ExactStructure& e,
                                       const ExactStructure& eprime, int p,
                                       int max_total_dim) {
  const Valuation val = weight_function(cat, e, eprime);
  TableReport report;
  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  for (const ObjClass& a : classes)
    for (const ObjClass& c : classes) {
      if (cat.total_dim(a) + cat.total_dim(c) > max_total_dim) continue;
      ++report.pairs;
      const QElt graded = graded_multiply(cat, e, val, a, c, p);
      const QElt target = multiply(cat, eprime, a, c, p);
      if (graded == target) continue;
      report.mismatches.push_back("gr[" + class_label(cat, a) + "]*[" + class_label(cat, c) +
                                  "] = " + hall_str(cat, graded) + "  vs  " +
                                  hall_str(cat, target) + "  (structures " + structure_name(e) +
                                  " -> " + structure_name(eprime) + ", q=" + std::to_string(p) +
                                  ")");
    }
  return report;
}

// Endpoint of the degeneration chain: under the weight function of (e, add)
// the graded product is the skew polynomial table |Hom(a,c)|^{-1}·[a⊕c].
inline TableReport verify_pbw_endpoint(const Catalog& cat, const ExactStructure& e, int p,
                                       int max_total_dim) {
  const Valuation val = weight_function(cat, e, ExactStructure{0, e.mesh_count});
  TableReport report;
  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  for (const ObjClass& a : classes)
    for (const ObjClass& c : classes) {
      if (cat.total_dim(a) + cat.total_dim(c) > max_total_dim) continue;
      ++report.pairs;
      QElt expected;
      expected.add(oplus(a, c), rat_pow((long long)p, -hom_dim_class(cat, a, c)));
      const QElt graded = graded_multiply(cat, e, val, a, c, p);
      if (graded == expected) continue;
      report.mismatches.push_back("gr[" + class_label(cat, a) + "]*[" + class_label(cat, c) +
                                  "] = " + hall_str(cat, graded) + "  vs  " +
                                  hall_str(cat, expected) + "  (structure " + structure_name(e) +
                                  ", q=" + std::to_string(p) + ")");
    }
  return report;
}

struct EndQuasiReport {
  unsigned long long checked = 0;
  std::vector<std::string> violations;     // would contradict quasi-valuation
  std::string nonadditivity_witness;       // shows |End| is not additive

  bool quasi_ok() const { return violations.empty(); }
};

// |End(−)| is an e-quasi-valuation but not a valuation: |End(y)| ≤ |End(x⊕z)|
// on every certified conflation x ↣ y ↠ z (equivalently End dimensions
// compare), yet |End| fails ⊕-additivity on any square of an indecomposable.
inline EndQuasiReport endomorphism_quasivaluation_check(const Catalog& cat,
                                                        const ExactStructure& e, int p,
                                                        int max_total_dim) {
  EndQuasiReport report;
  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  for (const ObjClass& a : classes)
    for (const ObjClass& c : classes) {
      if (cat.total_dim(a) + cat.total_dim(c) > max_total_dim) continue;
      const int split_dim = hom_dim_class(cat, oplus(a, c), oplus(a, c));
      for (const auto& [b, cnt] : ext_table(cat, a, c, p)) {
        if (!conflation_in(cat, e, c, b, a)) continue;
        ++report.checked;
        const int mid_dim = hom_dim_class(cat, b, b);
        if (mid_dim > split_dim)
          report.violations.push_back("|End(" + class_label(cat, b) + ")| = p^" +
                                      std::to_string(mid_dim) + " exceeds |End(" +
                                      class_label(cat, oplus(a, c)) + ")| = p^" +
                                      std::to_string(split_dim));
      }
    }
  if (cat.n > 0) {
    const ObjClass sq = indec_class(cat.n, 0, 2);
    const long long sq_dim = hom_dim_class(cat, sq, sq);  // = 4 for any indecomposable
    report.nonadditivity_witness =
        "|End(" + class_label(cat, sq) + ")| = " + std::to_string(p) + "^" +
        std::to_string(sq_dim) + " but 2*|End(" + class_label(cat, indec_class(cat.n, 0)) +
        ")| = 2*" + std::to_string(p);
  }
  return report;
}

}  // namespace exhall
