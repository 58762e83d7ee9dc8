#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exhall/cones.hpp"
#include "exhall/degen.hpp"
#include "exhall/exact.hpp"
#include "exhall/format.hpp"
#include "exhall/hall.hpp"
#include "exhall/quiver.hpp"

namespace exhall {

// The three worked quivers every named check runs against. Aliases follow the
// usual projective/injective/simple names for the chosen orientations.
inline const char* kQuiverA2 =
    "vertices: [1, 2], arrows: [[1, 2]],"
    " aliases: {S1: 1.0, S2: 0.1, P1: 1.1}";

inline const char* kQuiverA3 =
    "vertices: [1, 2, 3], arrows: [[1, 2], [3, 2]],"
    " aliases: {S1: 1.0.0, S2: 0.1.0, S3: 0.0.1, P1: 1.1.0, P3: 0.1.1, I2: 1.1.1}";

inline const char* kQuiverDisjointA2 =
    "vertices: [1, 2, 3, 4], arrows: [[1, 2], [3, 4]],"
    " aliases: {S1: 1.0.0.0, S2: 0.1.0.0, P1: 1.1.0.0,"
    "           S3: 0.0.1.0, S4: 0.0.0.1, P3: 0.0.1.1}";

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success, diff/explanation on failure
};

namespace detail {

inline void note(CheckResult& r, bool ok, const std::string& what) {
  if (ok) return;
  r.pass = false;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += what;
}

inline QElt elt_of(const Catalog& cat, std::initializer_list<std::pair<const char*, Rat>> terms) {
  QElt out;
  for (const auto& [label, coeff] : terms) out.add(parse_class(cat, label), coeff);
  return out;
}

}  // namespace detail

// ---- building blocks reused by suites and acceptance ----

// The worked A_3 products and commutation relations, at a given prime.
inline CheckResult check_a3_products(const Catalog& cat, int p) {
  CheckResult r{"a3-products-q" + std::to_string(p), true, ""};
  const Rat q((long long)p);
  const ExactStructure e12 = parse_structure(cat.ar, "1,2");
  const ExactStructure e1 = parse_structure(cat.ar, "1");
  const ObjClass m1 = parse_class(cat, "S2"), m2 = parse_class(cat, "P1"),
                 m3 = parse_class(cat, "P3"), m4 = parse_class(cat, "I2"),
                 m5 = parse_class(cat, "S3");

  using detail::elt_of;
  using detail::note;
  note(r, multiply(cat, e12, m4, m1, p) ==
              elt_of(cat, {{"S2+I2", Rat(1)}, {"P1+P3", q - 1}}),
       "[I2]*[S2] in structure 1,2");
  note(r, multiply(cat, e12, m5, m2, p) ==
              elt_of(cat, {{"P1+S3", Rat(1)}, {"I2", q - 1}}),
       "[S3]*[P1] in structure 1,2");
  note(r, multiply(cat, e1, m5, m2, p) == elt_of(cat, {{"P1+S3", Rat(1)}}),
       "[S3]*[P1] in structure 1");
  note(r, multiply(cat, e12, m1, m4, p) == elt_of(cat, {{"S2+I2", Rat(1) / q}}),
       "[S2]*[I2] in structure 1,2");

  for (const ExactStructure& e : {e12, e1}) {
    const std::string where = " in structure " + structure_name(e);
    QElt lhs = multiply(cat, e, m4, m1, p);
    lhs.add_scaled(multiply(cat, e, m1, m4, p), -q);
    QElt rhs;
    rhs.add_scaled(multiply(cat, e, m2, m3, p), q - 1);
    note(r, lhs == rhs, "commutator of [I2],[S2]" + where);

    QElt lhs2 = multiply(cat, e, m5, m2, p);
    lhs2.add_scaled(multiply(cat, e, m2, m5, p), Rat(-1));
    QElt rhs2;
    if (e == e12) rhs2.add(m4, q - 1);
    note(r, lhs2 == rhs2, "commutator of [S3],[P1]" + where);
  }
  return r;
}

inline CheckResult check_lattice_count(const Catalog& cat, const std::string& tag,
                                       size_t expected) {
  CheckResult r{"lattice-count-" + tag, true, ""};
  const size_t got = enumerate_structures(cat.ar).size();
  detail::note(r, got == expected,
               "expected " + std::to_string(expected) + " exact structures, found " +
                   std::to_string(got));
  return r;
}

inline CheckResult check_k0_presentations(const Catalog& cat) {
  CheckResult r{"k0-presentations", true, ""};
  using detail::note;
  const K0Presentation p1 = k0_quotient(cat, parse_structure(cat.ar, "1"));
  note(r, p1.relations == std::vector<KClass>{{1, -1, -1, 1, 0, 0}},
       "structure 1: expected the single relation x1-x2-x3+x4");
  note(r, p1.rank == 5 && p1.invariant_factors == std::vector<long long>{1},
       "structure 1: quotient should be free of rank 5");
  const K0Presentation p12 = k0_quotient(cat, parse_structure(cat.ar, "1,2"));
  note(r, p12.relations == std::vector<KClass>{{1, -1, -1, 1, 0, 0}, {0, 1, 0, -1, 1, 0}},
       "structure 1,2: expected relations x1-x2-x3+x4 and x2-x4+x5");
  note(r, p12.rank == 4 && p12.invariant_factors == std::vector<long long>({1, 1}),
       "structure 1,2: quotient should be free of rank 4");
  return r;
}

inline CheckResult check_cone_duality(const Catalog& cat) {
  CheckResult r{"cone-duality", true, ""};
  using detail::note;
  const ExactStructure e12 = parse_structure(cat.ar, "1,2");
  const ExactStructure e1 = parse_structure(cat.ar, "1");

  const ConeC c = cone_C(cat, e12, e1);
  note(r, c.generators == std::vector<KClass>{{0, 1, 0, -1, 1, 0}},
       "C should be the single ray x2-x4+x5");

  const ConeD d = cone_D(cat, e12, e1);
  note(r, d.strict == std::vector<KClass>{{0, 1, 0, -1, 1, 0}},
       "D should require d2+d5 > d4");
  note(r, d.zero == std::vector<KClass>{{1, -1, -1, 1, 0, 0}},
       "D should require d1+d4 = d2+d3");

  const Valuation w = weight_function(cat, e12, e1);
  note(r, w.w == std::vector<int>({0, 0, 0, 0, 1, 0}),
       "weight function of (1,2 -> 1) should be the S3 indicator");
  note(r, membership(valuation_vector(w), d), "weight function should lie in D");
  note(r, !membership(std::vector<Rat>(6, Rat(0)), d), "zero vector should fail the strict row");
  note(r, closure_dimension(cat, e12, e1) == 5, "closure of D should be 5-dimensional");
  note(r, linearity_dimension(cat, e12, e1) == 4, "linearity space should be 4-dimensional");
  note(r, fm_strict_feasible(d), "elimination oracle should report D non-empty");

  // duality, pointwise: membership in D agrees with positivity on C's
  // generators plus vanishing on the generators of C^{e',add}, on a grid
  const ConeC cprime = cone_C(cat, e1, structure_add(cat.ar));
  std::vector<Rat> v(6, Rat(0));
  bool grid_ok = true;
  for (int i = 0; i < 6 && grid_ok; ++i)
    for (int j = 0; j < 6 && grid_ok; ++j)
      for (int si = -1; si <= 1 && grid_ok; ++si)
        for (int sj = -1; sj <= 1 && sj + si <= 2 && grid_ok; ++sj) {
          std::fill(v.begin(), v.end(), Rat(0));
          v[i] += Rat(si);
          v[j] += Rat(sj, 2);
          bool lhs = membership(v, d);
          bool rhs = true;
          for (const KClass& g : c.generators)
            if (dot(g, v) <= Rat(0)) rhs = false;
          for (const KClass& h : cprime.generators)
            if (dot(h, v) != Rat(0)) rhs = false;
          if (lhs != rhs) grid_ok = false;
        }
  note(r, grid_ok, "H-description disagrees with the generator description on the grid");
  return r;
}

// Degeneration across every comparable pair of structures.
inline CheckResult check_degenerations(const Catalog& cat, int p, int max_total_dim) {
  CheckResult r{"degenerations", true, ""};
  const std::vector<ExactStructure> all = enumerate_structures(cat.ar);
  int pairs = 0;
  for (const ExactStructure& e : all)
    for (const ExactStructure& eprime : all) {
      if (!structure_leq(eprime, e)) continue;
      ++pairs;
      const TableReport rep = verify_degeneration(cat, e, eprime, p, max_total_dim);
      if (!rep.ok())
        detail::note(r, false,
                     structure_name(e) + " -> " + structure_name(eprime) + ": " +
                         rep.mismatches.front() +
                         (rep.mismatches.size() > 1
                              ? " (+" + std::to_string(rep.mismatches.size() - 1) + " more)"
                              : ""));
    }
  // comparable ordered pairs in a Boolean lattice over m meshes number 3^m
  int expected = 1;
  for (size_t i = 0; i < cat.ar.meshes.size(); ++i) expected *= 3;
  detail::note(r, pairs == expected,
               "expected " + std::to_string(expected) + " comparable pairs, saw " +
                   std::to_string(pairs));
  return r;
}

inline CheckResult check_pbw_endpoint(const Catalog& cat, const std::string& tag, int p,
                                      int max_total_dim) {
  CheckResult r{"pbw-endpoint-" + tag, true, ""};
  for (const ExactStructure& e : enumerate_structures(cat.ar)) {
    const TableReport rep = verify_pbw_endpoint(cat, e, p, max_total_dim);
    if (!rep.ok())
      detail::note(r, false, "structure " + structure_name(e) + ": " + rep.mismatches.front());
  }
  return r;
}

// Extension-count totals against the Ext-space size, independently recomputed.
inline CheckResult check_ext_totals(const Catalog& cat, const std::string& tag,
                                    int max_total_dim) {
  CheckResult r{"ext-count-totals-" + tag, true, ""};
  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  for (int p : {2, 3})
    for (const ObjClass& a : classes)
      for (const ObjClass& c : classes) {
        if (cat.total_dim(a) + cat.total_dim(c) > max_total_dim) continue;
        BigInt total = 0;
        for (const auto& [b, cnt] : ext_table(cat, a, c, p)) total += cnt;
        const BigInt expected = big_pow(p, ext1_dim_class(cat, a, c));
        if (total != expected)
          detail::note(r, false,
                       "sum over middles of |Ext(" + class_label(cat, a) + "," +
                           class_label(cat, c) + ")_B| at p=" + std::to_string(p) +
                           " misses p^dimExt");
      }
  return r;
}

inline CheckResult check_associativity_all(const Catalog& cat, const std::string& tag, int p,
                                           int max_total_dim) {
  CheckResult r{"associativity-" + tag + "-q" + std::to_string(p), true, ""};
  for (const ExactStructure& e : enumerate_structures(cat.ar)) {
    const AssocReport rep = check_associativity(cat, e, p, max_total_dim);
    if (!rep.ok()) detail::note(r, false, rep.failures.front());
  }
  return r;
}

// The component-swap equivalence of the two middle structures on A_2 ⊔ A_2.
inline CheckResult check_disjoint_relabeling(const Catalog& cat, int max_total_dim) {
  CheckResult r{"disjoint-a2-relabeling", true, ""};
  using detail::note;

  // vertex swap 1<->3, 2<->4 induces the permutation of indecomposables
  std::vector<int> f(cat.n, -1);
  for (int i = 0; i < cat.n; ++i) {
    const std::vector<int>& d = cat.ar.ind[i].dim;
    const std::vector<int> swapped = {d[2], d[3], d[0], d[1]};
    for (int j = 0; j < cat.n; ++j)
      if (cat.ar.ind[j].dim == swapped) f[i] = j;
    if (f[i] < 0) {
      note(r, false, "relabeling is not defined on " + class_label(cat, indec_class(cat.n, i)));
      return r;
    }
  }
  auto apply = [&](const ObjClass& cls) {
    ObjClass out = zero_class(cat.n);
    for (int i = 0; i < cat.n; ++i) out.m[f[i]] = cls.m[i];
    return out;
  };

  // the structure containing only the first component's mesh, and its mirror
  int first_mesh = -1, second_mesh = -1;
  for (size_t u = 0; u < cat.ar.meshes.size(); ++u) {
    const std::vector<int>& end_dim = cat.ar.ind[cat.ar.meshes[u].end].dim;
    if (end_dim[0] == 1)
      first_mesh = int(u);
    else
      second_mesh = int(u);
  }
  note(r, first_mesh >= 0 && second_mesh >= 0, "could not locate the two component meshes");
  if (!r.pass) return r;
  const ExactStructure e1 = structure_from_meshes(cat.ar, {first_mesh});
  const ExactStructure e2 = structure_from_meshes(cat.ar, {second_mesh});

  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  for (int p : {2, 3})
    for (const ObjClass& a : classes)
      for (const ObjClass& c : classes) {
        if (cat.total_dim(a) + cat.total_dim(c) > max_total_dim) continue;
        QElt mapped;
        for (const auto& [b, coeff] : multiply(cat, e1, a, c, p).terms)
          mapped.add(apply(b), coeff);
        const QElt direct = multiply(cat, e2, apply(a), apply(c), p);
        if (mapped == direct) continue;
        note(r, false,
             "F[" + class_label(cat, a) + "]*F[" + class_label(cat, c) + "] = " +
                 hall_str(cat, direct) + " but F applied to the first table gives " +
                 hall_str(cat, mapped) + " at q=" + std::to_string(p));
        return r;
      }
  return r;
}

// Mesh defects are end indicators, and every certified conflation decomposes
// non-negatively into meshes, matching the Grothendieck-group identity.
inline CheckResult check_defect_identities(const Catalog& cat, const std::string& tag, int p,
                                           int max_total_dim) {
  CheckResult r{"defect-identities-" + tag, true, ""};
  using detail::note;
  for (size_t u = 0; u < cat.ar.meshes.size(); ++u) {
    const Mesh& mesh = cat.ar.meshes[u];
    ObjClass mid = zero_class(cat.n);
    for (const auto& [id, mult] : mesh.middle) mid.m[id] += mult;
    const std::vector<int> b = defect_vector(cat, indec_class(cat.n, mesh.tau_end), mid,
                                             indec_class(cat.n, mesh.end));
    std::vector<int> expected(cat.n, 0);
    expected[mesh.end] = 1;
    note(r, b == expected,
         "mesh " + std::to_string(u + 1) + " defect is not the indicator of its end");
  }

  const std::vector<ObjClass> classes = classes_up_to_total_dim(cat, max_total_dim);
  for (const ObjClass& a : classes)
    for (const ObjClass& c : classes) {
      if (cat.total_dim(a) + cat.total_dim(c) > max_total_dim) continue;
      for (const auto& [mid, cnt] : ext_table(cat, a, c, p)) {
        // certified conflation c ↣ mid ↠ a
        const std::vector<int> b = defect_vector(cat, c, mid, a);
        bool nonneg = true;
        std::vector<long long> recombined(cat.n, 0);
        for (int i = 0; i < cat.n; ++i) {
          if (b[i] < 0) nonneg = false;
          if (b[i] != 0) {
            const int mesh = cat.ar.end_mesh[i];
            if (mesh < 0) {
              nonneg = false;
              continue;
            }
            const std::vector<long long> g = mesh_class(cat, mesh);
            for (int j = 0; j < cat.n; ++j) recombined[j] += b[i] * g[j];
          }
        }
        bool identity = true;
        for (int j = 0; j < cat.n; ++j)
          if (recombined[j] != (long long)c.m[j] - mid.m[j] + a.m[j]) identity = false;
        const bool split_iff = (mid == oplus(a, c)) ==
                               std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
        if (!(nonneg && identity && split_iff)) {
          note(r, false,
               "conflation " + class_label(cat, c) + " >-> " + class_label(cat, mid) +
                   " ->> " + class_label(cat, a) + " has a bad defect decomposition");
          return r;
        }
      }
    }
  return r;
}

// Twisted A_2 Serre relation at symbolic ν:
// [S1]*[S1]*[S2] − (ν+ν⁻¹)[S1]*[S2]*[S1] + [S2]*[S1]*[S1] = 0.
inline CheckResult check_quantum_serre(const Catalog& cat) {
  CheckResult r{"quantum-serre-a2", true, ""};
  const ExactStructure emax = structure_max(cat.ar);
  const NuElt s1 = hall_class<Laurent>(cat, parse_class(cat, "S1"));
  const NuElt s2 = hall_class<Laurent>(cat, parse_class(cat, "S2"));
  const Laurent nu_sum = Laurent::term(Rat(1), 1) + Laurent::term(Rat(1), -1);

  NuElt acc = twisted_product(cat, emax, twisted_product(cat, emax, s1, s1), s2);
  NuElt midterm = twisted_product(cat, emax, twisted_product(cat, emax, s1, s2), s1);
  acc.add_scaled(midterm, Laurent::term(Rat(-1), 0) * nu_sum);
  acc.add_scaled(twisted_product(cat, emax, twisted_product(cat, emax, s2, s1), s1),
                 CoeffOps<Laurent>::one());
  detail::note(r, acc.is_zero(), "relation does not vanish: " + hall_str(cat, acc));
  return r;
}

// ---- catalogs and suite dispatch ----

struct VerifyContext {
  Catalog a2;
  Catalog a3;
  Catalog disjoint;

  static VerifyContext make(unsigned seed = 0) {
    VerifyContext ctx{build_catalog(parse_quiver(kQuiverA2), seed),
                      build_catalog(parse_quiver(kQuiverA3), seed),
                      build_catalog(parse_quiver(kQuiverDisjointA2), seed)};
    return ctx;
  }
};

inline std::vector<CheckResult> run_suite(const VerifyContext& ctx, const std::string& suite) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const char* part : {"a2", "a3", "disjoint-a2", "lattice", "cones", "degen"}) {
      const std::vector<CheckResult> sub = run_suite(ctx, part);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (suite == "a2") {
    out.push_back(check_ext_totals(ctx.a2, "a2", 5));
    out.push_back(check_associativity_all(ctx.a2, "a2", 2, 4));
    out.push_back(check_defect_identities(ctx.a2, "a2", 2, 5));
    out.push_back(check_pbw_endpoint(ctx.a2, "a2", 2, 4));
    out.push_back(check_quantum_serre(ctx.a2));
  } else if (suite == "a3") {
    out.push_back(check_a3_products(ctx.a3, 2));
    out.push_back(check_a3_products(ctx.a3, 3));
    out.push_back(check_ext_totals(ctx.a3, "a3", 5));
    out.push_back(check_associativity_all(ctx.a3, "a3", 2, 4));
    out.push_back(check_defect_identities(ctx.a3, "a3", 2, 5));
  } else if (suite == "disjoint-a2") {
    out.push_back(check_associativity_all(ctx.disjoint, "disjoint-a2", 2, 4));
    out.push_back(check_disjoint_relabeling(ctx.disjoint, 4));
  } else if (suite == "lattice") {
    out.push_back(check_lattice_count(ctx.a3, "a3", 8));
    out.push_back(check_lattice_count(ctx.disjoint, "disjoint-a2", 4));
  } else if (suite == "cones") {
    out.push_back(check_k0_presentations(ctx.a3));
    out.push_back(check_cone_duality(ctx.a3));
  } else if (suite == "degen") {
    out.push_back(check_degenerations(ctx.a3, 2, 4));
    out.push_back(check_pbw_endpoint(ctx.a2, "a2", 2, 4));
    out.push_back(check_pbw_endpoint(ctx.a3, "a3", 2, 4));
  } else {
    throw InputError("unknown verify suite '" + suite +
                     "' (expected a2, a3, disjoint-a2, lattice, cones, degen, or all)");
  }
  return out;
}

}  // namespace exhall
