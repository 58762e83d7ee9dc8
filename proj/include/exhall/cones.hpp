#pragma once

#include <string>
#include <vector>

#include "exhall/degen.hpp"
#include "exhall/exact.hpp"
#include "exhall/ratlinalg.hpp"

namespace exhall {

// Integer vector in the additive Grothendieck group Z^N (or its dual),
// coordinates indexed by the indecomposables in discovery order.
using KClass = std::vector<long long>;

struct K0Presentation {
  int ambient_rank = 0;
  std::vector<KClass> relations;            // one mesh class per admitted mesh
  std::vector<long long> invariant_factors; // Smith normal form of the relations
  int rank = 0;                             // free rank of the quotient
};

// K₀(E_S) = Z^N / ⟨mesh classes of S⟩.
inline K0Presentation k0_quotient(const Catalog& cat, const ExactStructure& e) {
  K0Presentation out;
  out.ambient_rank = cat.n;
  for (int u : e.meshes()) out.relations.push_back(mesh_class(cat, u));
  out.invariant_factors = smith_invariant_factors(out.relations);
  int nonzero = 0;
  for (long long f : out.invariant_factors)
    if (f != 0) ++nonzero;
  out.rank = cat.n - nonzero;
  return out;
}

// The cone of conflation classes of e relative to e′, spanned by the mesh
// classes of S \ S′. Simplicial: the generators are linearly independent.
struct ConeC {
  std::vector<KClass> generators;
};

inline ConeC cone_C(const Catalog& cat, const ExactStructure& e, const ExactStructure& eprime) {
  if (!structure_leq(eprime, e))
    throw InputError("cone requires comparable structures (expected e' <= e)");
  ConeC out;
  for (int u : e.meshes())
    if (!eprime.contains(u)) out.generators.push_back(mesh_class(cat, u));
  if (rational_rank_rows(out.generators) != int(out.generators.size()))
    throw std::logic_error("mesh classes are not linearly independent");
  return out;
}

// Dual degree cone in H-description: functionals positive on the relative
// conflation classes and vanishing on the e′-conflation classes.
struct ConeD {
  int ambient_dim = 0;
  std::vector<KClass> strict;  // rows g with g·d > 0 required
  std::vector<KClass> zero;    // rows h with h·d = 0 required
};

inline ConeD cone_D(const Catalog& cat, const ExactStructure& e, const ExactStructure& eprime) {
  if (!structure_leq(eprime, e))
    throw InputError("cone requires comparable structures (expected e' <= e)");
  ConeD out;
  out.ambient_dim = cat.n;
  for (int u : e.meshes())
    (eprime.contains(u) ? out.zero : out.strict).push_back(mesh_class(cat, u));
  return out;
}

inline Rat dot(const KClass& row, const std::vector<Rat>& d) {
  Rat out(0);
  for (size_t i = 0; i < row.size(); ++i) out += Rat(row[i]) * d[i];
  return out;
}

// Exact membership test: every equality holds and every strict inequality holds.
inline bool membership(const std::vector<Rat>& d, const ConeD& cone) {
  if (int(d.size()) != cone.ambient_dim)
    throw InputError("test vector length does not match the ambient dimension");
  for (const KClass& row : cone.zero)
    if (dot(row, d) != Rat(0)) return false;
  for (const KClass& row : cone.strict)
    if (dot(row, d) <= Rat(0)) return false;
  return true;
}

inline std::vector<Rat> valuation_vector(const Valuation& val) {
  std::vector<Rat> out;
  out.reserve(val.w.size());
  for (int x : val.w) out.emplace_back(x);
  return out;
}

// Dimension of the closure {d : strict rows ≥ 0, zero rows = 0}. The canonical
// weight function witnesses a strictly feasible point, making the closure
// full-dimensional inside the equality subspace.
inline int closure_dimension(const Catalog& cat, const ExactStructure& e,
                             const ExactStructure& eprime) {
  const ConeD cone = cone_D(cat, e, eprime);
  if (!membership(valuation_vector(weight_function(cat, e, eprime)), cone))
    throw std::logic_error("canonical weight function fell outside its cone");
  return cat.n - rational_rank_rows(cone.zero);
}

// Dimension of the linearity space of the closure: all rows vanish.
inline int linearity_dimension(const Catalog& cat, const ExactStructure& e,
                               const ExactStructure& eprime) {
  const ConeD cone = cone_D(cat, e, eprime);
  std::vector<KClass> rows = cone.zero;
  rows.insert(rows.end(), cone.strict.begin(), cone.strict.end());
  return cat.n - rational_rank_rows(rows);
}

// Faces of the simplicial cone C^{e, add}: one per subset of the admitted
// meshes, each face being C^{E_T, add} for the corresponding substructure E_T.
inline std::vector<ExactStructure> face_lattice(const Catalog& cat, const ExactStructure& e) {
  const std::vector<int> meshes = e.meshes();
  if (meshes.size() > 20)
    throw BudgetExceeded("too many generators to enumerate the face lattice");
  std::vector<ExactStructure> out;
  out.reserve(std::size_t(1) << meshes.size());
  for (std::uint32_t pick = 0; pick < (1u << meshes.size()); ++pick) {
    ExactStructure face{0, e.mesh_count};
    for (size_t i = 0; i < meshes.size(); ++i)
      if ((pick >> i) & 1u) face.mask |= 1u << meshes[i];
    out.push_back(face);
  }
  return out;
}

// Debug oracle: decide by Fourier–Motzkin elimination whether some d satisfies
// z·d = 0 for all zero rows and s·d > 0 for all strict rows. Strictness is
// handled by the usual normalization s·d ≥ 1 (scale-invariance of the system).
inline bool fm_strict_feasible(const ConeD& cone) {
  const int n = cone.ambient_dim;
  // rows stored as (a_0..a_{n-1} | b) meaning a·d ≤ b
  std::vector<std::vector<Rat>> rows;
  for (const KClass& z : cone.zero) {
    std::vector<Rat> le(n + 1, Rat(0)), ge(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) {
      le[i] = Rat(z[i]);
      ge[i] = Rat(-z[i]);
    }
    rows.push_back(le);
    rows.push_back(ge);
  }
  for (const KClass& s : cone.strict) {
    std::vector<Rat> row(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = Rat(-s[i]);
    row[n] = Rat(-1);
    rows.push_back(row);
  }
  for (int var = 0; var < n; ++var) {
    std::vector<std::vector<Rat>> pos, neg, rest;
    for (auto& row : rows) {
      if (row[var] > Rat(0))
        pos.push_back(std::move(row));
      else if (row[var] < Rat(0))
        neg.push_back(std::move(row));
      else
        rest.push_back(std::move(row));
    }
    if (rest.size() + pos.size() * neg.size() > 100000)
      throw BudgetExceeded("Fourier-Motzkin elimination blew up");
    for (const auto& up : pos)
      for (const auto& lo : neg) {
        // up[var] > 0 ≥ lo[var]: the combination -lo[var]·up + up[var]·lo
        // eliminates the variable and preserves ≤
        std::vector<Rat> combined(n + 1, Rat(0));
        for (int i = 0; i <= n; ++i) combined[i] = -lo[var] * up[i] + up[var] * lo[i];
        rest.push_back(std::move(combined));
      }
    rows = std::move(rest);
  }
  for (const auto& row : rows)
    if (row[n] < Rat(0)) return false;
  return true;
}

}  // namespace exhall
