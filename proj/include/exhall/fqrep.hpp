#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <tuple>
#include <vector>

#include "exhall/fqlinalg.hpp"
#include "exhall/quiver.hpp"

namespace exhall {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(long long base, long long e) {
  BigInt out = 1;
  for (long long i = 0; i < e; ++i) out *= base;
  return out;
}

// A representation of the quiver over F_p: a space F_p^{vdim[v]} per vertex and
// a matrix per arrow mapping the source space to the target space.
struct Rep {
  int p = 2;
  std::vector<int> vdim;
  std::vector<fq::Mat> arr;
};

inline Rep zero_rep(const Quiver& q, int p) {
  Rep r;
  r.p = p;
  r.vdim.assign(q.vertex_count(), 0);
  for (const auto& [s, t] : q.arrows) r.arr.emplace_back(0, 0);
  return r;
}

inline Rep direct_sum(const Quiver& q, const Rep& x, const Rep& y) {
  Rep out;
  out.p = x.p;
  out.vdim.resize(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) out.vdim[v] = x.vdim[v] + y.vdim[v];
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& [s, t] = q.arrows[a];
    fq::Mat m(out.vdim[t], out.vdim[s]);
    for (int r = 0; r < x.vdim[t]; ++r)
      for (int c = 0; c < x.vdim[s]; ++c) m.at(r, c) = x.arr[a].at(r, c);
    for (int r = 0; r < y.vdim[t]; ++r)
      for (int c = 0; c < y.vdim[s]; ++c)
        m.at(x.vdim[t] + r, x.vdim[s] + c) = y.arr[a].at(r, c);
    out.arr.push_back(std::move(m));
  }
  return out;
}

// dim Hom(u, v): nullity of the intertwiner constraints
// v_a ∘ φ_s = φ_t ∘ u_a for every arrow a: s → t.
inline int hom_dim(const Quiver& q, const Rep& u, const Rep& v) {
  const int V = q.vertex_count();
  std::vector<int> off(V + 1, 0);
  for (int i = 0; i < V; ++i) off[i + 1] = off[i] + v.vdim[i] * u.vdim[i];
  const int unknowns = off[V];
  int rows = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a)
    rows += v.vdim[q.arrows[a].second] * u.vdim[q.arrows[a].first];
  fq::Mat m(rows, unknowns);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& [s, t] = q.arrows[a];
    const fq::Mat& U = u.arr[a];  // u.vdim[t] × u.vdim[s]
    const fq::Mat& W = v.arr[a];  // v.vdim[t] × v.vdim[s]
    for (int rr = 0; rr < v.vdim[t]; ++rr)
      for (int cc = 0; cc < u.vdim[s]; ++cc) {
        // Σ_k W[rr,k]·φ_s[k,cc] − Σ_k φ_t[rr,k]·U[k,cc] = 0; φ_i stored column-major
        for (int k = 0; k < v.vdim[s]; ++k)
          m.at(row, off[s] + cc * v.vdim[s] + k) =
              fq::norm(m.at(row, off[s] + cc * v.vdim[s] + k) + W.at(rr, k), u.p);
        for (int k = 0; k < u.vdim[t]; ++k)
          m.at(row, off[t] + k * v.vdim[t] + rr) =
              fq::norm(m.at(row, off[t] + k * v.vdim[t] + rr) - U.at(k, cc), u.p);
        ++row;
      }
  }
  return unknowns - fq::rank(std::move(m), u.p);
}

// Isomorphism class of an object: multiplicity of each indecomposable.
struct ObjClass {
  std::vector<int> m;

  ObjClass() = default;
  explicit ObjClass(std::vector<int> mult) : m(std::move(mult)) {}

  bool operator==(const ObjClass&) const = default;
  auto operator<=>(const ObjClass&) const = default;

  bool is_zero() const {
    for (int x : m)
      if (x) return false;
    return true;
  }

  int total_mult() const {
    int out = 0;
    for (int x : m) out += x;
    return out;
  }
};

inline ObjClass zero_class(int n) { return ObjClass(std::vector<int>(n, 0)); }

inline ObjClass indec_class(int n, int id, int mult = 1) {
  ObjClass c = zero_class(n);
  c.m[id] = mult;
  return c;
}

inline ObjClass oplus(const ObjClass& a, const ObjClass& b) {
  ObjClass out = a;
  for (size_t i = 0; i < out.m.size(); ++i) out.m[i] += b.m[i];
  return out;
}

// Work caps. `scale` is the CLI --budget multiplier.
struct Limits {
  unsigned long long max_subspaces = 200000;     // one vertex, one call
  unsigned long long max_tuples = 5000000;       // subspace tuples per subobject count
  unsigned long long max_end_enum = 200000;      // End-space size for the aut oracle
  unsigned long long max_realize_enum = 1 << 20; // exhaustive realize fallback
  int realize_tries = 4000;

  void scale(unsigned long long f) {
    max_subspaces *= f;
    max_tuples *= f;
    max_end_enum *= f;
    max_realize_enum *= f;
  }
};

// A validated quiver together with its knitted AR quiver, the Hom table of the
// indecomposables, and memo caches for representatives and extension counts.
// The caches are guarded, so a Catalog can be shared across threads; results
// are value types and cache writes are idempotent.
struct Catalog {
  Quiver q;
  ARQuiver ar;
  int n = 0;
  std::vector<std::vector<int>> hom;  // hom[i][j] = dim Hom(ind_i, ind_j)
  Limits limits;
  unsigned seed = 0;

  mutable std::unique_ptr<std::recursive_mutex> mu = std::make_unique<std::recursive_mutex>();
  mutable std::map<std::pair<int, int>, Rep> indec_reps;  // (id, p) -> representative
  mutable std::map<std::vector<int>, std::vector<ObjClass>> middles_by_dim;
  mutable std::map<std::tuple<std::vector<int>, std::vector<int>, int>,
                   std::vector<std::pair<ObjClass, unsigned long long>>>
      ext_tables;

  std::vector<int> dimvec(const ObjClass& c) const {
    std::vector<int> out(q.vertex_count(), 0);
    for (int i = 0; i < n; ++i)
      if (c.m[i])
        for (int v = 0; v < q.vertex_count(); ++v) out[v] += c.m[i] * ar.ind[i].dim[v];
    return out;
  }

  int total_dim(const ObjClass& c) const {
    int out = 0;
    for (int v : dimvec(c)) out += v;
    return out;
  }
};

namespace detail {

inline Rep random_rep(const Quiver& q, const std::vector<int>& dim, int p,
                      std::mt19937& rng) {
  Rep r;
  r.p = p;
  r.vdim = dim;
  std::uniform_int_distribution<int> dist(0, p - 1);
  for (const auto& [s, t] : q.arrows) {
    fq::Mat m(dim[t], dim[s]);
    for (int& x : m.a) x = dist(rng);
    r.arr.push_back(std::move(m));
  }
  return r;
}

}  // namespace detail

// Representative of the indecomposable with the given id over F_p: sample arrow
// matrices until End is one-dimensional (deterministic seeding), falling back
// to exhaustive enumeration when the search space is small enough.
inline const Rep& indec_rep(const Catalog& cat, int id, int p) {
  if (!fq::is_supported_prime(p)) throw InputError("unsupported prime " + std::to_string(p));
  std::lock_guard<std::recursive_mutex> lock(*cat.mu);
  const auto key = std::make_pair(id, p);
  if (auto it = cat.indec_reps.find(key); it != cat.indec_reps.end()) return it->second;
  const std::vector<int>& dim = cat.ar.ind[id].dim;
  for (int attempt = 0; attempt < cat.limits.realize_tries; ++attempt) {
    std::seed_seq sq{cat.seed, unsigned(id), unsigned(p), unsigned(attempt)};
    std::mt19937 rng(sq);
    Rep r = detail::random_rep(cat.q, dim, p, rng);
    if (hom_dim(cat.q, r, r) == 1)
      return cat.indec_reps.emplace(key, std::move(r)).first->second;
  }
  // exhaustive fallback over all arrow-matrix tuples
  long long cells = 0;
  for (const auto& [s, t] : cat.q.arrows) cells += (long long)dim[t] * dim[s];
  if (big_pow(p, cells) > BigInt(cat.limits.max_realize_enum))
    throw BudgetExceeded("could not realize an indecomposable of dimension " +
                         dim_label(dim) + " over F_" + std::to_string(p));
  Rep r = zero_rep(cat.q, p);
  r.vdim = dim;
  for (size_t a = 0; a < cat.q.arrows.size(); ++a)
    r.arr[a] = fq::Mat(dim[cat.q.arrows[a].second], dim[cat.q.arrows[a].first]);
  const Rep* found = nullptr;
  std::vector<int*> cells_ptr;
  for (auto& m : r.arr)
    for (int& x : m.a) cells_ptr.push_back(&x);
  std::vector<int> odo(cells_ptr.size(), 0);
  for (;;) {
    if (hom_dim(cat.q, r, r) == 1) {
      found = &cat.indec_reps.emplace(key, r).first->second;
      break;
    }
    size_t pos = 0;
    while (pos < odo.size()) {
      odo[pos] = (odo[pos] + 1) % p;
      *cells_ptr[pos] = odo[pos];
      if (odo[pos] != 0) break;
      ++pos;
    }
    if (pos == odo.size()) break;
  }
  if (!found)
    throw std::logic_error("no indecomposable of dimension " + dim_label(dim) +
                           " exists over F_" + std::to_string(p));
  return *found;
}

// Concrete representative of an isomorphism class (block-diagonal sum of
// indecomposable representatives, ids ascending).
inline Rep realize(const Catalog& cat, const ObjClass& c, int p) {
  Rep out = zero_rep(cat.q, p);
  for (int i = 0; i < cat.n; ++i)
    for (int k = 0; k < c.m[i]; ++k) out = direct_sum(cat.q, out, indec_rep(cat, i, p));
  return out;
}

inline int hom_dim_class(const Catalog& cat, const ObjClass& a, const ObjClass& b) {
  long long out = 0;
  for (int i = 0; i < cat.n; ++i) {
    if (!a.m[i]) continue;
    for (int j = 0; j < cat.n; ++j)
      if (b.m[j]) out += (long long)a.m[i] * b.m[j] * cat.hom[i][j];
  }
  return int(out);
}

// dim Ext¹ between classes, via the homological form: ⟨a,b⟩ = hom − ext¹.
inline int ext1_dim_class(const Catalog& cat, const ObjClass& a, const ObjClass& b) {
  const long long e = hom_dim_class(cat, a, b) - euler_form(cat.q, cat.dimvec(a), cat.dimvec(b));
  if (e < 0) throw std::logic_error("negative Ext dimension — Hom table inconsistent");
  return int(e);
}

// Multiplicities of the indecomposables in m. The Hom table is unitriangular in
// discovery order, so the counts fall out by back-substitution; every
// representation decomposes, so failure here is an internal error.
inline ObjClass decompose(const Catalog& cat, const Rep& m) {
  std::vector<long long> h(cat.n);
  for (int i = 0; i < cat.n; ++i) h[i] = hom_dim(cat.q, indec_rep(cat, i, m.p), m);
  ObjClass out = zero_class(cat.n);
  for (int i = cat.n - 1; i >= 0; --i) {
    long long v = h[i];
    for (int j = i + 1; j < cat.n; ++j) v -= (long long)cat.hom[i][j] * out.m[j];
    if (v < 0) throw std::logic_error("decomposition produced a negative multiplicity");
    out.m[i] = int(v);
  }
  std::vector<int> dim = cat.dimvec(out);
  for (int v = 0; v < cat.q.vertex_count(); ++v)
    if (dim[v] != m.vdim[v])
      throw std::logic_error("decomposition does not match the dimension vector");
  return out;
}

namespace detail {

// Column basis (d × k) from a k × d reduced-row-echelon row basis, plus the
// leading positions.
struct SubspaceBasis {
  fq::Mat cols;
  std::vector<int> leading;
};

inline SubspaceBasis to_column_basis(const fq::Mat& rref_rows) {
  SubspaceBasis out;
  out.cols = fq::transpose(rref_rows);
  for (int r = 0; r < rref_rows.rows; ++r)
    for (int c = 0; c < rref_rows.cols; ++c)
      if (rref_rows.at(r, c) != 0) {
        out.leading.push_back(c);
        break;
      }
  return out;
}

// Solve U·x = w for x (U a column basis); nullopt when w is outside the span.
inline std::optional<std::vector<int>> in_span(const fq::Mat& U, const std::vector<int>& w,
                                               int p) {
  return fq::solve(U, w, p);
}

}  // namespace detail

// Number of subrepresentations of b isomorphic to `sub` with quotient
// isomorphic to `quot`. Enumerates arrow-stable tuples of subspaces.
inline unsigned long long subobject_count(const Catalog& cat, const Rep& b,
                                          const ObjClass& sub, const ObjClass& quot) {
  const int V = cat.q.vertex_count();
  const int p = b.p;
  const std::vector<int> kdim = cat.dimvec(sub);
  const std::vector<int> qdim = cat.dimvec(quot);
  for (int v = 0; v < V; ++v)
    if (kdim[v] + qdim[v] != b.vdim[v] || kdim[v] > b.vdim[v]) return 0;

  unsigned long long tuples = 1;
  for (int v = 0; v < V; ++v) {
    const unsigned long long c =
        fq::gaussian_binomial(b.vdim[v], kdim[v], p, cat.limits.max_tuples);
    if (c > cat.limits.max_tuples || tuples > cat.limits.max_tuples / std::max(1ull, c))
      throw BudgetExceeded("subspace tuple enumeration over budget");
    tuples *= c;
  }

  // candidate subspaces per vertex
  std::vector<std::vector<detail::SubspaceBasis>> cand(V);
  for (int v = 0; v < V; ++v)
    fq::for_each_subspace(b.vdim[v], kdim[v], p, cat.limits.max_subspaces,
                          [&](const fq::Mat& rows) {
                            cand[v].push_back(detail::to_column_basis(rows));
                          });

  // arrows checkable once both endpoints are chosen
  std::vector<std::vector<int>> ready_arrows(V);
  for (size_t a = 0; a < cat.q.arrows.size(); ++a) {
    const auto& [s, t] = cat.q.arrows[a];
    ready_arrows[std::max(s, t)].push_back(int(a));
  }

  unsigned long long count = 0;
  std::vector<const detail::SubspaceBasis*> pick(V, nullptr);

  auto leaf = [&]() {
    // restriction of b to the chosen subspaces, in the chosen bases
    Rep s;
    s.p = p;
    s.vdim = kdim;
    Rep qr;
    qr.p = p;
    qr.vdim = qdim;
    std::vector<std::vector<int>> complement(V);
    for (int v = 0; v < V; ++v) {
      std::vector<bool> lead(b.vdim[v], false);
      for (int r : pick[v]->leading) lead[r] = true;
      for (int r = 0; r < b.vdim[v]; ++r)
        if (!lead[r]) complement[v].push_back(r);
    }
    for (size_t a = 0; a < cat.q.arrows.size(); ++a) {
      const auto& [sv, tv] = cat.q.arrows[a];
      const fq::Mat& U_s = pick[sv]->cols;
      const fq::Mat& U_t = pick[tv]->cols;
      fq::Mat sm(kdim[tv], kdim[sv]);
      for (int c = 0; c < kdim[sv]; ++c) {
        std::vector<int> u(b.vdim[sv]);
        for (int r = 0; r < b.vdim[sv]; ++r) u[r] = U_s.at(r, c);
        auto x = detail::in_span(U_t, fq::apply(b.arr[a], u, p), p);
        if (!x) return;  // not arrow-stable (only reachable when pruning skipped it)
        for (int r = 0; r < kdim[tv]; ++r) sm.at(r, c) = (*x)[r];
      }
      s.arr.push_back(std::move(sm));

      // induced map on the quotient in the complement-coordinate bases:
      // solve [U_t | E_t]·z = b_a·e_r and keep the complement part of z
      const int mt = qdim[tv], ms = qdim[sv];
      fq::Mat qm(mt, ms);
      fq::Mat ext(b.vdim[tv], b.vdim[tv]);
      for (int r = 0; r < b.vdim[tv]; ++r)
        for (int c = 0; c < kdim[tv]; ++c) ext.at(r, c) = U_t.at(r, c);
      for (int c = 0; c < mt; ++c) ext.at(complement[tv][c], kdim[tv] + c) = 1;
      for (int c = 0; c < ms; ++c) {
        std::vector<int> w(b.vdim[tv]);
        for (int r = 0; r < b.vdim[tv]; ++r) w[r] = b.arr[a].at(r, complement[sv][c]);
        auto z = fq::solve(ext, w, p);
        if (!z) throw std::logic_error("quotient basis is not a basis");
        for (int r = 0; r < mt; ++r) qm.at(r, c) = (*z)[kdim[tv] + r];
      }
      qr.arr.push_back(std::move(qm));
    }
    if (decompose(cat, s) == sub && decompose(cat, qr) == quot) ++count;
  };

  auto dfs = [&](auto&& self, int v) -> void {
    if (v == V) {
      leaf();
      return;
    }
    for (const detail::SubspaceBasis& basis : cand[v]) {
      pick[v] = &basis;
      bool ok = true;
      for (int a : ready_arrows[v]) {
        const auto& [sv, tv] = cat.q.arrows[a];
        const fq::Mat& U_s = pick[sv]->cols;
        const fq::Mat& U_t = pick[tv]->cols;
        for (int c = 0; c < U_s.cols && ok; ++c) {
          std::vector<int> u(U_s.rows);
          for (int r = 0; r < U_s.rows; ++r) u[r] = U_s.at(r, c);
          if (!detail::in_span(U_t, fq::apply(b.arr[a], u, p), p)) ok = false;
        }
        if (!ok) break;
      }
      if (ok) self(self, v + 1);
    }
    pick[v] = nullptr;
  };
  dfs(dfs, 0);
  return count;
}

// |Aut(m)| by enumerating the endomorphism space — the oracle route, viable
// only for small End spaces. The closed-form route is aut_order_class below.
inline unsigned long long aut_order_enum(const Catalog& cat, const Rep& m) {
  const int V = cat.q.vertex_count();
  const int p = m.p;
  std::vector<int> off(V + 1, 0);
  for (int i = 0; i < V; ++i) off[i + 1] = off[i] + m.vdim[i] * m.vdim[i];
  const int unknowns = off[V];
  int rows = 0;
  for (size_t a = 0; a < cat.q.arrows.size(); ++a)
    rows += m.vdim[cat.q.arrows[a].second] * m.vdim[cat.q.arrows[a].first];
  fq::Mat con(rows, unknowns);
  int row = 0;
  for (size_t a = 0; a < cat.q.arrows.size(); ++a) {
    const auto& [s, t] = cat.q.arrows[a];
    const fq::Mat& A = m.arr[a];
    for (int rr = 0; rr < m.vdim[t]; ++rr)
      for (int cc = 0; cc < m.vdim[s]; ++cc) {
        for (int k = 0; k < m.vdim[s]; ++k)
          con.at(row, off[s] + cc * m.vdim[s] + k) =
              fq::norm(con.at(row, off[s] + cc * m.vdim[s] + k) + A.at(rr, k), p);
        for (int k = 0; k < m.vdim[t]; ++k)
          con.at(row, off[t] + k * m.vdim[t] + rr) =
              fq::norm(con.at(row, off[t] + k * m.vdim[t] + rr) - A.at(k, cc), p);
        ++row;
      }
  }
  const fq::Mat basis = fq::kernel_basis(std::move(con), p);
  const int e = basis.cols;
  BigInt space = big_pow(p, e);
  if (space > BigInt(cat.limits.max_end_enum))
    throw BudgetExceeded("End-space enumeration over budget: p^" + std::to_string(e));

  unsigned long long count = 0;
  std::vector<int> coeff(e, 0);
  for (;;) {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      fq::Mat phi(m.vdim[v], m.vdim[v]);
      for (int k = 0; k < e; ++k) {
        if (coeff[k] == 0) continue;
        for (int r = 0; r < m.vdim[v]; ++r)
          for (int c = 0; c < m.vdim[v]; ++c)
            phi.at(r, c) = fq::norm(
                phi.at(r, c) + (long long)coeff[k] * basis.at(off[v] + c * m.vdim[v] + r, k),
                p);
      }
      if (!fq::invertible(phi, p)) ok = false;
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < e) {
      coeff[pos] = (coeff[pos] + 1) % p;
      if (coeff[pos] != 0) break;
      ++pos;
    }
    if (pos == e) break;
  }
  return count;
}

inline BigInt gl_order(int m, int p) {
  BigInt out = 1;
  const BigInt pm = big_pow(p, m);
  BigInt pk = 1;
  for (int k = 0; k < m; ++k) {
    out *= pm - pk;
    pk *= p;
  }
  return out;
}

// |Aut| of a class from its decomposition. The category is directed and every
// indecomposable has a one-dimensional End, so End(⊕ U_i^{m_i}) is block
// triangular with GL_{m_i} diagonal blocks and a full affine off-diagonal part.
inline BigInt aut_order_class(const Catalog& cat, const ObjClass& c, int p) {
  BigInt out = 1;
  long long off_diag = 0;
  for (int i = 0; i < cat.n; ++i) {
    if (!c.m[i]) continue;
    out *= gl_order(c.m[i], p);
    for (int j = 0; j < cat.n; ++j)
      if (j != i && c.m[j]) off_diag += (long long)c.m[i] * c.m[j] * cat.hom[i][j];
  }
  return out * big_pow(p, off_diag);
}

// All isomorphism classes with the given dimension vector.
inline const std::vector<ObjClass>& candidate_middles(const Catalog& cat,
                                                      const std::vector<int>& dim) {
  std::lock_guard<std::recursive_mutex> lock(*cat.mu);
  if (auto it = cat.middles_by_dim.find(dim); it != cat.middles_by_dim.end())
    return it->second;
  std::vector<ObjClass> out;
  ObjClass cur = zero_class(cat.n);
  std::vector<int> rem = dim;
  auto dfs = [&](auto&& self, int id) -> void {
    if (id == cat.n) {
      for (int v : rem)
        if (v) return;
      out.push_back(cur);
      return;
    }
    const std::vector<int>& d = cat.ar.ind[id].dim;
    int max_mult = -1;
    for (int v = 0; v < cat.q.vertex_count(); ++v)
      if (d[v] > 0) {
        const int m = rem[v] / d[v];
        if (max_mult < 0 || m < max_mult) max_mult = m;
      }
    for (int k = 0; k <= max_mult; ++k) {
      if (k > 0)
        for (int v = 0; v < cat.q.vertex_count(); ++v) rem[v] -= d[v];
      cur.m[id] = k;
      self(self, id + 1);
    }
    for (int v = 0; v < cat.q.vertex_count(); ++v) rem[v] += max_mult * d[v];
    cur.m[id] = 0;
  };
  dfs(dfs, 0);
  return cat.middles_by_dim.emplace(dim, std::move(out)).first->second;
}

// Extension counts |Ext¹(a,c)_b| for every middle b, computed once per (a,c,p)
// through the subobject/automorphism conversion
//   |Ext¹(a,c)_b| = g·|Hom(a,c)|·|Aut a|·|Aut c| / |Aut b|,
// g = #{b′ ⊆ b : b′ ≅ c, b/b′ ≅ a}, and checked against Σ_b = p^{dim Ext¹(a,c)}.
inline const std::vector<std::pair<ObjClass, unsigned long long>>& ext_table(
    const Catalog& cat, const ObjClass& a, const ObjClass& c, int p) {
  if (!fq::is_supported_prime(p)) throw InputError("unsupported prime " + std::to_string(p));
  std::lock_guard<std::recursive_mutex> lock(*cat.mu);
  const auto key = std::make_tuple(a.m, c.m, p);
  if (auto it = cat.ext_tables.find(key); it != cat.ext_tables.end()) return it->second;

  std::vector<int> dim = cat.dimvec(a);
  const std::vector<int> cd = cat.dimvec(c);
  for (int v = 0; v < cat.q.vertex_count(); ++v) dim[v] += cd[v];

  const BigInt hom_sz = big_pow(p, hom_dim_class(cat, a, c));
  const BigInt aut_ac = aut_order_class(cat, a, p) * aut_order_class(cat, c, p);

  std::vector<std::pair<ObjClass, unsigned long long>> out;
  BigInt total = 0;
  for (const ObjClass& b : candidate_middles(cat, dim)) {
    const unsigned long long g = subobject_count(cat, realize(cat, b, p), c, a);
    if (g == 0) continue;
    const BigInt num = BigInt(g) * hom_sz * aut_ac;
    const BigInt den = aut_order_class(cat, b, p);
    if (num % den != 0)
      throw std::logic_error("extension count is not integral");
    const BigInt cnt = num / den;
    total += cnt;
    out.emplace_back(b, cnt.convert_to<unsigned long long>());
  }
  if (total != big_pow(p, ext1_dim_class(cat, a, c)))
    throw std::logic_error("extension counts do not sum to the Ext space size");
  return cat.ext_tables.emplace(key, std::move(out)).first->second;
}

// All isomorphism classes of total dimension ≤ bound (the zero class included),
// in lexicographic multiplicity order.
inline std::vector<ObjClass> classes_up_to_total_dim(const Catalog& cat, int bound) {
  std::vector<int> tot(cat.n);
  for (int i = 0; i < cat.n; ++i) {
    tot[i] = 0;
    for (int v : cat.ar.ind[i].dim) tot[i] += v;
  }
  std::vector<ObjClass> out;
  ObjClass cur = zero_class(cat.n);
  auto dfs = [&](auto&& self, int id, int left) -> void {
    if (id == cat.n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k * tot[id] <= left; ++k) {
      cur.m[id] = k;
      self(self, id + 1, left - k * tot[id]);
    }
    cur.m[id] = 0;
  };
  dfs(dfs, 0, bound);
  return out;
}

inline unsigned long long ext_count(const Catalog& cat, const ObjClass& a,
                                    const ObjClass& c, const ObjClass& b, int p) {
  for (const auto& [mid, cnt] : ext_table(cat, a, c, p))
    if (mid == b) return cnt;
  return 0;
}

// Build the catalog: knit, realize every indecomposable over F_2, fill the Hom
// table, and assert the structural facts the rest of the library leans on.
inline Catalog build_catalog(Quiver q, unsigned seed = 0, Limits limits = {}) {
  Catalog cat;
  cat.q = std::move(q);
  cat.ar = knit_ar_quiver(cat.q);
  cat.n = cat.ar.count();
  cat.limits = limits;
  cat.seed = seed;
  cat.hom.assign(cat.n, std::vector<int>(cat.n, 0));
  for (int i = 0; i < cat.n; ++i)
    for (int j = 0; j < cat.n; ++j)
      cat.hom[i][j] = hom_dim(cat.q, indec_rep(cat, i, 2), indec_rep(cat, j, 2));
  for (int i = 0; i < cat.n; ++i) {
    if (cat.hom[i][i] != 1)
      throw std::logic_error("indecomposable with a larger End ring");
    for (int j = 0; j < i; ++j)
      if (cat.hom[i][j] != 0)
        throw std::logic_error("Hom table is not triangular in discovery order");
  }
  return cat;
}

inline std::string class_label(const Catalog& cat, const ObjClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < cat.n; ++i) {
    if (!c.m[i]) continue;
    if (!out.empty()) out += "+";
    out += dim_label(cat.ar.ind[i].dim);
    if (c.m[i] > 1) out += "^" + std::to_string(c.m[i]);
  }
  return out;
}

}  // namespace exhall
