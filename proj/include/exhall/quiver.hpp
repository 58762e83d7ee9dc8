#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exhall/docparse.hpp"
#include "exhall/errors.hpp"

namespace exhall {

struct CyclicQuiverError : InputError {
  using InputError::InputError;
};

struct NotDynkinError : InputError {
  using InputError::InputError;
};

// A finite quiver with labelled vertices. Validation accepts exactly the
// acyclic orientations of simply-laced Dynkin diagrams (disjoint unions of
// A/D/E trees); everything downstream relies on that.
struct Quiver {
  std::vector<std::string> labels;           // input order
  std::vector<std::pair<int, int>> arrows;   // (source, target) vertex indices
  std::map<std::string, std::string> aliases;  // optional name -> dim-vector label

  int vertex_count() const { return int(labels.size()); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (labels[i] == label) return i;
    throw InputError("unknown vertex label '" + label + "'");
  }
};

struct DynkinComponent {
  char family = 'A';          // 'A', 'D' or 'E'
  int rank = 0;               // number of vertices
  std::vector<int> vertices;  // quiver vertex indices, ascending
};

namespace detail {

inline std::string atom_or_fail(const DocValue& v, const char* what) {
  if (!v.is_atom()) throw InputError(std::string("expected ") + what);
  return v.atom;
}

}  // namespace detail

// vertices: [a, b, ...], arrows: [[a,b], ...], aliases: {name: label, ...}
inline Quiver parse_quiver(const std::string& text) {
  const DocValue doc = parse_document(text);
  if (!doc.is_map()) throw InputError("quiver document must be a map");
  Quiver q;
  const DocValue* vs = doc.find("vertices");
  if (!vs || !vs->is_list()) throw InputError("quiver document needs a 'vertices' list");
  for (const DocValue& v : vs->list) {
    std::string lab = detail::atom_or_fail(v, "a vertex label");
    if (lab.empty()) throw InputError("vertex labels must be nonempty");
    if (std::find(q.labels.begin(), q.labels.end(), lab) != q.labels.end())
      throw InputError("duplicate vertex label '" + lab + "'");
    q.labels.push_back(std::move(lab));
  }
  if (q.labels.empty()) throw InputError("quiver needs at least one vertex");
  const DocValue* as = doc.find("arrows");
  if (!as || !as->is_list()) throw InputError("quiver document needs an 'arrows' list");
  for (const DocValue& a : as->list) {
    if (!a.is_list() || a.list.size() != 2)
      throw InputError("each arrow must be a [source, target] pair");
    const int s = q.index_of(detail::atom_or_fail(a.list[0], "a vertex label"));
    const int t = q.index_of(detail::atom_or_fail(a.list[1], "a vertex label"));
    q.arrows.emplace_back(s, t);
  }
  if (const DocValue* al = doc.find("aliases")) {
    if (!al->is_map()) throw InputError("'aliases' must be a map");
    for (const auto& [name, val] : al->map)
      q.aliases[name] = detail::atom_or_fail(val, "a dimension-vector label");
  }
  for (const auto& [key, unused] : doc.map)
    if (key != "vertices" && key != "arrows" && key != "aliases")
      throw InputError("unknown key '" + key + "' in quiver document");
  return q;
}

// Connected components of the underlying graph, each classified as A/D/E.
// Throws NotDynkinError when any component is not a simply-laced Dynkin tree.
inline std::vector<DynkinComponent> classify_components(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const auto& [s, t] : q.arrows) {
    if (s == t) throw NotDynkinError("loop at vertex '" + q.labels[s] + "'");
    if (adj[s].count(t))
      throw NotDynkinError("multiple edges between '" + q.labels[s] + "' and '" +
                           q.labels[t] + "'");
    adj[s].insert(t);
    adj[t].insert(s);
  }
  std::vector<int> comp(n, -1);
  int comp_count = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = comp_count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = comp_count;
          stack.push_back(w);
        }
    }
    ++comp_count;
  }
  std::vector<DynkinComponent> out(comp_count);
  for (int v = 0; v < n; ++v) out[comp[v]].vertices.push_back(v);
  std::vector<int> edge_count(comp_count, 0);
  for (const auto& [s, t] : q.arrows) ++edge_count[comp[s]];

  for (int c = 0; c < comp_count; ++c) {
    DynkinComponent& dc = out[c];
    dc.rank = int(dc.vertices.size());
    if (edge_count[c] != dc.rank - 1)
      throw NotDynkinError("component containing '" + q.labels[dc.vertices[0]] +
                           "' has a cycle in its underlying graph");
    // a tree; count degrees
    std::vector<int> deg;
    int branch = -1;
    for (int v : dc.vertices) deg.push_back(int(adj[v].size()));
    int deg3 = 0;
    for (size_t i = 0; i < deg.size(); ++i) {
      if (deg[i] >= 4)
        throw NotDynkinError("vertex '" + q.labels[dc.vertices[i]] + "' has degree " +
                             std::to_string(deg[i]));
      if (deg[i] == 3) {
        ++deg3;
        branch = dc.vertices[i];
      }
    }
    if (deg3 > 1)
      throw NotDynkinError("component containing '" + q.labels[dc.vertices[0]] +
                           "' has more than one branch vertex");
    if (deg3 == 0) {
      dc.family = 'A';
      continue;
    }
    // branch lengths from the degree-3 vertex
    std::vector<int> arm;
    for (int w0 : adj[branch]) {
      int len = 1, prev = branch, cur = w0;
      for (;;) {
        std::vector<int> next;
        for (int w : adj[cur])
          if (w != prev) next.push_back(w);
        if (next.empty()) break;
        prev = cur;
        cur = next[0];
        ++len;
      }
      arm.push_back(len);
    }
    std::sort(arm.begin(), arm.end());
    if (arm[0] != 1)
      throw NotDynkinError("branch arms of lengths " + std::to_string(arm[0]) + "," +
                           std::to_string(arm[1]) + "," + std::to_string(arm[2]) +
                           " do not form a Dynkin tree");
    if (arm[1] == 1) {
      dc.family = 'D';
    } else if (arm[1] == 2 && arm[2] >= 2 && arm[2] <= 4) {
      dc.family = 'E';
    } else {
      throw NotDynkinError("branch arms of lengths 1," + std::to_string(arm[1]) + "," +
                           std::to_string(arm[2]) + " do not form a Dynkin tree");
    }
  }
  return out;
}

inline long long positive_root_count(const DynkinComponent& c) {
  switch (c.family) {
    case 'A': return (long long)c.rank * (c.rank + 1) / 2;
    case 'D': return (long long)c.rank * (c.rank - 1);
    default:  return c.rank == 6 ? 36 : c.rank == 7 ? 63 : 120;
  }
}

// Topological order of vertices; throws CyclicQuiverError on directed cycles.
inline std::vector<int> topological_order(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> indeg(n, 0), order;
  for (const auto& [s, t] : q.arrows) {
    if (s == t) throw CyclicQuiverError("loop at vertex '" + q.labels[s] + "'");
    ++indeg[t];
  }
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw CyclicQuiverError("quiver has a directed cycle");
    done[pick] = true;
    order.push_back(pick);
    for (const auto& [s, t] : q.arrows)
      if (s == pick) --indeg[t];
  }
  return order;
}

// Full validation: acyclic orientation of a disjoint union of A/D/E trees.
inline std::vector<DynkinComponent> validate_dynkin(const Quiver& q) {
  topological_order(q);
  return classify_components(q);
}

// ⟨d,e⟩ = Σ_i d_i e_i − Σ_{a: i→j} d_i e_j. For representations M, N with these
// dimension vectors this equals dim Hom(M,N) − dim Ext¹(M,N).
inline long long euler_form(const Quiver& q, const std::vector<int>& d,
                            const std::vector<int>& e) {
  if (int(d.size()) != q.vertex_count() || int(e.size()) != q.vertex_count())
    throw InputError("dimension vector length does not match the vertex count");
  long long out = 0;
  for (int i = 0; i < q.vertex_count(); ++i) out += (long long)d[i] * e[i];
  for (const auto& [s, t] : q.arrows) out -= (long long)d[s] * e[t];
  return out;
}

inline long long tits_form(const Quiver& q, const std::vector<int>& d) {
  return euler_form(q, d, d);
}

struct Indec {
  std::vector<int> dim;
  bool projective = false;
  bool injective = false;
};

// One almost-split conflation tau_end ↣ ⊕ middles ↠ end. Middles store
// (indecomposable id, multiplicity); ids in a mesh are always smaller than `end`.
struct Mesh {
  int tau_end = -1;
  std::vector<std::pair<int, int>> middle;
  int end = -1;
};

struct ARQuiver {
  std::vector<Indec> ind;     // discovery order; see knit_ar_quiver
  std::vector<Mesh> meshes;   // knitting order; one mesh per non-projective end
  std::vector<int> proj_ids;  // ids of the indecomposable projectives
  std::vector<int> inj_ids;   // ids of the indecomposable injectives

  int count() const { return int(ind.size()); }

  // id of the mesh ending at indecomposable u, or -1 when u is projective
  std::vector<int> end_mesh;
};

inline std::string dim_label(const std::vector<int>& dim) {
  std::string out;
  for (size_t i = 0; i < dim.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(dim[i]);
  }
  return out;
}

// Knit the Auslander–Reiten quiver from the projectives. Discovery order is a
// directed order: a nonzero map between nonisomorphic indecomposables only goes
// from a smaller id to a larger one. The projectives are seeded sinks-first to
// make that hold; every later object is produced as the end of its mesh, built
// strictly from already-known objects.
inline ARQuiver knit_ar_quiver(const Quiver& q) {
  const std::vector<DynkinComponent> comps = validate_dynkin(q);
  const int n = q.vertex_count();

  // dim P_v = indicator of vertices reachable from v; dim I_v = co-reachable
  std::vector<std::vector<int>> reach(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> coreach(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v) {
    std::vector<int> stack{v};
    reach[v][v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [s, t] : q.arrows)
        if (s == u && !reach[v][t]) {
          reach[v][t] = 1;
          stack.push_back(t);
        }
    }
  }
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) coreach[v][w] = reach[w][v];

  ARQuiver ar;
  std::map<std::vector<int>, int> id_of;
  std::set<std::vector<int>> inj_dims;
  for (int v = 0; v < n; ++v) inj_dims.insert(coreach[v]);

  // seed projectives sinks-first: order vertices by longest path to a sink,
  // ties by input index. Any nonzero map P_a → P_b forces a path b ⇝ a, hence a
  // strictly smaller height for a, so the seeding is a directed order.
  std::vector<int> topo = topological_order(q);
  std::vector<int> height(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (const auto& [s, t] : q.arrows)
      if (s == *it) height[s] = std::max(height[s], height[t] + 1);
  std::vector<int> seed_order(n);
  for (int v = 0; v < n; ++v) seed_order[v] = v;
  std::stable_sort(seed_order.begin(), seed_order.end(),
                   [&](int a, int b) { return height[a] < height[b]; });
  std::vector<int> proj_id_of_vertex(n, -1);
  for (const int v : seed_order) {
    Indec ind;
    ind.dim = reach[v];
    ind.projective = true;
    ind.injective = inj_dims.count(ind.dim) > 0;
    proj_id_of_vertex[v] = ar.count();
    id_of[ind.dim] = ar.count();
    ar.ind.push_back(std::move(ind));
  }
  for (int i = 0; i < ar.count(); ++i) ar.proj_ids.push_back(i);

  // irreducible maps already known to point *into* each object: P_j → P_i for
  // every arrow i→j (rad P_i = ⊕ P_j), then mesh middles as meshes are knitted
  std::vector<std::vector<std::pair<int, int>>> in_arrows(ar.count());
  for (const auto& [s, t] : q.arrows)
    in_arrows[proj_id_of_vertex[s]].emplace_back(proj_id_of_vertex[t], 1);

  std::vector<bool> resolved(ar.count(), false);
  std::vector<int> tau_inverse(ar.count(), -1);
  ar.end_mesh.assign(ar.count(), -1);

  const long long expected = [&] {
    long long total = 0;
    for (const DynkinComponent& c : comps) total += positive_root_count(c);
    return total;
  }();

  for (;;) {
    int x = -1;
    for (int i = 0; i < ar.count(); ++i) {
      if (resolved[i]) continue;
      bool ready = true;
      for (const auto& [w, mult] : in_arrows[i])
        if (!resolved[w]) {
          ready = false;
          break;
        }
      if (ready) {
        x = i;
        break;
      }
    }
    if (x < 0) break;
    resolved[x] = true;
    if (ar.ind[x].injective) continue;

    Mesh mesh;
    mesh.tau_end = x;
    // middles: projective successors (x = P_j sits in rad P_i for arrows i→j),
    // plus τ⁻ of every non-injective object with an irreducible map into x
    for (int v = 0; v < n; ++v)
      if (proj_id_of_vertex[v] == x)
        for (const auto& [s, t] : q.arrows)
          if (t == v) mesh.middle.emplace_back(proj_id_of_vertex[s], 1);
    for (const auto& [w, mult] : in_arrows[x])
      if (!ar.ind[w].injective) mesh.middle.emplace_back(tau_inverse[w], mult);
    std::sort(mesh.middle.begin(), mesh.middle.end());

    std::vector<int> dim(n, 0);
    for (const auto& [m, mult] : mesh.middle)
      for (int v = 0; v < n; ++v) dim[v] += mult * ar.ind[m].dim[v];
    bool positive = false;
    for (int v = 0; v < n; ++v) {
      dim[v] -= ar.ind[x].dim[v];
      if (dim[v] < 0) throw std::logic_error("knitting produced a negative dimension");
      if (dim[v] > 0) positive = true;
    }
    if (!positive) throw std::logic_error("knitting produced the zero object");
    if (id_of.count(dim)) throw std::logic_error("knitting revisited a dimension vector");

    Indec ind;
    ind.dim = dim;
    ind.injective = inj_dims.count(dim) > 0;
    const int y = ar.count();
    id_of[dim] = y;
    tau_inverse[x] = y;
    ar.ind.push_back(std::move(ind));
    in_arrows.push_back(mesh.middle);
    resolved.push_back(false);
    tau_inverse.push_back(-1);
    ar.end_mesh.push_back(int(ar.meshes.size()));
    mesh.end = y;
    ar.meshes.push_back(std::move(mesh));
    if (ar.count() > expected) throw std::logic_error("knitting exceeded the root count");
  }

  for (int i = 0; i < ar.count(); ++i) {
    if (!resolved[i]) throw std::logic_error("knitting stalled before resolving every object");
    if (ar.ind[i].injective) ar.inj_ids.push_back(i);
  }

  // cross-check against the root system: every dimension vector is a positive
  // root and the counts per component match the classification
  if (ar.count() != expected) throw std::logic_error("knitting missed positive roots");
  for (const Indec& ind : ar.ind)
    if (tits_form(q, ind.dim) != 1)
      throw std::logic_error("knitted object is not a positive root");
  if (int(ar.meshes.size()) != ar.count() - n)
    throw std::logic_error("mesh count does not match non-projective count");
  return ar;
}

}  // namespace exhall
