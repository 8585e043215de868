#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bing/complex_ops.hpp"
#include "bing/homology.hpp"
#include "bing/map.hpp"

namespace bing {

enum class ImmersionStatus { Immersion, NotImmersion, Degenerate };

struct ImmersionVerdict {
  ImmersionStatus status = ImmersionStatus::Immersion;
  std::optional<int> vertex;  // offending source vertex
  std::optional<Simplex> first, second;

  bool ok() const { return status == ImmersionStatus::Immersion; }
};

/// PL immersion test: f must be injective on every simplex and on the
/// closed star of every source vertex.
inline ImmersionVerdict is_pl_immersion(const SimplicialMap& f) {
  ImmersionVerdict v;
  if (auto d = degeneracy(f)) {
    v.status = ImmersionStatus::Degenerate;
    v.first = *d;
    return v;
  }
  const auto& src = *f.source;
  for (const auto& vert : src.vertices()) {
    std::map<int, int> seen;  // image vertex -> source vertex
    std::map<Simplex, Simplex> images;
    for (int fi : src.facets_at(vert.id)) {
      const auto& s = src.facets()[static_cast<std::size_t>(fi)];
      auto img = f.image(s);
      auto [it, fresh] = images.emplace(img, s);
      if (!fresh) {
        v.status = ImmersionStatus::NotImmersion;
        v.vertex = vert.id;
        v.first = it->second;
        v.second = s;
        return v;
      }
      for (int w : s) {
        auto [jt, ok] = seen.emplace(f(w), w);
        if (!ok && jt->second != w) {
          v.status = ImmersionStatus::NotImmersion;
          v.vertex = vert.id;
          v.first = Simplex{jt->second};
          v.second = Simplex{w};
          return v;
        }
      }
    }
  }
  return v;
}

/// Fiber cardinality over each open top cell of the target, aligned with
/// target.simplices(target.dim()).
struct MultiplicityFunction {
  std::vector<long> m;

  std::map<long, long> histogram() const {
    std::map<long, long> h;
    for (long x : m) ++h[x];
    return h;
  }
  bool constant(long value) const {
    for (long x : m)
      if (x != value) return false;
    return true;
  }
};

/// Number of source simplices mapping onto each simplex of dimension `d`
/// of the target.
inline std::vector<long> fiber_counts(const SimplicialMap& f, int d) {
  const auto& tgt = *f.target;
  std::vector<long> out(tgt.count(d), 0);
  for (const auto& s : f.source->simplices(d)) {
    int idx = tgt.index_of(f.image(s));
    if (idx >= 0 && f.image(s).dim() == d) ++out[static_cast<std::size_t>(idx)];
  }
  return out;
}

/// A pair (face, coface) of target simplices whose fiber counts increase
/// from the face to the coface, if any.
inline std::optional<std::pair<Simplex, Simplex>> semicontinuity_violation(const SimplicialMap& f) {
  const auto& tgt = *f.target;
  std::vector<std::vector<long>> counts;
  for (int d = 0; d <= tgt.dim(); ++d) counts.push_back(fiber_counts(f, d));
  for (int d = 1; d <= tgt.dim(); ++d)
    for (std::size_t i = 0; i < tgt.count(d); ++i) {
      const auto& s = tgt.simplices(d)[i];
      for (std::size_t k = 0; k < s.size(); ++k) {
        auto face = s.facet(k);
        if (counts[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(tgt.index_of(face))] <
            counts[static_cast<std::size_t>(d)][i])
          return std::make_pair(face, s);
      }
    }
  return std::nullopt;
}

inline MultiplicityFunction multiplicity(const SimplicialMap& f) {
  return {fiber_counts(f, f.target->dim())};
}

struct AdditivityVerdict {
  bool ok = true;
  std::optional<Simplex> witness;  // codimension-one face with odd weight sum
};

/// Switch condition: around every codimension-one face the weights sum to
/// an even number, i.e. the weighted top chain is a Z/2 cycle.
inline AdditivityVerdict additivity_check(const SimplicialComplex& target, const std::vector<long>& weights) {
  AdditivityVerdict v;
  auto b = z2_boundary(target, weights);
  if (!b.empty()) {
    v.ok = false;
    v.witness = b.front();
  }
  return v;
}

inline AdditivityVerdict additivity_check(const SimplicialMap& f, const MultiplicityFunction& m) {
  return additivity_check(*f.target, m.m);
}

/// Weights on the top cells of a complex.
struct SheetChain {
  std::vector<long> weights;

  static SheetChain ones(const SimplicialComplex& k) { return {std::vector<long>(k.count(k.dim()), 1)}; }
  static SheetChain from_multiplicity(const MultiplicityFunction& m) { return {m.m}; }
};

inline bool z2_cycle_test(const SimplicialComplex& y, const SheetChain& c) { return z2_boundary(y, c.weights).empty(); }

/// Image of the source's all-ones Z/2 chain: each target top cell gets the
/// parity of its preimage count.
inline SheetChain pushforward_fundamental(const SimplicialMap& f) {
  SheetChain c;
  const auto& tgt = *f.target;
  c.weights.assign(tgt.count(tgt.dim()), 0);
  for (const auto& s : f.source->simplices(f.source->dim())) {
    int idx = tgt.index_of(f.image(s));
    if (idx >= 0) c.weights[static_cast<std::size_t>(idx)] ^= 1;
  }
  return c;
}

/// The greatest common divisor of m over the image, and m divided by it.
inline std::pair<long, SheetChain> reduced_weights(const MultiplicityFunction& m) {
  long g = 0;
  for (long x : m.m) g = std::gcd(g, x);
  SheetChain c;
  for (long x : m.m) c.weights.push_back(g ? x / g : 0);
  return {g, c};
}

// ---------------------------------------------------------------------------
// Local models.

enum class LocalModel { Sheet, Triple, ConeK4 };

inline const char* to_string(LocalModel m) {
  switch (m) {
    case LocalModel::Sheet: return "sheet";
    case LocalModel::Triple: return "triple";
    default: return "cone_k4";
  }
}

namespace detail {

/// A graph with degree-2 vertices smoothed away: branch vertices and the
/// arcs between them. Circle components without branch points are counted
/// separately.
struct SmoothedGraph {
  std::vector<int> branch;                 // branch vertex ids
  std::map<int, int> degree;               // for branch vertices
  std::vector<std::pair<int, int>> arcs;   // endpoints (branch ids)
  std::vector<std::vector<Simplex>> arc_edges;
  int circles = 0;
};

inline SmoothedGraph smooth(const std::vector<Simplex>& edges) {
  SmoothedGraph g;
  std::map<int, std::vector<int>> adj;
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::set<Simplex> used;
  for (auto& [v, n] : adj)
    if (n.size() != 2) {
      g.branch.push_back(v);
      g.degree[v] = static_cast<int>(n.size());
    }
  for (int b : g.branch)
    for (int first : adj[b]) {
      if (used.count(Simplex{b, first})) continue;
      std::vector<Simplex> path{Simplex{b, first}};
      used.insert(Simplex{b, first});
      int prev = b, cur = first;
      while (adj[cur].size() == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (adj[cur][0] == adj[cur][1]) nxt = adj[cur][0];
        path.push_back(Simplex{cur, nxt});
        used.insert(Simplex{cur, nxt});
        prev = cur;
        cur = nxt;
      }
      g.arcs.push_back({b, cur});
      g.arc_edges.push_back(std::move(path));
    }
  // Remaining edges form circles of degree-2 vertices.
  std::vector<Simplex> rest;
  for (const auto& e : edges)
    if (!used.count(e)) rest.push_back(e);
  if (!rest.empty()) g.circles = components(SimplicialComplex::from_tops(rest)).second;
  return g;
}

inline std::optional<LocalModel> classify_graph_link(const SimplicialComplex& lk) {
  if (lk.dim() != 1 || !lk.is_pure() || !is_connected(lk)) return std::nullopt;
  auto g = smooth(lk.simplices(1));
  if (g.branch.empty() && g.circles == 1) return LocalModel::Sheet;
  if (g.circles != 0) return std::nullopt;
  for (auto [v, d] : g.degree)
    if (d != 3) return std::nullopt;
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b] : g.arcs) {
    if (a == b) return std::nullopt;
    pairs.insert({std::min(a, b), std::max(a, b)});
  }
  if (g.branch.size() == 2 && g.arcs.size() == 3) return LocalModel::Triple;
  if (g.branch.size() == 4 && g.arcs.size() == 6 && pairs.size() == 6) return LocalModel::ConeK4;
  return std::nullopt;
}

/// Regions of a 2-complex cut along its singular edges, each returned as
/// its list of triangles.
inline std::vector<std::vector<Simplex>> regions(const SimplicialComplex& lk, const std::vector<char>& singular_edge) {
  const auto& tris = lk.simplices(2);
  std::vector<int> parent(tris.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto co = cofaces(lk, 1);
  for (std::size_t e = 0; e < co.size(); ++e)
    if (!singular_edge[e] && co[e].size() == 2) parent[find(co[e][0])] = find(co[e][1]);
  std::map<int, std::vector<Simplex>> by_root;
  for (std::size_t t = 0; t < tris.size(); ++t) by_root[find(static_cast<int>(t))].push_back(tris[t]);
  std::vector<std::vector<Simplex>> out;
  for (auto& [r, ts] : by_root) out.push_back(std::move(ts));
  return out;
}

inline std::optional<LocalModel> classify_surface_link(const SimplicialComplex& lk) {
  if (lk.dim() != 2 || !lk.is_pure()) return std::nullopt;
  auto co = cofaces(lk, 1);
  std::vector<char> singular(co.size(), 0);
  std::vector<Simplex> sing_edges;
  for (std::size_t e = 0; e < co.size(); ++e) {
    if (co[e].size() == 2) continue;
    if (co[e].size() != 3) return std::nullopt;
    singular[e] = 1;
    sing_edges.push_back(lk.simplices(1)[e]);
  }
  if (sing_edges.empty()) {
    if (classify_surface(lk).is_sphere()) return LocalModel::Sheet;
    return std::nullopt;
  }
  auto g = smooth(sing_edges);
  auto regs = regions(lk, singular);
  for (const auto& r : regs)
    if (!classify_surface(SimplicialComplex::from_tops(r)).is_disk()) return std::nullopt;
  if (g.branch.empty() && g.circles == 1 && regs.size() == 3) return LocalModel::Triple;
  if (g.circles != 0 || g.branch.size() != 2 || g.arcs.size() != 4 || regs.size() != 6) return std::nullopt;
  for (auto [v, d] : g.degree)
    if (d != 4) return std::nullopt;
  for (auto [a, b] : g.arcs)
    if (a == b) return std::nullopt;
  // Suspension of K4: every pair of arcs bounds exactly one region.
  std::map<Simplex, int> arc_of_edge;
  for (std::size_t a = 0; a < g.arc_edges.size(); ++a)
    for (const auto& e : g.arc_edges[a]) arc_of_edge[e] = static_cast<int>(a);
  std::set<std::pair<int, int>> pairs;
  for (const auto& r : regs) {
    std::set<int> arcs;
    for (const auto& t : r)
      for (std::size_t i = 0; i < 3; ++i) {
        auto it = arc_of_edge.find(t.facet(i));
        if (it != arc_of_edge.end()) arcs.insert(it->second);
      }
    if (arcs.size() != 2) return std::nullopt;
    pairs.insert({*arcs.begin(), *arcs.rbegin()});
  }
  if (pairs.size() != 6) return std::nullopt;
  return LocalModel::ConeK4;
}

}  // namespace detail

/// Local model of a vertex of a 2- or 3-dimensional image complex, read off
/// from its link.
inline std::optional<LocalModel> classify_vertex(const SimplicialComplex& y, int vertex) {
  auto lk = link_of(y, vertex);
  if (y.dim() == 2) return detail::classify_graph_link(lk);
  if (y.dim() == 3) return detail::classify_surface_link(lk);
  return std::nullopt;
}

struct LocalModelCensus {
  std::map<std::string, long> counts;
  std::map<int, LocalModel> per_vertex;
};

inline LocalModelCensus local_model_census(const SimplicialComplex& y) {
  LocalModelCensus c;
  for (auto m : {LocalModel::Sheet, LocalModel::Triple, LocalModel::ConeK4}) c.counts[to_string(m)] = 0;
  for (const auto& v : y.vertices()) {
    auto m = classify_vertex(y, v.id);
    if (!m) {
      std::ostringstream os;
      os << "unclassifiable link at vertex " << v.id << (v.tag.empty() ? "" : " (" + v.tag + ")") << ":";
      for (const auto& f : link_of(y, v.id).facets()) os << ' ' << f;
      throw TopologyError(os.str());
    }
    c.per_vertex[v.id] = *m;
    ++c.counts[to_string(*m)];
  }
  return c;
}

}  // namespace bing
