#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bing/complex.hpp"

namespace bing {

struct ValidityReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

namespace detail {
inline std::string str(const Simplex& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}
}  // namespace detail

/// Orientation sign induced on facet `i` of a top cell carrying sign `sign`.
inline int induced_sign(int sign, std::size_t i) { return sign * facet_sign(i); }

inline ValidityReport validate(const SimplicialComplex& k) {
  ValidityReport r;
  std::set<int> ids;
  for (const auto& v : k.vertices())
    if (!ids.insert(v.id).second) r.issues.push_back("duplicate vertex id " + std::to_string(v.id));
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.simplices(d)) {
      if (s.has_duplicates()) {
        r.issues.push_back("simplex lists a vertex twice: " + detail::str(s));
        continue;
      }
      for (int id : s)
        if (!ids.count(id)) r.issues.push_back("unknown vertex " + std::to_string(id) + " in " + detail::str(s));
      if (d == 0) continue;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!k.contains(s.facet(i)))
          r.issues.push_back("closure violation: missing " + detail::str(s.facet(i)) + " of " + detail::str(s));
    }
  }
  if (k.orientation()) {
    const auto& o = *k.orientation();
    const int d = k.dim();
    if (o.size() != k.count(d)) {
      r.issues.push_back("orientation length does not match top cell count");
    } else {
      std::unordered_map<Simplex, int, SimplexHash> sum, deg;
      const auto& tops = k.simplices(d);
      for (std::size_t j = 0; j < tops.size(); ++j) {
        if (o[j] != 1 && o[j] != -1) r.issues.push_back("orientation sign not +-1 at " + detail::str(tops[j]));
        for (std::size_t i = 0; i < tops[j].size(); ++i) {
          sum[tops[j].facet(i)] += induced_sign(o[j], i);
          deg[tops[j].facet(i)] += 1;
        }
      }
      for (const auto& [f, s] : sum)
        if (deg[f] == 2 && s != 0) r.issues.push_back("orientation inconsistent across " + detail::str(f));
    }
  }
  return r;
}

struct StarLink {
  SimplicialComplex star;
  SimplicialComplex link;
};

inline StarLink star_link(const SimplicialComplex& k, int vertex) {
  if (!k.find_vertex(vertex)) throw TopologyError("vertex not found: " + std::to_string(vertex));
  std::vector<Simplex> star_tops, link_tops;
  for (int fi : k.facets_at(vertex)) {
    const auto& f = k.facets()[static_cast<std::size_t>(fi)];
    star_tops.push_back(f);
    Simplex l = f.without(vertex);
    if (!l.empty()) link_tops.push_back(l);
  }
  return {k.subcomplex(star_tops), link_tops.empty() ? SimplicialComplex{} : k.subcomplex(link_tops)};
}

/// Link of `vertex` without materializing the star.
inline SimplicialComplex link_of(const SimplicialComplex& k, int vertex) {
  std::vector<Simplex> tops;
  for (int fi : k.facets_at(vertex)) {
    Simplex l = k.facets()[static_cast<std::size_t>(fi)].without(vertex);
    if (!l.empty()) tops.push_back(l);
  }
  return SimplicialComplex::from_tops(tops);
}

/// Connected components of the 1-skeleton; returns a component index per
/// vertex (aligned with k.vertices()) and the component count.
inline std::pair<std::vector<int>, int> components(const SimplicialComplex& k) {
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < k.vertices().size(); ++i) pos[k.vertices()[i].id] = static_cast<int>(i);
  std::vector<int> parent(k.vertices().size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : k.simplices(1)) parent[find(pos[e[0]])] = find(pos[e[1]]);
  std::vector<int> comp(parent.size());
  std::map<int, int> label;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto [it, fresh] = label.emplace(root, static_cast<int>(label.size()));
    comp[i] = it->second;
  }
  return {comp, static_cast<int>(label.size())};
}

inline bool is_connected(const SimplicialComplex& k) { return !k.empty() && components(k).second == 1; }

/// Coherent orientation of a pure complex whose codimension-one faces have
/// at most two cofaces. Returns nullopt if no coherent choice exists.
inline std::optional<std::vector<int>> orient(const SimplicialComplex& k) {
  const int d = k.dim();
  if (d < 0) return std::vector<int>{};
  const auto& tops = k.simplices(d);
  std::unordered_map<Simplex, std::vector<std::pair<int, std::size_t>>, SimplexHash> by_face;
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (std::size_t i = 0; i < tops[j].size(); ++i) by_face[tops[j].facet(i)].push_back({static_cast<int>(j), i});
  std::vector<int> sign(tops.size(), 0);
  for (std::size_t start = 0; start < tops.size(); ++start) {
    if (sign[start]) continue;
    sign[start] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
      int j = q.front();
      q.pop();
      for (std::size_t i = 0; i < tops[j].size(); ++i) {
        const auto& adj = by_face[tops[j].facet(i)];
        if (adj.size() > 2) return std::nullopt;
        for (auto [other, oi] : adj) {
          if (other == j) continue;
          int want = -induced_sign(sign[j], i) * facet_sign(oi);
          if (sign[other] == 0) {
            sign[other] = want;
            q.push(other);
          } else if (sign[other] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return sign;
}

struct SurfaceInfo {
  bool is_surface = false;  // pure 2-dim, every edge in 1 or 2 triangles, vertex links arcs/circles
  bool closed = false;
  bool connected = false;
  bool orientable = false;
  long euler = 0;
  int boundary_components = 0;

  bool is_sphere() const { return is_surface && closed && connected && orientable && euler == 2; }
  bool is_disk() const { return is_surface && connected && boundary_components == 1 && euler == 1; }
};

/// Classifies a 2-complex as a compact surface, if it is one.
inline SurfaceInfo classify_surface(const SimplicialComplex& k) {
  SurfaceInfo info;
  info.euler = euler_characteristic(k);
  if (k.dim() != 2 || !k.is_pure()) return info;
  auto co = cofaces(k, 1);
  std::vector<Simplex> bdry_edges;
  for (std::size_t e = 0; e < co.size(); ++e) {
    if (co[e].empty() || co[e].size() > 2) return info;
    if (co[e].size() == 1) bdry_edges.push_back(k.simplices(1)[e]);
  }
  // Vertex links must be a single arc or circle.
  for (const auto& v : k.vertices()) {
    auto lk = link_of(k, v.id);
    if (lk.dim() != 1 || !is_connected(lk)) return info;
    int ends = 0;
    std::unordered_map<int, int> deg;
    for (const auto& e : lk.simplices(1)) {
      ++deg[e[0]];
      ++deg[e[1]];
    }
    for (auto [id, dg] : deg) {
      if (dg > 2) return info;
      if (dg == 1) ++ends;
    }
    if (ends != 0 && ends != 2) return info;
  }
  info.is_surface = true;
  info.closed = bdry_edges.empty();
  info.connected = is_connected(k);
  info.orientable = orient(k).has_value();
  if (!bdry_edges.empty()) info.boundary_components = components(SimplicialComplex::from_tops(bdry_edges)).second;
  return info;
}

struct PseudomanifoldVerdict {
  bool ok = false;
  std::optional<Simplex> witness;
  std::string reason;
};

/// Closed pseudomanifold test; in dimension 3 also checks that every vertex
/// link is a 2-sphere.
inline PseudomanifoldVerdict is_closed_pseudomanifold(const SimplicialComplex& k, int d) {
  PseudomanifoldVerdict v;
  if (k.dim() != d) {
    v.reason = "dimension is " + std::to_string(k.dim());
    return v;
  }
  for (const auto& f : k.facets())
    if (f.dim() != d) {
      v.witness = f;
      v.reason = "not pure";
      return v;
    }
  auto co = cofaces(k, d - 1);
  for (std::size_t i = 0; i < co.size(); ++i)
    if (co[i].size() != 2) {
      v.witness = k.simplices(d - 1)[i];
      v.reason = "codimension-one face with " + std::to_string(co[i].size()) + " cofaces";
      return v;
    }
  // Strong connectivity: top cells adjacent through shared codim-1 faces.
  const auto& tops = k.simplices(d);
  std::vector<int> parent(tops.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& c : co) parent[find(c[0])] = find(c[1]);
  for (std::size_t j = 1; j < tops.size(); ++j)
    if (find(static_cast<int>(j)) != find(0)) {
      v.witness = tops[j];
      v.reason = "not strongly connected";
      return v;
    }
  if (d == 3) {
    for (const auto& vert : k.vertices()) {
      if (!classify_surface(link_of(k, vert.id)).is_sphere()) {
        v.witness = Simplex{vert.id};
        v.reason = "vertex link is not a 2-sphere";
        return v;
      }
    }
  }
  v.ok = true;
  return v;
}

/// Calls `fn` on every maximal simplex of the staircase triangulation of
/// sigma x tau, with product vertex ids given by `pair_id(a, b)`.
template <typename PairId, typename Fn>
void staircase(const Simplex& sigma, const Simplex& tau, PairId&& pair_id, Fn&& fn) {
  const std::size_t p = sigma.size() - 1, q = tau.size() - 1;
  std::vector<int> ids;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    ids.push_back(pair_id(sigma[i], tau[j]));
    if (i == p && j == q) {
      fn(Simplex(ids.begin(), ids.end()));
    } else {
      if (i < p) walk(i + 1, j);
      if (j < q) walk(i, j + 1);
    }
    ids.pop_back();
  };
  walk(0, 0);
}

struct ProductResult {
  SimplicialComplex complex;
  std::map<int, int> to_first;   // product vertex -> vertex of K
  std::map<int, int> to_second;  // product vertex -> vertex of L
  std::map<std::pair<int, int>, int> pair_id;
};

/// Staircase triangulation of |K| x |L|, with both factors ordered by
/// vertex id.
inline ProductResult product(const SimplicialComplex& k, const SimplicialComplex& l) {
  ProductResult r;
  std::vector<Vertex> vs;
  const int nl = static_cast<int>(l.num_vertices());
  for (std::size_t a = 0; a < k.num_vertices(); ++a)
    for (std::size_t b = 0; b < l.num_vertices(); ++b) {
      int id = static_cast<int>(a) * nl + static_cast<int>(b);
      const auto& va = k.vertices()[a];
      const auto& vb = l.vertices()[b];
      r.pair_id[{va.id, vb.id}] = id;
      r.to_first[id] = va.id;
      r.to_second[id] = vb.id;
      vs.push_back({id, va.tag.empty() && vb.tag.empty() ? std::string{} : va.tag + "x" + vb.tag});
    }
  std::vector<Simplex> tops;
  for (const auto& s : k.facets())
    for (const auto& t : l.facets())
      staircase(s, t, [&](int a, int b) { return r.pair_id.at({a, b}); }, [&](const Simplex& x) { tops.push_back(x); });
  r.complex = SimplicialComplex::from_tops(std::move(vs), tops);
  return r;
}

struct GluingPair {
  int part_a = 0;
  std::vector<Simplex> region_a;  // generators of the subcomplex of part_a
  int part_b = 0;
  std::vector<Simplex> region_b;
  std::map<int, int> bijection;  // vertex of part_a -> vertex of part_b
};

using GluingTable = std::vector<GluingPair>;

struct GlueResult {
  SimplicialComplex complex;
  std::vector<std::map<int, int>> inclusions;  // per part: old vertex -> new vertex
};

inline GlueResult glue(const std::vector<SimplicialComplex>& parts, const GluingTable& table) {
  // Union-find over (part, vertex).
  std::vector<std::pair<int, int>> keys;
  std::map<std::pair<int, int>, int> key_index;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const auto& v : parts[p].vertices()) {
      key_index[{static_cast<int>(p), v.id}] = static_cast<int>(keys.size());
      keys.push_back({static_cast<int>(p), v.id});
    }
  std::vector<int> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (const auto& g : table) {
    if (g.part_a < 0 || g.part_b < 0 || g.part_a >= static_cast<int>(parts.size()) ||
        g.part_b >= static_cast<int>(parts.size()))
      throw TopologyError("gluing table references an unknown part");
    const auto& ka = parts[static_cast<std::size_t>(g.part_a)];
    const auto& kb = parts[static_cast<std::size_t>(g.part_b)];
    for (const auto& s : g.region_a)
      if (!ka.contains(s)) throw TopologyError("gluing region not in part " + std::to_string(g.part_a));
    for (const auto& s : g.region_b)
      if (!kb.contains(s)) throw TopologyError("gluing region not in part " + std::to_string(g.part_b));
    auto ra = ka.subcomplex(g.region_a);
    auto rb = kb.subcomplex(g.region_b);
    std::set<Simplex> image, target;
    for (int d = 0; d <= ra.dim(); ++d)
      for (const auto& s : ra.simplices(d)) {
        std::vector<int> ids;
        for (int id : s) {
          auto it = g.bijection.find(id);
          if (it == g.bijection.end()) throw TopologyError("gluing bijection undefined on vertex " + std::to_string(id));
          ids.push_back(it->second);
        }
        Simplex m(ids.begin(), ids.end());
        if (m.size() != s.size()) throw TopologyError("gluing map is not injective");
        image.insert(m);
      }
    for (int d = 0; d <= rb.dim(); ++d)
      for (const auto& s : rb.simplices(d)) target.insert(s);
    if (image != target) throw TopologyError("gluing regions are not isomorphic under the given bijection");
    for (const auto& [a, b] : g.bijection) unite(key_index.at({g.part_a, a}), key_index.at({g.part_b, b}));
  }

  GlueResult r;
  std::map<int, int> root_to_new;
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (!root_to_new.count(root)) {
      int id = static_cast<int>(root_to_new.size());
      root_to_new[root] = id;
      const auto& src = keys[static_cast<std::size_t>(root)];
      vs.push_back({id, parts[static_cast<std::size_t>(src.first)].find_vertex(src.second)->tag});
    }
  }
  r.inclusions.resize(parts.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    r.inclusions[static_cast<std::size_t>(keys[i].first)][keys[i].second] = root_to_new.at(find(static_cast<int>(i)));
  std::vector<Simplex> tops;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const auto& f : parts[p].facets()) {
      std::vector<int> ids;
      for (int id : f) ids.push_back(r.inclusions[p].at(id));
      Simplex m(ids.begin(), ids.end());
      if (m.size() != f.size()) throw TopologyError("gluing identifies two vertices of a simplex in part " + std::to_string(p));
      tops.push_back(m);
    }
  r.complex = SimplicialComplex::from_tops(std::move(vs), tops);
  return r;
}

struct Subdivision {
  SimplicialComplex complex;
  std::vector<Simplex> carrier;  // new vertex id -> simplex of the original
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  Subdivision r;
  std::unordered_map<Simplex, int, SimplexHash> id_of;
  std::vector<Vertex> vs;
  for (int d = 0; d <= k.dim(); ++d)
    for (const auto& s : k.simplices(d)) {
      int id = static_cast<int>(r.carrier.size());
      id_of[s] = id;
      r.carrier.push_back(s);
      vs.push_back({id, {}});
    }
  std::vector<Simplex> tops;
  for (const auto& f : k.facets()) {
    std::vector<int> order(f.begin(), f.end());
    do {
      std::vector<int> chain;
      std::vector<int> prefix;
      for (int x : order) {
        prefix.push_back(x);
        chain.push_back(id_of.at(Simplex(prefix.begin(), prefix.end())));
      }
      tops.push_back(Simplex(chain.begin(), chain.end()));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  r.complex = SimplicialComplex::from_tops(std::move(vs), tops);
  return r;
}

/// Lexicographically minimal relabeling of the facet list over all vertex
/// bijections that respect a degree-signature refinement. Exact but
/// exponential; refuses complexes with more than `max_vertices` vertices.
inline std::vector<Simplex> canonical_form(const SimplicialComplex& k, std::size_t max_vertices = 12) {
  const std::size_t n = k.num_vertices();
  if (n > max_vertices) throw TopologyError("canonical form refused: too many vertices");
  std::vector<int> ids;
  for (const auto& v : k.vertices()) ids.push_back(v.id);
  // Signature: count of facets of each dimension containing the vertex.
  std::map<int, std::vector<int>> sig;
  for (int id : ids) sig[id].assign(static_cast<std::size_t>(k.dim() + 1), 0);
  for (const auto& f : k.facets())
    for (int id : f) sig[id][static_cast<std::size_t>(f.dim())]++;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return sig[a] != sig[b] ? sig[a] < sig[b] : a < b; });
  // Blocks of equal signature may be permuted internally.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sig[ids[j]] == sig[ids[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<Simplex> best;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::unordered_map<int, int> label;
      for (std::size_t i = 0; i < n; ++i) label[ids[i]] = static_cast<int>(i);
      std::vector<Simplex> enc;
      for (const auto& f : k.facets()) {
        std::vector<int> m;
        for (int id : f) m.push_back(label[id]);
        enc.push_back(Simplex(m.begin(), m.end()));
      }
      std::sort(enc.begin(), enc.end());
      if (!have || enc < best) {
        best = std::move(enc);
        have = true;
      }
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(ids.begin() + static_cast<long>(lo), ids.begin() + static_cast<long>(hi));
    do {
      rec(b + 1);
    } while (std::next_permutation(ids.begin() + static_cast<long>(lo), ids.begin() + static_cast<long>(hi)));
  };
  rec(0);
  return best;
}

inline bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b, std::size_t max_vertices = 12) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return false;
  return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace bing
