#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bing/complex_ops.hpp"
#include "bing/grid.hpp"
#include "bing/thicken.hpp"

namespace bing {

inline const std::vector<std::string>& y3_piece_labels() {
  static const std::vector<std::string> labels{"1", "2", "3", "4", "5", "6-", "6+", "7", "8"};
  return labels;
}

namespace detail {

/// Lattice model of S^3 x [-T, T]. S^3 is a lattice box coned off at a point
/// at infinity; the interval factor is a path of unit steps, and the product
/// carries the staircase triangulation.
///
/// In the box: a slab handlebody with two holes, a ring around each hole
/// inside the slab (deleted circle neighborhoods at levels +-L), a ring in
/// each hole column (deleted at level 0), the bridge regions joining ring
/// pairs one level above, and the annuli between ring pairs.
struct Y3Layout {
  Grid3 g{{24, 13, 6}};
  int T = 4;
  int L = 1;

  CubeSet all, hin, v1, v2, v3, v4, u1, u2;
  std::vector<Point3> a13, a24;  // z-normal unit squares

  Y3Layout() {
    all = box({0, 0, 0}, g.n);
    hin = box({1, 1, 1}, {23, 12, 5}) - box({4, 4, 1}, {10, 9, 5}) - box({14, 4, 1}, {20, 9, 5});
    auto ring = [](int x0, int y0, int x1, int y1) {
      return box({x0, y0, 2}, {x1, y1, 4}) - box({x0 + 1, y0 + 1, 2}, {x1 - 1, y1 - 1, 4});
    };
    v1 = ring(2, 2, 12, 11);
    v2 = ring(12, 2, 22, 11);
    v3 = ring(5, 5, 9, 8);
    v4 = ring(15, 5, 19, 8);
    u1 = box({2, 2, 2}, {12, 11, 4}) - box({6, 6, 2}, {8, 7, 4});
    u2 = box({12, 2, 2}, {22, 11, 4}) - box({16, 6, 2}, {18, 7, 4});
    auto annulus = [](int dx) {
      std::vector<Point3> s;
      for (int x = 3; x < 11; ++x)
        for (int y = 3; y < 10; ++y)
          if (!(x >= 5 && x < 9 && y >= 5 && y < 8)) s.push_back({x + dx, y, 3});
      return s;
    };
    a13 = annulus(0);
    a24 = annulus(10);
  }

  int inf() const { return g.vertex_count(); }
  int nt() const { return 2 * T + 1; }
  int id(int s, int t) const { return s * nt() + t + T; }
  int s_of(int id) const { return id / nt(); }
  int t_of(int id) const { return id % nt() - T; }

  std::string tag(int id) const {
    int s = s_of(id);
    std::string base = "inf";
    if (s != inf()) {
      auto p = g.point(s);
      base = std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]);
    }
    return base + "@" + std::to_string(t_of(id));
  }

  std::vector<Simplex> tets(const CubeSet& cubes) const {
    std::vector<Simplex> out;
    for (const auto& c : cubes) kuhn_tets(g, c, [&](const Simplex& s) { out.push_back(s); });
    return out;
  }

  std::vector<Simplex> cone_tets() const {
    std::vector<Simplex> out;
    for (const auto& [p, axis] : boundary_squares(all)) {
      int i = (axis + 1) % 3, j = (axis + 2) % 3;
      if (i > j) std::swap(i, j);
      square_triangles(g, p, i, j, [&](const Simplex& s) { out.push_back(s.with(inf())); });
    }
    return out;
  }

  std::vector<Simplex> triangles(const std::vector<std::pair<Point3, int>>& squares) const {
    std::vector<Simplex> out;
    for (const auto& [p, axis] : squares) {
      int i = (axis + 1) % 3, j = (axis + 2) % 3;
      if (i > j) std::swap(i, j);
      square_triangles(g, p, i, j, [&](const Simplex& s) { out.push_back(s); });
    }
    return out;
  }

  Simplex at_level(const Simplex& s, int t) const {
    std::vector<int> ids;
    for (int v : s) ids.push_back(id(v, t));
    return Simplex(ids.begin(), ids.end());
  }

  /// Staircase cells of s x [t0, t1].
  template <typename Fn>
  void prism(const Simplex& s, int t0, int t1, Fn&& fn) const {
    for (int t = t0; t < t1; ++t) staircase(s, Simplex{t, t + 1}, [&](int a, int b) { return id(a, b); }, fn);
  }

  /// The S^3 cube carrying an ambient top cell, or nullopt for a coned cell.
  std::optional<Point3> cube_of(const Simplex& sigma) const {
    Point3 lo{1 << 20, 1 << 20, 1 << 20};
    for (int v : sigma) {
      int s = s_of(v);
      if (s == inf()) return std::nullopt;
      auto p = g.point(s);
      for (std::size_t a = 0; a < 3; ++a) lo[a] = std::min(lo[a], p[a]);
    }
    return lo;
  }

  int level_of(const Simplex& sigma) const {
    int t = T;
    for (int v : sigma) t = std::min(t, t_of(v));
    return t;
  }
};

}  // namespace detail

/// One of the two copies of a piece inside the source sphere.
struct PieceCopy {
  std::string label;
  char chunk = '?';
  std::vector<Simplex> tops;  // source top cells
};

/// How the 18 piece copies tile the source: which piece each copy covers
/// and which chunk (central body, or one of the two solid tori) it lies in.
struct AssemblyPlan {
  std::vector<PieceCopy> copies;
  std::map<std::string, int> usage;
  std::vector<Simplex> central_caps;  // closes the central chunk
};

struct Y3 {
  std::shared_ptr<const SimplicialComplex> y;
  std::shared_ptr<const SimplicialComplex> m;
  SimplicialMap f;
  std::vector<Side> sides;
  std::vector<Simplex> side_tops;
  AssemblyPlan plan;
};

namespace detail {

struct Y3Pieces {
  std::vector<Simplex> tops;
  std::vector<std::string> labels;
  std::set<std::pair<Point3, int>> q_up, q_down;  // (cube, lower level) cells inside the tubes
  std::vector<ExtraCell> caps;
};

inline Y3Pieces y3_pieces(const Y3Layout& lay) {
  Y3Pieces p;
  const int L = lay.L;
  auto add = [&](const Simplex& s, const std::string& label) {
    p.tops.push_back(s);
    p.labels.push_back(label);
  };
  for (const auto& s : lay.tets(lay.hin - lay.v1)) add(lay.at_level(s, L), "1");
  for (const auto& s : lay.tets(lay.hin - lay.v2)) add(lay.at_level(s, -L), "2");
  auto outside = lay.tets(lay.all - lay.hin - lay.v3 - lay.v4);
  for (const auto& s : lay.cone_tets()) outside.push_back(s);
  for (const auto& s : outside) add(lay.at_level(s, 0), "3");

  std::vector<std::pair<Point3, int>> sigma_sq = boundary_squares(lay.hin);
  for (const auto& tri : lay.triangles(sigma_sq)) {
    lay.prism(tri, -L, 0, [&](const Simplex& s) { add(s, "6-"); });
    lay.prism(tri, 0, L, [&](const Simplex& s) { add(s, "6+"); });
  }

  // Tubes: boundary of a 4-dimensional region minus its two floor caps.
  auto tube = [&](const CubeSet& inner, const CubeSet& hole, const CubeSet& bridge, int dir, auto& cells,
                  const std::string& label) {
    auto put = [&](const CubeSet& cs, int t0, int t1) {
      for (const auto& c : cs)
        for (int t = std::min(t0, t1); t < std::max(t0, t1); ++t) cells.insert({c, t});
    };
    put(inner, dir * L, dir * (L + 1));
    put(bridge, dir * (L + 1), dir * (L + 2));
    put(hole, 0, dir * (L + 1));
    std::unordered_map<Simplex, int, SimplexHash> count;
    for (const auto& [c, t] : cells)
      kuhn_tets(lay.g, c, [&](const Simplex& tet) {
        lay.prism(tet, t, t + 1, [&](const Simplex& s) {
          for (std::size_t i = 0; i < s.size(); ++i) ++count[s.facet(i)];
        });
      });
    std::unordered_set<Simplex, SimplexHash> caps;
    for (const auto& s : lay.tets(inner)) caps.insert(lay.at_level(s, dir * L));
    for (const auto& s : lay.tets(hole)) caps.insert(lay.at_level(s, 0));
    std::vector<Simplex> wall;
    std::size_t capped = 0;
    for (const auto& [f, n] : count) {
      if (n != 1) continue;
      if (caps.count(f)) {
        ++capped;
        continue;
      }
      wall.push_back(f);
    }
    if (capped != caps.size()) throw TopologyError("tube " + label + " does not end on its floor holes");
    std::sort(wall.begin(), wall.end());
    for (const auto& s : wall) add(s, label);
  };
  tube(lay.v1, lay.v3, lay.u1, +1, p.q_up, "4");
  tube(lay.v2, lay.v4, lay.u2, -1, p.q_down, "5");

  // Hoops: annuli between ring pairs, swept from the floors to the bridge.
  auto hoop = [&](const std::vector<Point3>& squares, int dir, const std::string& label) {
    std::vector<std::pair<Point3, int>> in, out;
    for (const auto& q : squares) (lay.hin.count(q) ? in : out).push_back({q, 2});
    for (const auto& tri : lay.triangles(in))
      lay.prism(tri, std::min(dir * L, dir * (L + 1)), std::max(dir * L, dir * (L + 1)), [&](const Simplex& s) { add(s, label); });
    for (const auto& tri : lay.triangles(out))
      lay.prism(tri, std::min(0, dir * (L + 1)), std::max(0, dir * (L + 1)), [&](const Simplex& s) { add(s, label); });
  };
  hoop(lay.a13, +1, "7");
  hoop(lay.a24, -1, "8");

  // Caps over the deleted ring neighborhoods of the central chunk.
  auto cap = [&](const CubeSet& ring, int t, int below) {
    for (const auto& tet : lay.tets(ring)) {
      Simplex cell = lay.at_level(tet, t);
      lay.prism(tet, std::min(t, t + below), std::max(t, t + below), [&](const Simplex& s) {
        if (cell.is_face_of(s)) p.caps.push_back({cell, s});
      });
    }
  };
  cap(lay.v1, L, -1);
  cap(lay.v2, -L, +1);
  return p;
}

/// Chunk of an ambient top cell: 'A' inside the central slab x [-L, L],
/// 'B' below the floors or inside the upper tube, 'C' above the floors or
/// inside the lower tube.
inline char chunk_of(const Y3Layout& lay, const Y3Pieces& p, const Simplex& sigma) {
  int t = lay.level_of(sigma);
  auto c = lay.cube_of(sigma);
  if (c) {
    if (p.q_up.count({*c, t})) return 'B';
    if (p.q_down.count({*c, t})) return 'C';
  }
  if (c && lay.hin.count(*c)) {
    if (t >= lay.L) return 'C';
    if (t < -lay.L) return 'B';
    return 'A';
  }
  return t >= 0 ? 'C' : 'B';
}

}  // namespace detail

/// Ambient vertex stars of the lattice model of S^3 x [-T, T].
inline AmbientStar y3_ambient(const detail::Y3Layout& lay) {
  std::vector<Simplex> s3 = lay.tets(lay.all);
  for (const auto& s : lay.cone_tets()) s3.push_back(s);
  auto sphere = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_tops(s3));
  return [sphere, &lay](int v) {
    int s = lay.s_of(v), t = lay.t_of(v);
    std::vector<Simplex> out;
    for (int fi : sphere->facets_at(s)) {
      const auto& tet = sphere->facets()[static_cast<std::size_t>(fi)];
      for (int t0 : {t - 1, t}) {
        if (t0 < -lay.T || t0 + 1 > lay.T) continue;
        lay.prism(tet, t0, t0 + 1, [&](const Simplex& x) {
          if (x.contains(v)) out.push_back(x);
        });
      }
    }
    return out;
  };
}

inline Y3 build_y3() {
  static const detail::Y3Layout lay;
  auto pieces = detail::y3_pieces(lay);

  std::vector<Vertex> vs;
  {
    std::set<int> ids;
    for (const auto& s : pieces.tops) ids.insert(s.begin(), s.end());
    for (int id : ids) vs.push_back({id, lay.tag(id)});
  }
  auto y = SimplicialComplex::from_tops(std::move(vs), pieces.tops);
  if (y.count(3) != pieces.tops.size()) throw TopologyError("pieces of Y overlap");
  std::vector<std::string> labels(y.count(3));
  for (std::size_t i = 0; i < pieces.tops.size(); ++i)
    labels[static_cast<std::size_t>(y.index_of(pieces.tops[i]))] = pieces.labels[i];
  y.set_top_labels(labels);

  Y3 out;
  out.y = std::make_shared<const SimplicialComplex>(std::move(y));
  auto th = thicken(out.y, y3_ambient(lay), pieces.caps);
  out.m = th.source;
  out.f = th.map;
  out.sides = th.sides;
  out.side_tops = th.side_tops;
  out.plan.central_caps = th.extra_tops;

  // Split the two sides of each piece into copies: connected components of
  // its side cells under adjacency in the source.
  std::map<std::string, std::vector<int>> by_label;
  for (std::size_t i = 0; i < th.sides.size(); ++i)
    by_label[labels[static_cast<std::size_t>(th.sides[i].top)]].push_back(static_cast<int>(i));
  for (auto& [label, idx] : by_label) {
    std::vector<int> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    std::unordered_map<Simplex, int, SimplexHash> first;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& s = th.side_tops[static_cast<std::size_t>(idx[k])];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto [it, fresh] = first.emplace(s.facet(i), static_cast<int>(k));
        if (!fresh) parent[static_cast<std::size_t>(find(static_cast<int>(k)))] = find(it->second);
      }
    }
    std::map<int, PieceCopy> comps;
    std::map<int, std::vector<int>> c_sides;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto& c = comps[find(static_cast<int>(k))];
      c.label = label;
      c.tops.push_back(th.side_tops[static_cast<std::size_t>(idx[k])]);
      c_sides[find(static_cast<int>(k))].push_back(idx[k]);
    }
    for (auto& [r, c] : comps) {
      std::set<char> chunks;
      for (int sdx : c_sides[r]) chunks.insert(detail::chunk_of(lay, pieces, th.sides[static_cast<std::size_t>(sdx)].cell));
      if (chunks.size() != 1) throw TopologyError("copy of piece " + label + " spans several chunks");
      c.chunk = *chunks.begin();
      ++out.plan.usage[label];
      out.plan.copies.push_back(std::move(c));
    }
  }
  std::sort(out.plan.copies.begin(), out.plan.copies.end(),
            [](const PieceCopy& a, const PieceCopy& b) { return std::tie(a.label, a.chunk) < std::tie(b.label, b.chunk); });
  return out;
}

}  // namespace bing
