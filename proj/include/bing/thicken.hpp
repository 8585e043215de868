#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bing/map.hpp"

namespace bing {

/// Top simplices of a triangulated manifold containing a given vertex.
using AmbientStar = std::function<std::vector<Simplex>(int)>;

inline AmbientStar star_of(std::shared_ptr<const SimplicialComplex> ambient) {
  return [ambient](int v) {
    std::vector<Simplex> out;
    for (int i : ambient->facets_at(v)) out.push_back(ambient->facets()[static_cast<std::size_t>(i)]);
    return out;
  };
}

/// A top cell of the spine together with one of its two ambient sides.
struct Side {
  int top = 0;    // index into spine top cells
  Simplex cell;   // ambient top simplex on this side
};

/// Boundary of a regular neighborhood of a codimension-one spine, read off
/// from the ambient triangulation. Near each spine vertex v the ambient star
/// minus the spine splits into local chambers; the boundary has one vertex
/// per (v, chamber) and one top cell per (spine top cell, side).
struct Thickening {
  std::shared_ptr<const SimplicialComplex> source;
  SimplicialMap map;                      // source -> spine
  std::vector<Side> sides;                // aligned with source top order below
  std::vector<Simplex> side_tops;         // source top cell of each side
  std::map<std::pair<int, int>, int> vertex_of;  // (spine vertex, chamber) -> source vertex
  std::vector<Simplex> extra_tops;        // images of the requested extra cells
};

/// A cell of the ambient, not in the spine, seen from one adjacent top cell.
/// Its vertices must be spine vertices.
struct ExtraCell {
  Simplex cell;
  Simplex side;
};

namespace detail {

inline std::vector<int> chambers(const std::vector<Simplex>& star, int v,
                                 const std::unordered_set<Simplex, SimplexHash>& spine_tops) {
  std::vector<int> parent(star.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  std::unordered_map<Simplex, int, SimplexHash> first;
  for (std::size_t i = 0; i < star.size(); ++i)
    for (std::size_t k = 0; k < star[i].size(); ++k) {
      if (star[i][k] == v) continue;
      auto f = star[i].facet(k);
      if (spine_tops.count(f)) continue;
      auto [it, fresh] = first.emplace(f, static_cast<int>(i));
      if (!fresh) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(it->second);
    }
  std::vector<int> out(star.size());
  std::map<int, int> renum;
  for (std::size_t i = 0; i < star.size(); ++i) {
    int r = find(static_cast<int>(i));
    auto it = renum.emplace(r, static_cast<int>(renum.size())).first;
    out[i] = it->second;
  }
  return out;
}

}  // namespace detail

/// `spine` must be pure of dimension d and lie in the interior of a
/// (d+1)-manifold whose vertex stars are given by `star`.
inline Thickening thicken(std::shared_ptr<const SimplicialComplex> spine, const AmbientStar& star,
                          const std::vector<ExtraCell>& extra = {}) {
  const int d = spine->dim();
  const auto& tops = spine->simplices(d);
  std::unordered_set<Simplex, SimplexHash> spine_tops(tops.begin(), tops.end());

  // Two ambient cofaces of each spine top.
  std::vector<std::array<Simplex, 2>> cof(tops.size());
  {
    int last = -1;
    std::vector<Simplex> st;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (tops[i][0] != last) {
        last = tops[i][0];
        st = star(last);
      }
      int n = 0;
      for (const auto& s : st)
        if (tops[i].is_face_of(s)) {
          if (n == 2) throw TopologyError("spine cell meets the ambient in more than two top cells");
          cof[i][static_cast<std::size_t>(n++)] = s;
        }
      if (n != 2) throw TopologyError("spine cell is not interior to the ambient manifold");
    }
  }

  // Chamber of each side at each of its vertices.
  std::vector<std::array<std::array<int, 8>, 2>> chamber(tops.size());
  std::vector<std::array<int, 8>> extra_chamber(extra.size());
  std::unordered_map<int, std::vector<std::size_t>> extra_at;
  for (std::size_t e = 0; e < extra.size(); ++e)
    for (int w : extra[e].cell) extra_at[w].push_back(e);
  Thickening t;
  std::vector<Vertex> vs;
  for (const auto& vert : spine->vertices()) {
    int v = vert.id;
    auto st = star(v);
    auto ch = detail::chambers(st, v, spine_tops);
    std::unordered_map<Simplex, int, SimplexHash> at(st.size() * 2);
    for (std::size_t i = 0; i < st.size(); ++i) at.emplace(st[i], ch[i]);
    std::set<int> used;
    for (int fi : spine->facets_at(v)) {
      const auto& s = spine->facets()[static_cast<std::size_t>(fi)];
      std::size_t ti = static_cast<std::size_t>(spine->index_of(s));
      auto pos = static_cast<std::size_t>(s.position(v));
      for (std::size_t side = 0; side < 2; ++side) {
        int c = at.at(cof[ti][side]);
        chamber[ti][side][pos] = c;
        used.insert(c);
      }
    }
    if (auto it = extra_at.find(v); it != extra_at.end())
      for (std::size_t e : it->second) {
        auto found = at.find(extra[e].side);
        if (found == at.end()) throw TopologyError("extra cell side does not contain its vertex");
        extra_chamber[e][static_cast<std::size_t>(extra[e].cell.position(v))] = found->second;
      }
    for (int c : used) {
      int id = static_cast<int>(vs.size());
      t.vertex_of[{v, c}] = id;
      vs.push_back({id, vert.tag.empty() ? std::to_string(v) + "/" + std::to_string(c) : vert.tag + "/" + std::to_string(c)});
      t.map.vertex_map[id] = v;
    }
  }

  for (std::size_t i = 0; i < tops.size(); ++i)
    for (std::size_t side = 0; side < 2; ++side) {
      std::vector<int> ids;
      for (std::size_t k = 0; k < tops[i].size(); ++k) ids.push_back(t.vertex_of.at({tops[i][k], chamber[i][side][k]}));
      t.side_tops.push_back(Simplex(ids.begin(), ids.end()));
      t.sides.push_back({static_cast<int>(i), cof[i][side]});
    }
  for (std::size_t e = 0; e < extra.size(); ++e) {
    std::vector<int> ids;
    for (std::size_t k = 0; k < extra[e].cell.size(); ++k) {
      auto it = t.vertex_of.find({extra[e].cell[k], extra_chamber[e][k]});
      if (it == t.vertex_of.end()) throw TopologyError("extra cell reaches a chamber with no boundary vertex");
      ids.push_back(it->second);
    }
    t.extra_tops.push_back(Simplex(ids.begin(), ids.end()));
  }
  t.source = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_tops(std::move(vs), t.side_tops));
  t.map.source = t.source;
  t.map.target = spine;
  return t;
}

}  // namespace bing
